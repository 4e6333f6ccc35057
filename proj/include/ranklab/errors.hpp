#pragma once

#include <stdexcept>
#include <string>

namespace ranklab {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(std::uint64_t p)
        : Error("modulus " + std::to_string(p) + " is not prime") {}
};

struct ModulusOutOfRange : Error {
    explicit ModulusOutOfRange(std::uint64_t p)
        : Error("modulus " + std::to_string(p) + " outside [2, 2^31)") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division or inversion of zero") {}
};

struct BoundsError : Error {
    explicit BoundsError(const std::string& msg) : Error("bounds: " + msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg)
        : Error("dimension mismatch: " + msg) {}
};

struct OverlapError : Error {
    explicit OverlapError(const std::string& msg) : Error("operand overlap: " + msg) {}
};

struct SingularDiagonal : Error {
    explicit SingularDiagonal(std::size_t idx)
        : Error("zero diagonal entry at index " + std::to_string(idx)) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

struct MalformedPacked : Error {
    explicit MalformedPacked(const std::string& msg)
        : Error("malformed packed layout: " + msg) {}
};

struct RankOutOfRange : Error {
    explicit RankOutOfRange(const std::string& msg) : Error("rank: " + msg) {}
};

// Parse failures carry a 1-based line/column position of the offending token.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(std::size_t line_, std::size_t col_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(col_) +
                ": " + msg),
          line(line_), column(col_) {}
};

} // namespace ranklab
