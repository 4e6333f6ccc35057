#pragma once

#include <cstdint>
#include <optional>

#include "ranklab/errors.hpp"

namespace ranklab {

// Canonical representative of a GF(p) element, always in [0, p).
using Elem = std::uint32_t;

// Tallies of field operations, one bucket per kind. A counter is owned by
// the caller and threaded through every kernel; the library never keeps a
// global one, so counts stay deterministic under any threading scheme.
struct OpCounter {
    std::uint64_t n_mul = 0;    // multiplications
    std::uint64_t n_addsub = 0; // additions, subtractions, negations
    std::uint64_t n_divinv = 0; // divisions and inversions
    std::uint64_t n_ztest = 0;  // comparisons with zero

    std::uint64_t arith_total() const { return n_mul + n_addsub + n_divinv; }
    std::uint64_t full_total() const { return arith_total() + n_ztest; }

    void reset() { *this = OpCounter{}; }

    OpCounter& operator+=(const OpCounter& o) {
        n_mul += o.n_mul;
        n_addsub += o.n_addsub;
        n_divinv += o.n_divinv;
        n_ztest += o.n_ztest;
        return *this;
    }
};

enum class FieldOp { Add, Sub, Mul, Neg, Inv, Div, IsZero };

// Arithmetic context for GF(p), p a word-size prime in [2, 2^31).
// The bound keeps every product of canonical representatives inside an
// unsigned 64-bit intermediate, and sums inside 32 bits.
//
// Each operation charges exactly one counter bucket: add/sub/neg -> n_addsub,
// mul -> n_mul, inv/div -> n_divinv, is_zero -> n_ztest. A division is one
// field operation no matter how many Euclid steps it takes internally.
class PrimeField {
public:
    // Validates primality with deterministic Miller-Rabin (witness set good
    // for all 64-bit inputs). Throws ModulusOutOfRange or NotPrime.
    explicit PrimeField(std::uint64_t p);

    std::uint32_t modulus() const { return p_; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ > 1 ? 1 : 0; }

    // Reduce an arbitrary unsigned value to its canonical representative.
    // Not a counted field operation (used by generators and parsers).
    Elem reduce(std::uint64_t v) const { return static_cast<Elem>(v % p_); }

    Elem add(Elem a, Elem b, OpCounter& c) const {
        ++c.n_addsub;
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    Elem sub(Elem a, Elem b, OpCounter& c) const {
        ++c.n_addsub;
        return a >= b ? a - b : a + (p_ - b);
    }

    Elem neg(Elem a, OpCounter& c) const {
        ++c.n_addsub;
        return a == 0 ? 0 : p_ - a;
    }

    Elem mul(Elem a, Elem b, OpCounter& c) const {
        ++c.n_mul;
        return static_cast<Elem>(std::uint64_t(a) * b % p_);
    }

    // Extended Euclid; charges a single n_divinv. Throws DivisionByZero.
    Elem inv(Elem a, OpCounter& c) const {
        ++c.n_divinv;
        return inv_uncounted(a);
    }

    Elem div(Elem a, Elem b, OpCounter& c) const {
        ++c.n_divinv;
        return static_cast<Elem>(std::uint64_t(a) * inv_uncounted(b) % p_);
    }

    bool is_zero(Elem a, OpCounter& c) const {
        ++c.n_ztest;
        return a == 0;
    }

    // Uniform dispatch over the seven operations; IsZero yields 0 or 1.
    Elem arith(FieldOp op, Elem a, std::optional<Elem> b, OpCounter& c) const;

private:
    Elem inv_uncounted(Elem a) const;

    std::uint32_t p_;
};

// Factory matching the error contract: prime and 2 <= p < 2^31.
inline PrimeField ff_new(std::uint64_t p) { return PrimeField(p); }

// Deterministic Miller-Rabin usable on any 64-bit input.
bool is_prime_u64(std::uint64_t n);

} // namespace ranklab
