#include "ranklab/io.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ranklab {

namespace {

struct LineLexer {
    const std::string& s;
    std::size_t line_no;
    std::size_t pos = 0;

    // Column numbers are 1-based character positions.
    std::uint64_t next_uint(const char* what) {
        if (pos >= s.size() || s[pos] == ' ')
            throw ParseError(line_no, pos + 1, std::string("expected ") + what);
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < s.size() && s[pos] != ' ') {
            char ch = s[pos];
            if (ch < '0' || ch > '9')
                throw ParseError(line_no, pos + 1,
                                 std::string("invalid character in ") + what);
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            if (v > std::numeric_limits<std::uint64_t>::max() / 16)
                throw ParseError(line_no, start + 1, std::string(what) + " too large");
            ++pos;
        }
        return v;
    }

    void expect_space(const char* after) {
        if (pos >= s.size() || s[pos] != ' ')
            throw ParseError(line_no, pos + 1,
                             std::string("expected single space after ") + after);
        ++pos;
        if (pos < s.size() && s[pos] == ' ')
            throw ParseError(line_no, pos + 1, "double space");
    }

    void expect_end() {
        if (pos != s.size())
            throw ParseError(line_no, pos + 1, "trailing characters");
    }
};

std::string get_line(std::istream& in, std::size_t line_no) {
    std::string s;
    if (!std::getline(in, s)) throw ParseError(line_no, 1, "unexpected end of input");
    if (!s.empty() && s.back() == '\r')
        throw ParseError(line_no, s.size(), "carriage return (file must be LF-only)");
    return s;
}

} // namespace

Mat read_matrix(std::istream& in) {
    std::string header = get_line(in, 1);
    LineLexer hl{header, 1};
    std::uint64_t m = hl.next_uint("row count");
    hl.expect_space("row count");
    std::uint64_t n = hl.next_uint("column count");
    hl.expect_space("column count");
    std::uint64_t p = hl.next_uint("modulus");
    hl.expect_end();

    if (m > (1u << 20) || n > (1u << 20) || m * n > (1u << 28))
        throw ParseError(1, 1, "matrix dimensions too large");

    PrimeField f = [&] {
        try {
            return PrimeField(p);
        } catch (const Error& e) {
            throw ParseError(1, 1, e.what());
        }
    }();

    Mat a(f, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m; ++i) {
        std::string row = get_line(in, i + 2);
        LineLexer lx{row, i + 2};
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) lx.expect_space("entry");
            std::size_t col = lx.pos + 1;
            std::uint64_t v = lx.next_uint("entry");
            if (v >= p)
                throw ParseError(i + 2, col,
                                 "entry " + std::to_string(v) + " not in [0, " +
                                     std::to_string(p) + ")");
            a(i, j) = static_cast<Elem>(v);
        }
        lx.expect_end();
    }
    return a;
}

Mat read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, ConstMatView a) {
    out << a.rows() << ' ' << a.cols() << ' ' << a.field().modulus() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0) out << ' ';
            out << a(i, j);
        }
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, ConstMatView a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_matrix(out, a);
    if (!out) throw Error("write to " + path + " failed");
}

} // namespace ranklab
