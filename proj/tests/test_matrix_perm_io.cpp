#include "doctest.h"

#include <sstream>

#include "helpers.hpp"
#include "ranklab/io.hpp"

using namespace ranklab;
using tst::mat;

TEST_CASE("views window the matrix and bounds are checked") {
    PrimeField f(7);
    Mat a(f, 3, 4);
    CHECK(a.view(0, 3, 0, 4).rows() == 3);
    CHECK(a.view(1, 1, 0, 4).rows() == 0); // degenerate is legal
    CHECK_THROWS_AS(a.view(0, 4, 0, 4), BoundsError);
    CHECK_THROWS_AS(a.view(2, 1, 0, 4), BoundsError);

    auto v = a.view(1, 3, 1, 4);
    v(0, 0) = 5;
    CHECK(a(1, 1) == 5);

    CHECK(a.view(0, 2, 0, 2).overlaps(a.view(1, 3, 1, 3)));
    CHECK_FALSE(a.view(0, 2, 0, 2).overlaps(a.view(0, 2, 2, 4)));
    Mat b(f, 3, 4);
    CHECK_FALSE(a.view().overlaps(b.view()));
}

TEST_CASE("row-major flat layout is fixed") {
    PrimeField f(11);
    Mat a(f, 2, 3);
    a(1, 2) = 9;
    CHECK(a.raw_data()[1 * 3 + 2] == 9);
}

TEST_CASE("column action: new column j is old column sigma(j)") {
    PrimeField f(7);
    Mat a = mat(f, {{1, 2, 3}});
    Perm p(std::vector<std::uint32_t>{1, 2, 0});
    Mat got = tst::apply_cols_copy(a, p, false);
    CHECK(got == mat(f, {{2, 3, 1}}));

    // Against the explicit 0/1 matrix: A*P^T.
    Mat pt = tst::transpose(perm_matrix(p, f));
    CHECK(naive_mm(a.view(), pt.view()) == got);

    // Applying the inverse restores the original bit-exactly.
    perm_apply_cols(got.view(), p, true);
    CHECK(got == a);
}

TEST_CASE("row action matches the explicit permutation matrix") {
    PrimeField f(7);
    Mat a = mat(f, {{1}, {2}, {3}});
    Perm t02 = Perm::transposition(0, 2, 3);
    Mat got = tst::apply_rows_copy(a, t02, false);
    CHECK(got == mat(f, {{3}, {2}, {1}}));

    SplitMix64 rng(7);
    PrimeField f11(11);
    for (int trial = 0; trial < 20; ++trial) {
        Mat m = random_matrix(4, 4, rng.next(), f11);
        std::vector<std::uint32_t> s{0, 1, 2, 3};
        for (std::size_t i = 4; i > 1; --i) std::swap(s[i - 1], s[rng.below(i)]);
        Perm p(s);
        CHECK(naive_mm(perm_matrix(p, f11).view(), m.view()) ==
              tst::apply_rows_copy(m, p, false));
        CHECK(naive_mm(m.view(), tst::transpose(perm_matrix(p, f11)).view()) ==
              tst::apply_cols_copy(m, p, false));
    }
}

TEST_CASE("compose, sign and embedding") {
    Perm id(4);
    Perm p(std::vector<std::uint32_t>{2, 0, 3, 1});
    CHECK(perm_compose(p, id) == p);
    CHECK(perm_compose(id, p) == p);
    CHECK(Perm::transposition(0, 1, 4).sign() == -1);
    CHECK(id.sign() == 1);

    // Matrix-product semantics of compose.
    PrimeField f(5);
    Perm q(std::vector<std::uint32_t>{1, 3, 0, 2});
    CHECK(perm_matrix(perm_compose(p, q), f) ==
          naive_mm(perm_matrix(p, f).view(), perm_matrix(q, f).view()));

    // sign is multiplicative; oracle: brute-force inversion count.
    auto sign_by_inversions = [](const Perm& s) {
        int inv = 0;
        for (std::size_t i = 0; i < s.order(); ++i)
            for (std::size_t j = i + 1; j < s.order(); ++j)
                if (s[i] > s[j]) ++inv;
        return inv % 2 == 0 ? 1 : -1;
    };
    SplitMix64 rng(3);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint32_t> s1{0, 1, 2, 3, 4, 5}, s2{0, 1, 2, 3, 4, 5};
        for (std::size_t i = 6; i > 1; --i) std::swap(s1[i - 1], s1[rng.below(i)]);
        for (std::size_t i = 6; i > 1; --i) std::swap(s2[i - 1], s2[rng.below(i)]);
        Perm a(s1), b(s2);
        CHECK(a.sign() == sign_by_inversions(a));
        CHECK(perm_compose(a, b).sign() == a.sign() * b.sign());
    }

    Perm e = Perm::transposition(0, 1, 2).embed_at(1, 4);
    CHECK(e[0] == 0);
    CHECK(e[1] == 2);
    CHECK(e[2] == 1);
    CHECK(e[3] == 3);
}

TEST_CASE("matrix text format round-trips byte-exactly") {
    PrimeField f(7);
    Mat a = mat(f, {{0, 1, 6}, {3, 0, 5}});
    std::ostringstream out;
    write_matrix(out, a.view());
    CHECK(out.str() == "2 3 7\n0 1 6\n3 0 5\n");
    std::istringstream in(out.str());
    CHECK(read_matrix(in) == a);
}

TEST_CASE("parser diagnostics carry line and column") {
    auto expect_fail = [](const std::string& text, std::size_t line) {
        std::istringstream in(text);
        try {
            read_matrix(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_fail("x 3 7\n", 1);
    expect_fail("2 3\n", 1);
    expect_fail("2 3 8\n0 0 0\n0 0 0\n", 1);        // composite modulus
    expect_fail("1 3 7\n0 9 0\n", 2);               // entry out of range
    expect_fail("2 3 7\n0 0 0\n", 3);               // missing row
    expect_fail("1 2 7\n0  1\n", 2);                // double space
    expect_fail("1 2 7\n0 1 \n", 2);                // trailing whitespace

    std::istringstream ok("0 4 5\n");
    Mat e = read_matrix(ok);
    CHECK(e.rows() == 0);
    CHECK(e.cols() == 4);
}
