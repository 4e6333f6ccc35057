#include "doctest.h"

#include "ranklab/field.hpp"
#include "ranklab/reference.hpp"

using namespace ranklab;

TEST_CASE("field construction validates the modulus") {
    CHECK(PrimeField(7).modulus() == 7);
    CHECK(PrimeField(2).modulus() == 2);
    CHECK_THROWS_AS(PrimeField(8), NotPrime);
    CHECK_THROWS_AS(PrimeField(1), ModulusOutOfRange);
    CHECK_THROWS_AS(PrimeField(0), ModulusOutOfRange);
    CHECK_THROWS_AS(PrimeField(1ull << 31), ModulusOutOfRange);
    // Largest admissible modulus: the Mersenne prime 2^31 - 1.
    CHECK(PrimeField(2147483647u).modulus() == 2147483647u);
    CHECK_THROWS_AS(PrimeField(2147483646u), NotPrime);
}

TEST_CASE("basic arithmetic values") {
    OpCounter c;
    PrimeField f7(7);
    CHECK(f7.mul(3, 5, c) == 1);
    CHECK(f7.add(4, 5, c) == 2);
    CHECK(f7.sub(2, 5, c) == 4);
    CHECK(f7.neg(3, c) == 4);
    CHECK(f7.neg(0, c) == 0);
    PrimeField f5(5);
    CHECK(f5.inv(2, c) == 3);
    CHECK(f5.div(4, 2, c) == 2);
    CHECK_THROWS_AS(f7.div(4, 0, c), DivisionByZero);
    CHECK_THROWS_AS(f7.inv(0, c), DivisionByZero);
}

TEST_CASE("every arith call charges exactly one bucket") {
    PrimeField f(11);
    for (FieldOp op : {FieldOp::Add, FieldOp::Sub, FieldOp::Mul, FieldOp::Neg,
                       FieldOp::Inv, FieldOp::Div, FieldOp::IsZero}) {
        OpCounter c;
        f.arith(op, 4, 3, c);
        CHECK(c.full_total() == 1);
        switch (op) {
        case FieldOp::Add:
        case FieldOp::Sub:
        case FieldOp::Neg: CHECK(c.n_addsub == 1); break;
        case FieldOp::Mul: CHECK(c.n_mul == 1); break;
        case FieldOp::Inv:
        case FieldOp::Div: CHECK(c.n_divinv == 1); break;
        case FieldOp::IsZero: CHECK(c.n_ztest == 1); break;
        }
    }
}

TEST_CASE("field axioms, exhaustive for tiny p and sampled for a large one") {
    OpCounter c;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (Elem a = 0; a < p; ++a)
            for (Elem b = 0; b < p; ++b) {
                CHECK(f.add(a, b, c) == f.add(b, a, c));
                CHECK(f.mul(a, b, c) == f.mul(b, a, c));
                CHECK(f.sub(f.add(a, b, c), b, c) == a);
                for (Elem d = 0; d < p; ++d) {
                    CHECK(f.mul(a, f.add(b, d, c), c) ==
                          f.add(f.mul(a, b, c), f.mul(a, d, c), c));
                    CHECK(f.add(a, f.add(b, d, c), c) == f.add(f.add(a, b, c), d, c));
                    CHECK(f.mul(a, f.mul(b, d, c), c) == f.mul(f.mul(a, b, c), d, c));
                }
            }
    }
    PrimeField f(2147483647u);
    SplitMix64 rng(42);
    for (int t = 0; t < 2000; ++t) {
        Elem a = f.reduce(rng.next()), b = f.reduce(rng.next()), d = f.reduce(rng.next());
        CHECK(f.mul(a, f.add(b, d, c), c) == f.add(f.mul(a, b, c), f.mul(a, d, c), c));
        CHECK(f.sub(f.add(a, b, c), b, c) == a);
    }
}

TEST_CASE("inverses, exhaustive for all p <= 97") {
    OpCounter c;
    for (std::uint32_t p = 2; p <= 97; ++p) {
        if (!is_prime_u64(p)) continue;
        PrimeField f(p);
        for (Elem a = 1; a < p; ++a) CHECK(f.mul(f.inv(a, c), a, c) == 1);
    }
}
