#include "ranklab/field.hpp"

namespace ranklab {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t(1) << 31)) throw ModulusOutOfRange(p);
    if (!is_prime_u64(p)) throw NotPrime(p);
    p_ = static_cast<std::uint32_t>(p);
}

Elem PrimeField::inv_uncounted(Elem a) const {
    if (a == 0) throw DivisionByZero();
    // Extended Euclid on (a, p); p prime so the gcd is 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
}

Elem PrimeField::arith(FieldOp op, Elem a, std::optional<Elem> b, OpCounter& c) const {
    switch (op) {
    case FieldOp::Add: return add(a, *b, c);
    case FieldOp::Sub: return sub(a, *b, c);
    case FieldOp::Mul: return mul(a, *b, c);
    case FieldOp::Neg: return neg(a, c);
    case FieldOp::Inv: return inv(a, c);
    case FieldOp::Div: return div(a, *b, c);
    case FieldOp::IsZero: return is_zero(a, c) ? 1 : 0;
    }
    throw Error("unknown field operation");
}

} // namespace ranklab
