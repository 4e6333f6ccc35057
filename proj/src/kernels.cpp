#include "ranklab/kernels.hpp"

#include <string>

namespace ranklab {

namespace {

void require_square(ConstMatView t) {
    if (t.rows() != t.cols())
        throw DimensionMismatch("triangular operand is " + std::to_string(t.rows()) +
                                "x" + std::to_string(t.cols()));
}

void require_conforming(Side side, ConstMatView t, ConstMatView b) {
    std::size_t need = side == Side::Left ? b.rows() : b.cols();
    if (t.rows() != need)
        throw DimensionMismatch("triangular side " + std::to_string(t.rows()) +
                                " vs operand dimension " + std::to_string(need));
}

void require_disjoint(ConstMatView t, ConstMatView b, const char* who) {
    if (t.overlaps(b)) throw OverlapError(who);
}

} // namespace

void mm(ConstMatView a, ConstMatView b, MatView c, Elem alpha, Elem beta,
        OpCounter& ctr) {
    const PrimeField& f = c.field();
    std::size_t m = c.rows(), n = c.cols(), l = a.cols();
    if (a.rows() != m || b.rows() != l || b.cols() != n)
        throw DimensionMismatch("mm " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + " -> " +
                                std::to_string(m) + "x" + std::to_string(n));
    require_disjoint(a, c, "mm: C overlaps A");
    require_disjoint(b, c, "mm: C overlaps B");

    const Elem one = f.one();
    const Elem neg_one = f.modulus() - 1; // == one when p = 2
    const bool no_product = alpha == 0 || l == 0;

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (no_product) {
                if (beta == 0)
                    c(i, j) = 0;
                else if (beta != one)
                    c(i, j) = f.mul(beta, c(i, j), ctr);
                continue;
            }
            Elem s = f.mul(a(i, 0), b(0, j), ctr);
            for (std::size_t k = 1; k < l; ++k)
                s = f.add(s, f.mul(a(i, k), b(k, j), ctr), ctr);
            bool subtract = false;
            if (alpha == one) {
                // nothing
            } else if (alpha == neg_one) {
                subtract = true;
            } else {
                s = f.mul(alpha, s, ctr);
            }
            if (beta == 0) {
                c(i, j) = subtract ? f.neg(s, ctr) : s;
            } else if (beta == one) {
                c(i, j) = subtract ? f.sub(c(i, j), s, ctr) : f.add(c(i, j), s, ctr);
            } else {
                Elem t = f.mul(beta, c(i, j), ctr);
                c(i, j) = subtract ? f.sub(t, s, ctr) : f.add(t, s, ctr);
            }
        }
    }
}

namespace {

// Substitution loops for blocks at or below the crossover. The diagonal
// reciprocal is computed once per index and applied by multiplication.
void trsm_base(Side side, UpLo uplo, Diag diag, ConstMatView t, MatView b,
               OpCounter& ctr) {
    const PrimeField& f = b.field();
    std::size_t k = t.rows();
    bool unit = diag == Diag::Unit;

    auto pivot_inv = [&](std::size_t d) -> Elem {
        if (t(d, d) == 0) throw SingularDiagonal(d);
        return f.inv(t(d, d), ctr);
    };

    if (side == Side::Right && uplo == UpLo::Upper) {
        for (std::size_t j = 0; j < k; ++j) {
            Elem pinv = unit ? 0 : pivot_inv(j);
            for (std::size_t i = 0; i < b.rows(); ++i) {
                Elem s = b(i, j);
                for (std::size_t u = 0; u < j; ++u)
                    s = f.sub(s, f.mul(b(i, u), t(u, j), ctr), ctr);
                b(i, j) = unit ? s : f.mul(s, pinv, ctr);
            }
        }
    } else if (side == Side::Right && uplo == UpLo::Lower) {
        for (std::size_t jj = k; jj-- > 0;) {
            Elem pinv = unit ? 0 : pivot_inv(jj);
            for (std::size_t i = 0; i < b.rows(); ++i) {
                Elem s = b(i, jj);
                for (std::size_t u = jj + 1; u < k; ++u)
                    s = f.sub(s, f.mul(b(i, u), t(u, jj), ctr), ctr);
                b(i, jj) = unit ? s : f.mul(s, pinv, ctr);
            }
        }
    } else if (side == Side::Left && uplo == UpLo::Upper) {
        for (std::size_t ii = k; ii-- > 0;) {
            Elem pinv = unit ? 0 : pivot_inv(ii);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Elem s = b(ii, j);
                for (std::size_t u = ii + 1; u < k; ++u)
                    s = f.sub(s, f.mul(t(ii, u), b(u, j), ctr), ctr);
                b(ii, j) = unit ? s : f.mul(s, pinv, ctr);
            }
        }
    } else {
        for (std::size_t i = 0; i < k; ++i) {
            Elem pinv = unit ? 0 : pivot_inv(i);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Elem s = b(i, j);
                for (std::size_t u = 0; u < i; ++u)
                    s = f.sub(s, f.mul(t(i, u), b(u, j), ctr), ctr);
                b(i, j) = unit ? s : f.mul(s, pinv, ctr);
            }
        }
    }
}

void trsm_rec(Side side, UpLo uplo, Diag diag, ConstMatView t, MatView b,
              OpCounter& ctr, std::size_t threshold) {
    std::size_t n = t.rows();
    if (n == 0 || b.empty()) return;
    if (n <= threshold) {
        trsm_base(side, uplo, diag, t, b, ctr);
        return;
    }
    std::size_t k = n / 2;
    ConstMatView t1 = t.sub(0, k, 0, k);
    ConstMatView t2 = t.sub(k, n, k, n);
    Elem neg_one = b.field().modulus() - 1;
    Elem one = b.field().one();

    if (side == Side::Right && uplo == UpLo::Upper) {
        MatView b1 = b.sub(0, b.rows(), 0, k), b2 = b.sub(0, b.rows(), k, n);
        ConstMatView v = t.sub(0, k, k, n);
        trsm_rec(side, uplo, diag, t1, b1, ctr, threshold);
        mm(b1, v, b2, neg_one, one, ctr);
        trsm_rec(side, uplo, diag, t2, b2, ctr, threshold);
    } else if (side == Side::Right && uplo == UpLo::Lower) {
        MatView b1 = b.sub(0, b.rows(), 0, k), b2 = b.sub(0, b.rows(), k, n);
        ConstMatView v = t.sub(k, n, 0, k);
        trsm_rec(side, uplo, diag, t2, b2, ctr, threshold);
        mm(b2, v, b1, neg_one, one, ctr);
        trsm_rec(side, uplo, diag, t1, b1, ctr, threshold);
    } else if (side == Side::Left && uplo == UpLo::Upper) {
        MatView b1 = b.sub(0, k, 0, b.cols()), b2 = b.sub(k, n, 0, b.cols());
        ConstMatView v = t.sub(0, k, k, n);
        trsm_rec(side, uplo, diag, t2, b2, ctr, threshold);
        mm(v, b2, b1, neg_one, one, ctr);
        trsm_rec(side, uplo, diag, t1, b1, ctr, threshold);
    } else {
        MatView b1 = b.sub(0, k, 0, b.cols()), b2 = b.sub(k, n, 0, b.cols());
        ConstMatView v = t.sub(k, n, 0, k);
        trsm_rec(side, uplo, diag, t1, b1, ctr, threshold);
        mm(v, b1, b2, neg_one, one, ctr);
        trsm_rec(side, uplo, diag, t2, b2, ctr, threshold);
    }
}

void trmm_base(Side side, UpLo uplo, Diag diag, ConstMatView t, MatView b,
               OpCounter& ctr) {
    const PrimeField& f = b.field();
    std::size_t k = t.rows();
    bool unit = diag == Diag::Unit;

    if (side == Side::Left && uplo == UpLo::Lower) {
        // Row i depends on rows above it: walk bottom-up.
        for (std::size_t ii = k; ii-- > 0;) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Elem s = unit ? b(ii, j) : f.mul(t(ii, ii), b(ii, j), ctr);
                for (std::size_t u = 0; u < ii; ++u)
                    s = f.add(s, f.mul(t(ii, u), b(u, j), ctr), ctr);
                b(ii, j) = s;
            }
        }
    } else if (side == Side::Left && uplo == UpLo::Upper) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Elem s = unit ? b(i, j) : f.mul(t(i, i), b(i, j), ctr);
                for (std::size_t u = i + 1; u < k; ++u)
                    s = f.add(s, f.mul(t(i, u), b(u, j), ctr), ctr);
                b(i, j) = s;
            }
        }
    } else if (side == Side::Right && uplo == UpLo::Upper) {
        for (std::size_t jj = k; jj-- > 0;) {
            for (std::size_t i = 0; i < b.rows(); ++i) {
                Elem s = unit ? b(i, jj) : f.mul(b(i, jj), t(jj, jj), ctr);
                for (std::size_t u = 0; u < jj; ++u)
                    s = f.add(s, f.mul(b(i, u), t(u, jj), ctr), ctr);
                b(i, jj) = s;
            }
        }
    } else {
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < b.rows(); ++i) {
                Elem s = unit ? b(i, j) : f.mul(b(i, j), t(j, j), ctr);
                for (std::size_t u = j + 1; u < k; ++u)
                    s = f.add(s, f.mul(b(i, u), t(u, j), ctr), ctr);
                b(i, j) = s;
            }
        }
    }
}

void trmm_rec(Side side, UpLo uplo, Diag diag, ConstMatView t, MatView b,
              OpCounter& ctr, std::size_t threshold) {
    std::size_t n = t.rows();
    if (n == 0 || b.empty()) return;
    if (n <= threshold) {
        trmm_base(side, uplo, diag, t, b, ctr);
        return;
    }
    std::size_t k = n / 2;
    ConstMatView t1 = t.sub(0, k, 0, k);
    ConstMatView t2 = t.sub(k, n, k, n);
    Elem one = b.field().one();

    if (side == Side::Left && uplo == UpLo::Lower) {
        MatView b1 = b.sub(0, k, 0, b.cols()), b2 = b.sub(k, n, 0, b.cols());
        ConstMatView v = t.sub(k, n, 0, k);
        trmm_rec(side, uplo, diag, t2, b2, ctr, threshold);
        mm(v, b1, b2, one, one, ctr);
        trmm_rec(side, uplo, diag, t1, b1, ctr, threshold);
    } else if (side == Side::Left && uplo == UpLo::Upper) {
        MatView b1 = b.sub(0, k, 0, b.cols()), b2 = b.sub(k, n, 0, b.cols());
        ConstMatView v = t.sub(0, k, k, n);
        trmm_rec(side, uplo, diag, t1, b1, ctr, threshold);
        mm(v, b2, b1, one, one, ctr);
        trmm_rec(side, uplo, diag, t2, b2, ctr, threshold);
    } else if (side == Side::Right && uplo == UpLo::Upper) {
        MatView b1 = b.sub(0, b.rows(), 0, k), b2 = b.sub(0, b.rows(), k, n);
        ConstMatView v = t.sub(0, k, k, n);
        trmm_rec(side, uplo, diag, t2, b2, ctr, threshold);
        mm(b1, v, b2, one, one, ctr);
        trmm_rec(side, uplo, diag, t1, b1, ctr, threshold);
    } else {
        MatView b1 = b.sub(0, b.rows(), 0, k), b2 = b.sub(0, b.rows(), k, n);
        ConstMatView v = t.sub(k, n, 0, k);
        trmm_rec(side, uplo, diag, t1, b1, ctr, threshold);
        mm(b2, v, b1, one, one, ctr);
        trmm_rec(side, uplo, diag, t2, b2, ctr, threshold);
    }
}

} // namespace

void trsm(Side side, UpLo uplo, Diag diag, ConstMatView t, MatView b,
          OpCounter& ctr, std::size_t threshold) {
    require_square(t);
    require_conforming(side, t, b);
    require_disjoint(t, b, "trsm: T overlaps B");
    if (threshold == 0) threshold = 1;
    trsm_rec(side, uplo, diag, t, b, ctr, threshold);
}

void trmm(Side side, UpLo uplo, Diag diag, ConstMatView t, MatView b,
          OpCounter& ctr, std::size_t threshold) {
    require_square(t);
    require_conforming(side, t, b);
    require_disjoint(t, b, "trmm: T overlaps B");
    if (threshold == 0) threshold = 1;
    trmm_rec(side, uplo, diag, t, b, ctr, threshold);
}

} // namespace ranklab
