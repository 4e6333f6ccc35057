#include "ranklab/tri.hpp"

namespace ranklab {

namespace {

void require_square(ConstMatView t, const char* who) {
    if (t.rows() != t.cols()) throw DimensionMismatch(who);
}

} // namespace

void trtri(UpLo uplo, Diag diag, MatView t, OpCounter& ctr) {
    require_square(t, "trtri needs a square block");
    const PrimeField& f = t.field();
    std::size_t n = t.rows();
    if (n == 0) return;
    if (n == 1) {
        if (diag == Diag::NonUnit) {
            if (t(0, 0) == 0) throw SingularDiagonal(0);
            t(0, 0) = f.inv(t(0, 0), ctr);
        }
        return;
    }
    std::size_t k = n / 2;
    MatView t1 = t.sub(0, k, 0, k);
    MatView t2 = t.sub(k, n, k, n);
    MatView v = uplo == UpLo::Upper ? t.sub(0, k, k, n) : t.sub(k, n, 0, k);

    if (uplo == UpLo::Upper) {
        trsm(Side::Right, UpLo::Upper, diag, t2, v, ctr); // V <- V*T2^{-1}
        trsm(Side::Left, UpLo::Upper, diag, t1, v, ctr);  // V <- T1^{-1}*V
    } else {
        trsm(Side::Left, UpLo::Lower, diag, t2, v, ctr);  // V <- T2^{-1}*V
        trsm(Side::Right, UpLo::Lower, diag, t1, v, ctr); // V <- V*T1^{-1}
    }
    // V <- -V; negation is a field operation.
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) = f.neg(v(i, j), ctr);
    trtri(uplo, diag, t1, ctr);
    trtri(uplo, diag, t2, ctr);
}

void trulm(MatView a, DiagOwner owner, OpCounter& ctr) {
    require_square(a, "trulm needs a square body");
    std::size_t n = a.rows();
    if (n <= 1) return; // 1x1: one factor is the implicit 1, product = body
    std::size_t k = n / 2;
    Diag lower_diag = owner == DiagOwner::UpperOwnsDiag ? Diag::Unit : Diag::NonUnit;
    Diag upper_diag = owner == DiagOwner::UpperOwnsDiag ? Diag::NonUnit : Diag::Unit;
    Elem one = a.field().one();

    trulm(a.sub(0, k, 0, k), owner, ctr); // X1 <- U1*L1
    // X1 <- X1 + U2*L2
    mm(a.sub(0, k, k, n), a.sub(k, n, 0, k), a.sub(0, k, 0, k), one, one, ctr);
    // X2 <- U2*L3
    trmm(Side::Right, UpLo::Lower, lower_diag, a.sub(k, n, k, n), a.sub(0, k, k, n),
         ctr);
    // X3 <- U3*L2
    trmm(Side::Left, UpLo::Upper, upper_diag, a.sub(k, n, k, n), a.sub(k, n, 0, k),
         ctr);
    trulm(a.sub(k, n, k, n), owner, ctr); // X4 <- U3*L3
}

void trlum(MatView a, DiagOwner owner, OpCounter& ctr) {
    require_square(a, "trlum needs a square body");
    std::size_t n = a.rows();
    if (n <= 1) return;
    std::size_t k = n / 2;
    Diag lower_diag = owner == DiagOwner::UpperOwnsDiag ? Diag::Unit : Diag::NonUnit;
    Diag upper_diag = owner == DiagOwner::UpperOwnsDiag ? Diag::NonUnit : Diag::Unit;
    Elem one = a.field().one();

    trlum(a.sub(k, n, k, n), owner, ctr); // X4 <- L3*U3
    // X4 <- X4 + L2*U2
    mm(a.sub(k, n, 0, k), a.sub(0, k, k, n), a.sub(k, n, k, n), one, one, ctr);
    // X2 <- L1*U2
    trmm(Side::Left, UpLo::Lower, lower_diag, a.sub(0, k, 0, k), a.sub(0, k, k, n),
         ctr);
    // X3 <- L2*U1
    trmm(Side::Right, UpLo::Upper, upper_diag, a.sub(0, k, 0, k), a.sub(k, n, 0, k),
         ctr);
    trlum(a.sub(0, k, 0, k), owner, ctr); // X1 <- L1*U1
}

} // namespace ranklab
