#include "ranklab/echelon.hpp"

namespace ranklab {

EchelonTransform col_ech_trans(MatView a, OpCounter& ctr) {
    const PrimeField& f = a.field();
    std::size_t n = a.cols();
    PackedCup pc = cup(a, ctr);
    std::size_t r = pc.rank;

    // M <- U1^{-1}*U2, then negate, then invert U1 on its strict triangle;
    // the diagonal positions hold C data and must survive, hence Unit.
    trsm(Side::Left, UpLo::Upper, Diag::Unit, a.sub(0, r, 0, r), a.sub(0, r, r, n),
         ctr);
    MatView m2 = a.sub(0, r, r, n);
    for (std::size_t i = 0; i < m2.rows(); ++i)
        for (std::size_t j = 0; j < m2.cols(); ++j) m2(i, j) = f.neg(m2(i, j), ctr);
    trtri(UpLo::Upper, Diag::Unit, a.sub(0, r, 0, r), ctr);

    return EchelonTransform{r, std::move(pc.row_profile), std::move(pc.col_perm)};
}

ReducedEchelonTransform red_col_ech_trans(MatView a, OpCounter& ctr) {
    std::size_t m = a.rows();
    EchelonTransform et = col_ech_trans(a, ctr);
    std::size_t r = et.rank;

    // Compress the pivot rows of C to the top: swap rows j and rrp[j] over
    // columns [0, j] so each pivot lands on the diagonal and the X entries
    // (strictly right of column j in row j) stay put. The resulting r x r
    // leading block is lower triangular with the pivots on its diagonal.
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t src = et.row_profile[j];
        if (src == j) continue;
        for (std::size_t c = 0; c <= j; ++c) std::swap(a(j, c), a(src, c));
    }

    // R2 <- L2*L1^{-1}; N <- L1^{-1}; X1 <- T1*N. The pivots are explicit
    // on the diagonal now, so the lower factor is NonUnit throughout.
    trsm(Side::Right, UpLo::Lower, Diag::NonUnit, a.sub(0, r, 0, r), a.sub(r, m, 0, r),
         ctr);
    trtri(UpLo::Lower, Diag::NonUnit, a.sub(0, r, 0, r), ctr);
    trulm(a.sub(0, r, 0, r), DiagOwner::LowerOwnsDiag, ctr);

    return ReducedEchelonTransform{r, std::move(et.row_profile),
                                   std::move(et.col_perm)};
}

Mat echelon_form(ConstMatView body, const EchelonTransform& t) {
    const PrimeField& f = body.field();
    std::size_t m = body.rows(), n = body.cols(), r = t.rank;
    Mat c(f, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < r && j <= i; ++j) c(i, j) = body(i, j);
    return c;
}

Mat ech_transform_matrix(ConstMatView body, const EchelonTransform& t) {
    const PrimeField& f = body.field();
    std::size_t n = body.cols(), r = t.rank;
    Mat x = Mat::identity(f, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < n; ++j) x(i, j) = body(i, j);
    return x;
}

Mat reduced_form(ConstMatView body, const ReducedEchelonTransform& t) {
    const PrimeField& f = body.field();
    std::size_t m = body.rows(), n = body.cols(), r = t.rank;
    Mat rform(f, m, n);
    for (std::size_t j = 0; j < r; ++j) rform(j, j) = f.one();
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t j = 0; j < r; ++j) rform(i, j) = body(i, j);
    // Undo the pivot compression: the forward pass applied T_0,...,T_{r-1}
    // top-down, so the inverse applies them bottom-up, on full rows.
    for (std::size_t j = r; j-- > 0;) rform.view().swap_rows(j, t.row_profile[j]);
    return rform;
}

Mat red_transform_matrix(ConstMatView body, const ReducedEchelonTransform& t) {
    const PrimeField& f = body.field();
    std::size_t n = body.cols(), r = t.rank;
    Mat x = Mat::identity(f, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = body(i, j);
    return x;
}

void in_place_mm(MatView a, MatView b, OpCounter& ctr) {
    std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("in_place_mm: A must be square");
    if (b.rows() != n) throw DimensionMismatch("in_place_mm: B row count");

    PackedCup pc = cup(a, ctr);
    if (pc.rank < n) throw SingularMatrix(); // B untouched; A left factored

    perm_apply_rows(b, pc.col_perm, false);            // B <- P*B
    trmm(Side::Left, UpLo::Upper, Diag::Unit, a, b, ctr);    // B <- U*B
    trmm(Side::Left, UpLo::Lower, Diag::NonUnit, a, b, ctr); // B <- C*B
    trlum(a, DiagOwner::LowerOwnsDiag, ctr);           // A <- C*U
    perm_apply_cols(a, pc.col_perm, true);             // A <- A*P
}

namespace {

// sigma(rrp[j]) = j, remaining rows mapped to r.. in ascending order.
Perm pivots_first_perm(std::size_t m, const std::vector<std::uint32_t>& rrp) {
    std::vector<std::uint32_t> s(m, std::uint32_t(-1));
    std::size_t r = rrp.size();
    for (std::size_t j = 0; j < r; ++j) s[rrp[j]] = static_cast<std::uint32_t>(j);
    std::uint32_t next = static_cast<std::uint32_t>(r);
    for (std::size_t i = 0; i < m; ++i)
        if (s[i] == std::uint32_t(-1)) s[i] = next++;
    return Perm(std::move(s));
}

} // namespace

DecompBundle convert(ConstMatView body, const PackedCup& pc, BundleKind kind,
                     OpCounter& ctr) {
    check_packed_cup(body, pc);
    const PrimeField& f = body.field();
    std::size_t m = body.rows(), n = body.cols(), r = pc.rank;

    // Pivot values and their inverses; every bundle scales by these.
    std::vector<Elem> piv(r), piv_inv(r);
    for (std::size_t j = 0; j < r; ++j) {
        piv[j] = body(pc.row_profile[j], j);
        piv_inv[j] = f.inv(piv[j], ctr);
    }

    // C*D: columns of C with unit pivots. Rows of Dbar*Ubar: pivot-scaled
    // rows of U.
    auto normalized_c = [&]() {
        Mat cd(f, m, r);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < r && j <= i; ++j)
                if (body(i, j) != 0) cd(i, j) = f.mul(body(i, j), piv_inv[j], ctr);
        return cd;
    };
    switch (kind) {
    case BundleKind::LSP: {
        Mat cd = normalized_c();
        Mat lp = Mat::identity(f, m);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < m; ++i)
                if (cd(i, j) != 0) lp(i, pc.row_profile[j]) = cd(i, j);
        Mat s(f, m, n);
        for (std::size_t j = 0; j < r; ++j) {
            std::size_t row = pc.row_profile[j];
            s(row, j) = piv[j];
            for (std::size_t c = j + 1; c < n; ++c)
                if (body(j, c) != 0) s(row, c) = f.mul(piv[j], body(j, c), ctr);
        }
        return LspBundle{std::move(lp), std::move(s), pc.col_perm};
    }
    case BundleKind::LQUP: {
        Mat cd = normalized_c();
        Mat lp = Mat::identity(f, m);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < m; ++i)
                if (cd(i, j) != 0) lp(i, pc.row_profile[j]) = cd(i, j);
        Mat up(f, m, n);
        for (std::size_t j = 0; j < r; ++j) {
            up(j, j) = piv[j];
            for (std::size_t c = j + 1; c < n; ++c)
                if (body(j, c) != 0) up(j, c) = f.mul(piv[j], body(j, c), ctr);
        }
        return LqupBundle{std::move(lp), pivots_first_perm(m, pc.row_profile),
                          std::move(up), pc.col_perm};
    }
    case BundleKind::QLUP: {
        Mat cd = normalized_c();
        Mat l2(f, m, r);
        // Pivot rows of C*D to the top, remaining rows below in order.
        Perm q = pivots_first_perm(m, pc.row_profile);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < r; ++j) l2(q[i], j) = cd(i, j);
        Mat u2(f, r, n);
        for (std::size_t j = 0; j < r; ++j) {
            u2(j, j) = piv[j];
            for (std::size_t c = j + 1; c < n; ++c)
                if (body(j, c) != 0) u2(j, c) = f.mul(piv[j], body(j, c), ctr);
        }
        return QlupBundle{std::move(q), std::move(l2), std::move(u2), pc.col_perm};
    }
    case BundleKind::Turing: {
        Mat cd = normalized_c();
        // Lbar's leading block is read straight off the pivot rows of C*D.
        Mat lbar = Mat::identity(f, n);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t c = 0; c < j; ++c) lbar(j, c) = cd(pc.row_profile[j], c);
        std::vector<Elem> dbar(n, f.one());
        for (std::size_t j = 0; j < r; ++j) dbar[j] = piv[j];
        Mat ubar = Mat::identity(f, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < n; ++j) ubar(i, j) = body(i, j);
        // R's nonzero block solves R_left * Lbar1 = C*D.
        Mat rform(f, m, n);
        {
            Mat rl = cd; // m x r
            trsm(Side::Right, UpLo::Lower, Diag::Unit, lbar.view(0, r, 0, r),
                 rl.view(), ctr);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < r; ++j) rform(i, j) = rl(i, j);
        }
        return TuringBundle{std::move(rform), std::move(lbar), std::move(dbar),
                            std::move(ubar), pc.col_perm};
    }
    }
    throw Error("unknown bundle kind");
}

} // namespace ranklab
