#include "ranklab/factor.hpp"

#include <string>

namespace ranklab {

namespace {

// Single-row base case: find the leftmost nonzero (each comparison charges
// one zero-test), swap it to the front, scale the rest of the row by the
// pivot inverse so the stored row becomes the U part.
PackedCup cup_base_row(MatView a, OpCounter& ctr) {
    const PrimeField& f = a.field();
    std::size_t n = a.cols();
    std::size_t piv = n;
    for (std::size_t j = 0; j < n; ++j) {
        if (!f.is_zero(a(0, j), ctr)) {
            piv = j;
            break;
        }
    }
    if (piv == n) return PackedCup{0, {}, Perm(n)};
    Perm p = Perm::transposition(0, piv, n);
    a.swap_cols(0, piv);
    Elem pinv = f.inv(a(0, 0), ctr);
    for (std::size_t j = 1; j < n; ++j) a(0, j) = f.mul(a(0, j), pinv, ctr);
    return PackedCup{1, {0}, std::move(p)};
}

PackedCup cup_rec(MatView a, OpCounter& ctr) {
    std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) return PackedCup{0, {}, Perm(n)};
    if (m == 1) return cup_base_row(a, ctr);

    std::size_t k = m / 2;
    const Elem one = a.field().one();
    const Elem neg_one = a.field().modulus() - 1;

    PackedCup top = cup_rec(a.sub(0, k, 0, n), ctr);
    std::size_t r1 = top.rank;

    perm_apply_cols(a.sub(k, m, 0, n), top.col_perm, false); // A2 <- A2*P1^T
    // G <- A21 * U1^{-1}; Unit so the packed C entries on the diagonal are
    // never read.
    trsm(Side::Right, UpLo::Upper, Diag::Unit, a.sub(0, r1, 0, r1),
         a.sub(k, m, 0, r1), ctr);
    if (r1 == n) return top;

    // H <- A22 - G*V1 (no-op when r1 = 0, which also covers the zero-rank
    // top block: the recursion below then owns the whole bottom).
    mm(a.sub(k, m, 0, r1), a.sub(0, r1, r1, n), a.sub(k, m, r1, n), neg_one, one,
       ctr);
    PackedCup bot = cup_rec(a.sub(k, m, r1, n), ctr);
    std::size_t r2 = bot.rank;

    perm_apply_cols(a.sub(0, r1, r1, n), bot.col_perm, false); // V1 <- V1*P2^T

    // Shift the U rows produced by the bottom recursion up next to V1 and
    // zero the vacated positions. Column j of the source row keeps its
    // value: it is a C entry (the pivot when the bottom profile starts at
    // its own row, structurally zero otherwise).
    for (std::size_t l = 0; l < r2; ++l) {
        std::size_t dst = r1 + l;
        std::size_t src = k + l;
        if (src == dst) continue;
        for (std::size_t c = dst + 1; c < n; ++c) {
            a(dst, c) = a(src, c);
            a(src, c) = 0;
        }
    }

    PackedCup out;
    out.rank = r1 + r2;
    out.row_profile = std::move(top.row_profile);
    out.row_profile.reserve(out.rank);
    for (auto i : bot.row_profile)
        out.row_profile.push_back(static_cast<std::uint32_t>(i + k));
    out.col_perm =
        perm_compose(bot.col_perm.embed_at(r1, n), top.col_perm); // Diag(I,P2)*P1
    return out;
}

} // namespace

PackedCup cup(MatView a, OpCounter& ctr) { return cup_rec(a, ctr); }

namespace {

PackedPle ple_base_col(MatView a, OpCounter& ctr) {
    const PrimeField& f = a.field();
    std::size_t m = a.rows();
    std::size_t piv = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (!f.is_zero(a(i, 0), ctr)) {
            piv = i;
            break;
        }
    }
    if (piv == m) return PackedPle{0, {}, Perm(m)};
    Perm p = Perm::transposition(0, piv, m);
    a.swap_rows(0, piv);
    Elem pinv = f.inv(a(0, 0), ctr);
    for (std::size_t i = 1; i < m; ++i) a(i, 0) = f.mul(a(i, 0), pinv, ctr);
    return PackedPle{1, {0}, std::move(p)};
}

PackedPle ple_rec(MatView a, OpCounter& ctr) {
    std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) return PackedPle{0, {}, Perm(m)};
    if (n == 1) return ple_base_col(a, ctr);

    std::size_t k = n / 2;
    const Elem one = a.field().one();
    const Elem neg_one = a.field().modulus() - 1;

    PackedPle left = ple_rec(a.sub(0, m, 0, k), ctr);
    std::size_t r1 = left.rank;

    perm_apply_rows(a.sub(0, m, k, n), left.row_perm, true); // A2 <- P1^T*A2
    // G <- L1^{-1} * A12
    trsm(Side::Left, UpLo::Lower, Diag::Unit, a.sub(0, r1, 0, r1),
         a.sub(0, r1, k, n), ctr);
    if (r1 == m) return left;

    // H <- A22 - M1*G
    mm(a.sub(r1, m, 0, r1), a.sub(0, r1, k, n), a.sub(r1, m, k, n), neg_one, one,
       ctr);
    PackedPle bot = ple_rec(a.sub(r1, m, k, n), ctr);
    std::size_t r2 = bot.rank;

    perm_apply_rows(a.sub(r1, m, 0, r1), bot.row_perm, true); // N1 <- P2^T*M1

    // Move the bottom recursion's L columns left next to M1.
    for (std::size_t l = 0; l < r2; ++l) {
        std::size_t dst = r1 + l;
        std::size_t src = k + l;
        if (src == dst) continue;
        for (std::size_t r = dst + 1; r < m; ++r) {
            a(r, dst) = a(r, src);
            a(r, src) = 0;
        }
    }

    PackedPle out;
    out.rank = r1 + r2;
    out.col_profile = std::move(left.col_profile);
    out.col_profile.reserve(out.rank);
    for (auto i : bot.col_profile)
        out.col_profile.push_back(static_cast<std::uint32_t>(i + k));
    out.row_perm = perm_compose(left.row_perm, bot.row_perm.embed_at(r1, m));
    return out;
}

} // namespace

PackedPle ple(MatView a, OpCounter& ctr) { return ple_rec(a, ctr); }

void check_packed_cup(ConstMatView body, const PackedCup& pc) {
    std::size_t m = body.rows(), n = body.cols();
    std::size_t r = pc.rank;
    if (r > m || r > n) throw MalformedPacked("rank exceeds a dimension");
    if (pc.row_profile.size() != r) throw MalformedPacked("profile length != rank");
    if (pc.col_perm.order() != n) throw MalformedPacked("permutation order != n");
    for (std::size_t j = 0; j < r; ++j) {
        auto ij = pc.row_profile[j];
        if (ij >= m) throw MalformedPacked("profile index past row count");
        if (ij < j) throw MalformedPacked("profile index below column index");
        if (j > 0 && pc.row_profile[j - 1] >= ij)
            throw MalformedPacked("profile not strictly increasing");
        if (body(ij, j) == 0)
            throw MalformedPacked("zero pivot at column " + std::to_string(j));
    }
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t j = r; j < n; ++j)
            if (body(i, j) != 0) throw MalformedPacked("nonzero outside [C\\U]");
}

void check_packed_ple(ConstMatView body, const PackedPle& pp) {
    std::size_t m = body.rows(), n = body.cols();
    std::size_t r = pp.rank;
    if (r > m || r > n) throw MalformedPacked("rank exceeds a dimension");
    if (pp.col_profile.size() != r) throw MalformedPacked("profile length != rank");
    if (pp.row_perm.order() != m) throw MalformedPacked("permutation order != m");
    for (std::size_t i = 0; i < r; ++i) {
        auto ji = pp.col_profile[i];
        if (ji >= n) throw MalformedPacked("profile index past column count");
        if (ji < i) throw MalformedPacked("profile index below row index");
        if (i > 0 && pp.col_profile[i - 1] >= ji)
            throw MalformedPacked("profile not strictly increasing");
        if (body(i, ji) == 0)
            throw MalformedPacked("zero pivot at row " + std::to_string(i));
    }
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t j = r; j < n; ++j)
            if (body(i, j) != 0) throw MalformedPacked("nonzero outside [L\\E]");
}

CupFactors expand_cup(ConstMatView body, const PackedCup& pc) {
    check_packed_cup(body, pc);
    const PrimeField& f = body.field();
    std::size_t m = body.rows(), n = body.cols(), r = pc.rank;
    Mat c(f, m, r);
    Mat u(f, r, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < r && j <= i; ++j) c(i, j) = body(i, j);
    for (std::size_t i = 0; i < r; ++i) {
        u(i, i) = f.one();
        for (std::size_t j = i + 1; j < n; ++j) u(i, j) = body(i, j);
    }
    return CupFactors{std::move(c), std::move(u)};
}

PleFactors expand_ple(ConstMatView body, const PackedPle& pp) {
    check_packed_ple(body, pp);
    const PrimeField& f = body.field();
    std::size_t m = body.rows(), n = body.cols(), r = pp.rank;
    Mat l(f, m, r);
    Mat e(f, r, n);
    for (std::size_t j = 0; j < r; ++j) {
        l(j, j) = f.one();
        for (std::size_t i = j + 1; i < m; ++i) l(i, j) = body(i, j);
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < n; ++j) e(i, j) = body(i, j);
    return PleFactors{std::move(l), std::move(e)};
}

} // namespace ranklab
