#include "ranklab/solvers.hpp"

namespace ranklab {

std::pair<std::size_t, std::vector<std::uint32_t>> rank_and_profile(MatView a,
                                                                    OpCounter& ctr) {
    PackedCup pc = cup(a, ctr);
    return {pc.rank, std::move(pc.row_profile)};
}

Elem determinant(MatView a, OpCounter& ctr) {
    const PrimeField& f = a.field();
    std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("determinant of non-square matrix");
    PackedCup pc = cup(a, ctr);
    if (pc.rank < n) return 0;
    if (n == 0) return f.one();
    Elem d = a(0, 0); // full rank puts every pivot on the diagonal
    for (std::size_t j = 1; j < n; ++j) d = f.mul(d, a(j, j), ctr);
    if (pc.col_perm.sign() < 0) d = f.neg(d, ctr);
    return d;
}

void invert_in_place(MatView a, OpCounter& ctr) {
    std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("inverse of non-square matrix");
    ReducedEchelonTransform t = red_col_ech_trans(a, ctr);
    if (t.rank < n) throw SingularMatrix();
    // Full rank means Q = identity and the body is exactly X; A^{-1} = P^T*X.
    perm_apply_rows(a, t.col_perm, true);
}

SolveResult solve(MatView a, ConstMatView b, OpCounter& ctr, bool with_nullspace) {
    const PrimeField& f = a.field();
    std::size_t m = a.rows(), n = a.cols();
    if (b.rows() != m || b.cols() != 1)
        throw DimensionMismatch("right-hand side must be " + std::to_string(m) + "x1");

    PackedCup pc = cup(a, ctr);
    std::size_t r = pc.rank;

    // Forward substitution on the pivot rows of C: z_j solves
    // C[rrp[j]][0..j] . z = b[rrp[j]].
    std::vector<Elem> z(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t row = pc.row_profile[j];
        Elem s = b(row, 0);
        for (std::size_t t = 0; t < j; ++t)
            s = f.sub(s, f.mul(a(row, t), z[t], ctr), ctr);
        z[j] = f.div(s, a(row, j), ctr);
    }

    SolveResult res;
    if (with_nullspace) res.nullspace = Mat(f, n, n - r);

    // Every non-pivot row must reproduce its b entry.
    {
        std::size_t next_piv = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (next_piv < r && pc.row_profile[next_piv] == i) {
                ++next_piv;
                continue;
            }
            Elem s = 0;
            std::size_t terms = std::min(i + 1, r);
            for (std::size_t t = 0; t < terms; ++t)
                s = f.add(s, f.mul(a(i, t), z[t], ctr), ctr);
            if (s != b(i, 0)) {
                res.consistent = false;
                res.witness_row = i;
                return res;
            }
        }
    }

    // x = P^T * U^{-1} * [z; 0]: back substitution through the packed U.
    Mat x(f, n, 1);
    for (std::size_t ii = n; ii-- > 0;) {
        Elem v = ii < r ? z[ii] : 0;
        if (ii < r)
            for (std::size_t j = ii + 1; j < n; ++j)
                if (a(ii, j) != 0 && x(j, 0) != 0)
                    v = f.sub(v, f.mul(a(ii, j), x(j, 0), ctr), ctr);
        x(ii, 0) = v;
    }
    perm_apply_rows(x.view(), pc.col_perm, true);

    if (with_nullspace) {
        Mat& nsp = *res.nullspace;
        // Columns r..n of U^{-1}: solve U*w = e_c, w_c = 1, zero below.
        for (std::size_t c = r; c < n; ++c) {
            std::vector<Elem> w(n, 0);
            w[c] = f.one();
            for (std::size_t ii = std::min(c, r); ii-- > 0;) {
                Elem v = 0;
                for (std::size_t j = ii + 1; j <= c; ++j)
                    if (a(ii, j) != 0 && w[j] != 0)
                        v = f.sub(v, f.mul(a(ii, j), w[j], ctr), ctr);
                w[ii] = v;
            }
            for (std::size_t i = 0; i < n; ++i) nsp(i, c - r) = w[i];
        }
        perm_apply_rows(nsp.view(), pc.col_perm, true);
    }

    res.consistent = true;
    res.x = std::move(x);
    return res;
}

Mat nullspace_basis(MatView a, OpCounter& ctr) {
    const PrimeField& f = a.field();
    std::size_t n = a.cols();
    EchelonTransform t = col_ech_trans(a, ctr);
    std::size_t r = t.rank;
    Mat nsp(f, n, n - r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = r; c < n; ++c) nsp(i, c - r) = a(i, c);
    for (std::size_t c = r; c < n; ++c) nsp(c, c - r) = f.one();
    perm_apply_rows(nsp.view(), t.col_perm, true);
    return nsp;
}

} // namespace ranklab
