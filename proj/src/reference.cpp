#include "ranklab/reference.hpp"

#include <algorithm>
#include <numeric>

namespace ranklab {

namespace {

// Self-contained modular helpers for the oracles. Inversion goes through
// Fermat exponentiation, deliberately a different route than the library's
// extended Euclid.
Elem osub(Elem a, Elem b, std::uint32_t p) { return a >= b ? a - b : a + (p - b); }
Elem omul(Elem a, Elem b, std::uint32_t p) {
    return static_cast<Elem>(std::uint64_t(a) * b % p);
}
Elem oinv(Elem a, std::uint32_t p) {
    Elem r = 1, base = a;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = omul(r, base, p);
        base = omul(base, base, p);
        e >>= 1;
    }
    return r;
}

} // namespace

NaiveGaussResult naive_gauss(ConstMatView a) {
    const std::uint32_t p = a.field().modulus();
    std::size_t m = a.rows(), n = a.cols();
    Mat b = to_mat(a);
    std::size_t r = 0;
    std::vector<std::uint32_t> rrp;

    for (std::size_t i = 0; i < m && r < n; ++i) {
        std::size_t piv = n;
        for (std::size_t j = r; j < n; ++j) {
            if (b(i, j) != 0) {
                piv = j;
                break;
            }
        }
        if (piv == n) continue;
        b.view().swap_cols(r, piv);
        rrp.push_back(static_cast<std::uint32_t>(i));
        Elem pinv = oinv(b(i, r), p);
        for (std::size_t c = r + 1; c < n; ++c) {
            if (b(i, c) == 0) continue;
            Elem factor = omul(b(i, c), pinv, p);
            for (std::size_t i2 = i; i2 < m; ++i2)
                b(i2, c) = osub(b(i2, c), omul(factor, b(i2, r), p), p);
        }
        ++r;
    }

    Mat reduced = b;
    for (std::size_t j = 0; j < r; ++j) {
        Elem pinv = oinv(reduced(rrp[j], j), p);
        for (std::size_t i = rrp[j]; i < m; ++i)
            reduced(i, j) = omul(reduced(i, j), pinv, p);
    }
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t c = 0; c < j; ++c) {
            Elem e = reduced(rrp[j], c);
            if (e == 0) continue;
            for (std::size_t i = rrp[j]; i < m; ++i)
                reduced(i, c) = osub(reduced(i, c), omul(e, reduced(i, j), p), p);
        }
    }

    return NaiveGaussResult{r, std::move(rrp), std::move(b), std::move(reduced)};
}

Mat naive_mm(ConstMatView a, ConstMatView b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("naive_mm inner dimensions");
    const std::uint32_t p = a.field().modulus();
    Mat c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc += std::uint64_t(a(i, k)) * b(k, j) % p;
                if (acc >= (std::uint64_t(1) << 62)) acc %= p;
            }
            c(i, j) = static_cast<Elem>(acc % p);
        }
    return c;
}

GaussJordanResult gauss_jordan(MatView a, std::size_t col0, std::size_t row0,
                               std::size_t width, OpCounter& ctr) {
    const PrimeField& f = a.field();
    std::size_t m = a.rows();
    if (col0 + width > a.cols() || row0 > m)
        throw BoundsError("gauss_jordan slice outside matrix");

    if (width == 1) {
        std::size_t piv = m;
        for (std::size_t i = row0; i < m; ++i) {
            if (!f.is_zero(a(i, col0), ctr)) {
                piv = i;
                break;
            }
        }
        if (piv == m) return GaussJordanResult{0, Perm(m), Perm(1)};
        Perm p = Perm::transposition(row0, piv, m);
        a.swap_rows(row0, piv);
        Elem pinv = f.inv(a(row0, col0), ctr);
        Elem neg_pinv = f.neg(pinv, ctr);
        // The stored column becomes the eliminating transform.
        for (std::size_t i = 0; i < m; ++i)
            if (i != row0) a(i, col0) = f.mul(a(i, col0), neg_pinv, ctr);
        a(row0, col0) = pinv;
        return GaussJordanResult{1, std::move(p), Perm(1)};
    }

    const Elem one = f.one();
    std::size_t h = width / 2;
    GaussJordanResult left = gauss_jordan(a, col0, row0, h, ctr);
    std::size_t r1 = left.rank;
    std::size_t t = row0 + r1;
    std::size_t g = col0 + h;
    std::size_t w_end = col0 + width;

    // Update the right half of the slice with the left transform. Every
    // block multiplies the original middle rows, so they are saved in a
    // temporary before being overwritten (the non-in-place step).
    {
        Mat temp = to_mat(a.sub(row0, t, g, w_end));
        mm(a.sub(0, row0, col0, col0 + r1), temp.view(), a.sub(0, row0, g, w_end),
           one, one, ctr);
        mm(a.sub(t, m, col0, col0 + r1), temp.view(), a.sub(t, m, g, w_end), one, one,
           ctr);
        mm(a.sub(row0, t, col0, col0 + r1), temp.view(), a.sub(row0, t, g, w_end),
           one, 0, ctr);
    }

    GaussJordanResult right = gauss_jordan(a, g, t, width - h, ctr);
    std::size_t r2 = right.rank;

    // Fold the right transform back into the left columns, again through a
    // temporary holding the original middle rows.
    {
        Mat temp = to_mat(a.sub(t, t + r2, col0, col0 + r1));
        mm(a.sub(0, t, g, g + r2), temp.view(), a.sub(0, t, col0, col0 + r1), one,
           one, ctr);
        mm(a.sub(t + r2, m, g, g + r2), temp.view(), a.sub(t + r2, m, col0, col0 + r1),
           one, one, ctr);
        mm(a.sub(t, t + r2, g, g + r2), temp.view(), a.sub(t, t + r2, col0, col0 + r1),
           one, 0, ctr);
    }

    // Column bookkeeping: pivot columns of both halves first, then the
    // deficient remainders, composed with the halves' own permutations.
    std::vector<std::uint32_t> s(width);
    for (std::size_t i = 0; i < r1; ++i) s[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < h - r1; ++i)
        s[r1 + i] = static_cast<std::uint32_t>(r1 + r2 + i);
    for (std::size_t i = 0; i < r2; ++i)
        s[h + i] = static_cast<std::uint32_t>(r1 + i);
    for (std::size_t i = 0; i < width - h - r2; ++i)
        s[h + r2 + i] = static_cast<std::uint32_t>(h + r2 + i);
    Perm block(std::move(s));
    // Physically gather the transform columns of both halves at the front
    // of the slice; the parent's block products rely on that layout.
    perm_apply_cols(a.sub(0, m, col0, w_end), block, true);
    Perm diag = perm_compose(left.q.embed_at(0, width), right.q.embed_at(h, width));
    Perm q = perm_compose(block, diag);
    Perm p = perm_compose(right.p, left.p);
    return GaussJordanResult{r1 + r2, std::move(p), std::move(q)};
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

// First r entries of a seeded Fisher-Yates shuffle of [0, k), sorted.
std::vector<std::uint32_t> choose_sorted(std::size_t k, std::size_t r,
                                         SplitMix64& rng) {
    std::vector<std::uint32_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::size_t i = k; i > 1; --i)
        std::swap(idx[i - 1], idx[rng.below(i)]);
    idx.resize(r);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace

Mat random_rank_matrix(std::size_t m, std::size_t n, std::size_t r,
                       std::uint64_t seed, const PrimeField& f,
                       RankPlacement placement) {
    if (r > std::min(m, n))
        throw RankOutOfRange(std::to_string(r) + " > min(" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
    SplitMix64 rng(seed);

    std::vector<std::uint32_t> rows, cols;
    if (placement == RankPlacement::Spread) {
        rows = choose_sorted(m, r, rng);
        cols = choose_sorted(n, r, rng);
    } else {
        rows.resize(r);
        cols.resize(r);
        std::iota(rows.begin(), rows.end(), 0u);
        std::iota(cols.begin(), cols.end(), 0u);
    }

    Mat b(f, m, r);
    {
        std::vector<std::uint8_t> chosen(m, 0);
        for (std::size_t j = 0; j < r; ++j) {
            chosen[rows[j]] = 1;
            b(rows[j], j) = f.one();
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (chosen[i]) continue;
            for (std::size_t j = 0; j < r; ++j)
                if (rows[j] < i) b(i, j) = f.reduce(rng.next());
        }
    }
    Mat c(f, r, n);
    {
        std::vector<std::uint8_t> chosen(n, 0);
        for (std::size_t j = 0; j < r; ++j) {
            chosen[cols[j]] = 1;
            c(j, cols[j]) = f.one();
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (chosen[j]) continue;
            for (std::size_t i = 0; i < r; ++i) c(i, j) = f.reduce(rng.next());
        }
    }
    return naive_mm(b.view(), c.view());
}

Mat random_matrix(std::size_t m, std::size_t n, std::uint64_t seed,
                  const PrimeField& f) {
    SplitMix64 rng(seed);
    Mat a(f, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = f.reduce(rng.next());
    return a;
}

Mat random_nonsingular_matrix(std::size_t n, std::uint64_t seed, const PrimeField& f) {
    const std::uint32_t p = f.modulus();
    SplitMix64 rng(seed);
    Mat l = Mat::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) l(i, j) = f.reduce(rng.next());
    Mat u(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        u(i, i) = static_cast<Elem>(1 + rng.below(p - 1));
        for (std::size_t j = i + 1; j < n; ++j) u(i, j) = f.reduce(rng.next());
    }
    Mat a = naive_mm(l.view(), u.view());
    std::vector<std::uint32_t> s(n);
    std::iota(s.begin(), s.end(), 0u);
    for (std::size_t i = n; i > 1; --i) std::swap(s[i - 1], s[rng.below(i)]);
    perm_apply_cols(a.view(), Perm(std::move(s)), false);
    return a;
}

Mat random_triangular_matrix(std::size_t n, UpLo uplo, std::uint64_t seed,
                             const PrimeField& f) {
    const std::uint32_t p = f.modulus();
    SplitMix64 rng(seed);
    Mat t(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        t(i, i) = static_cast<Elem>(1 + rng.below(p - 1));
        if (uplo == UpLo::Upper)
            for (std::size_t j = i + 1; j < n; ++j) t(i, j) = f.reduce(rng.next());
        else
            for (std::size_t j = 0; j < i; ++j) t(i, j) = f.reduce(rng.next());
    }
    return t;
}

} // namespace ranklab
