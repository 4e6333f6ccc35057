#pragma once

#include "ranklab/kernels.hpp"
#include "ranklab/perm.hpp"

namespace ranklab {

// Textbook column elimination with first-nonzero pivoting. Oracle code:
// its arithmetic and control flow share nothing with the block-recursive
// kernels, so it can cross-validate them.
struct NaiveGaussResult {
    std::size_t rank = 0;
    std::vector<std::uint32_t> row_profile;
    Mat echelon; // column echelon form of the input
    Mat reduced; // reduced column echelon form (canonical)
};
NaiveGaussResult naive_gauss(ConstMatView a);

// Schoolbook product, uncounted.
Mat naive_mm(ConstMatView a, ConstMatView b);

// Recursive reduced-row-echelon transform of the column slice
// [col0, col0+width) with active rows starting at row0. Works slice by
// slice and stores the transformation inside the slice. The two inner
// products of the form X <- Z*X need explicit temporaries: this algorithm
// is deliberately NOT in-place, in contrast with the cup-based transforms,
// and the element-allocation counter sees its temporaries.
struct GaussJordanResult {
    std::size_t rank = 0;
    Perm p; // order m
    Perm q; // order width
};
GaussJordanResult gauss_jordan(MatView a, std::size_t col0, std::size_t row0,
                               std::size_t width, OpCounter& ctr);

// Fixed 64-bit mixing generator so every language port reproduces identical
// streams. next() is the splitmix64 step:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Values map into [0, p) by plain remainder.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform-ish draw in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// How a rank-r product B*C places its pivots.
//  Spread:  the r identity rows of B (and identity columns of C) sit at
//           positions drawn by the seeded generator; the row rank profile
//           of the product is exactly those rows.
//  Generic: identity rows/columns are the leading r, with dense random
//           fill below/right, so every leading slice has maximal rank.
enum class RankPlacement { Spread, Generic };

// Deterministic rank-exactly-r matrix: B (m x r) carries I_r at the chosen
// rows with random entries below each identity row; C (r x n) carries I_r
// at the chosen columns with random entries elsewhere.
Mat random_rank_matrix(std::size_t m, std::size_t n, std::size_t r,
                       std::uint64_t seed, const PrimeField& f,
                       RankPlacement placement = RankPlacement::Spread);

// Dense seeded matrix, entries uniform in [0, p).
Mat random_matrix(std::size_t m, std::size_t n, std::uint64_t seed,
                  const PrimeField& f);

// Nonsingular by construction: unit-lower times upper with nonzero diagonal,
// followed by a seeded column shuffle.
Mat random_nonsingular_matrix(std::size_t n, std::uint64_t seed, const PrimeField& f);

// Seeded triangular matrix with nonzero diagonal (for solve/invert kernels).
Mat random_triangular_matrix(std::size_t n, UpLo uplo, std::uint64_t seed,
                             const PrimeField& f);

} // namespace ranklab
