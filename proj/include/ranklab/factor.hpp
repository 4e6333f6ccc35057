#pragma once

#include <vector>

#include "ranklab/perm.hpp"
#include "ranklab/tri.hpp"

namespace ranklab {

// Metadata of a packed [C\U] factorization. The body stays in the matrix
// that was factored: column j of C is stored at and below the diagonal
// (rows >= j, columns < rank), row i of U strictly right of the diagonal
// (columns > i, rows < rank), U's unit diagonal implicit. Embedding U in an
// n x n unit upper triangular matrix gives A = C * U * P.
struct PackedCup {
    std::size_t rank = 0;
    std::vector<std::uint32_t> row_profile; // strictly increasing, rrp[j] >= j
    Perm col_perm{0};                       // order n
};

// Transpose mirror, body packed as [L\E]: A = P * L * E with L unit lower
// (m x m embedded) and E in row echelon form revealing the column rank
// profile.
struct PackedPle {
    std::size_t rank = 0;
    std::vector<std::uint32_t> col_profile;
    Perm row_perm{0}; // order m
};

// Rank-profile-revealing factorization, in place: A is overwritten with the
// packed [C\U] body. Any shape, including empty; rank deficiency is an
// output, never an error. Pivoting is fixed to first-nonzero so the row
// rank profile is the lexicographically smallest independent row set.
PackedCup cup(MatView a, OpCounter& ctr);

// Column-split mirror of cup: A overwritten with [L\E], A = P*L*E.
PackedPle ple(MatView a, OpCounter& ctr);

struct CupFactors {
    Mat c; // m x r column echelon, pivot rows = row_profile
    Mat u; // r x n, unit diagonal stored explicitly
};

struct PleFactors {
    Mat l; // m x r unit lower trapezoidal
    Mat e; // r x n row echelon
};

// Fresh explicit factors from a packed body. Validates the layout and
// throws MalformedPacked on violations.
CupFactors expand_cup(ConstMatView body, const PackedCup& pc);
PleFactors expand_ple(ConstMatView body, const PackedPle& pp);

// Layout sanity checks shared by expand/convert.
void check_packed_cup(ConstMatView body, const PackedCup& pc);
void check_packed_ple(ConstMatView body, const PackedPle& pp);

} // namespace ranklab
