#pragma once

#include <optional>

#include "ranklab/echelon.hpp"

namespace ranklab {

// All solvers consume (overwrite) their input matrix; copying wrappers
// belong to the CLI layer.

// Rank and row rank profile via cup.
std::pair<std::size_t, std::vector<std::uint32_t>> rank_and_profile(MatView a,
                                                                    OpCounter& ctr);

// det(A) = sign(P) * product of pivots (the unit factor contributes 1).
Elem determinant(MatView a, OpCounter& ctr);

// A <- A^{-1} via the reduced-echelon transform: for nonsingular input the
// transform matrix is the inverse up to the column permutation, so the
// finishing step is a row permutation of the body. Throws SingularMatrix.
void invert_in_place(MatView a, OpCounter& ctr);

struct SolveResult {
    bool consistent = false;
    std::optional<Mat> x;          // n x 1 with A*x = b, bit-exact
    std::size_t witness_row = 0;   // a row certifying inconsistency
    std::optional<Mat> nullspace;  // n x (n-r), on request
};

// Consistent-system solve from the cup factorization: forward-substitute on
// the pivot rows of C, verify the remaining rows, then pull the solution
// back through U and P. Inconsistency is a tagged result, not an error.
SolveResult solve(MatView a, ConstMatView b, OpCounter& ctr,
                  bool with_nullspace = false);

// Right-nullspace basis: the trailing n-r columns of P^T*X from the echelon
// transform. Columns are independent by construction.
Mat nullspace_basis(MatView a, OpCounter& ctr);

} // namespace ranklab
