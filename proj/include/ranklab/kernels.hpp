#pragma once

#include "ranklab/matrix.hpp"

namespace ranklab {

enum class Side { Left, Right };
enum class UpLo { Upper, Lower };
enum class Diag { NonUnit, Unit };

// C <- alpha*A*B + beta*C.
//
// This is the single multiply entry point every block-recursive algorithm
// in the library routes through, so it doubles as the substitution seam: a
// faster kernel can replace the implementation behind this exact contract
// (BLAS-style), provided it states its own allocation budget — the
// in-place guarantee of the callers deliberately exempts multiply
// internals. The provided implementation is the classical triple loop and
// allocates nothing.
//
// C must not overlap A or B (checked, throws OverlapError). alpha = 0
// short-circuits the product entirely. With alpha in {1, -1} and beta in
// {0, 1} the charge is exact: inner length l costs l muls plus l-1 adds,
// and the beta/negation combine costs at most one extra add/sub per entry
// (so an accumulating update C -= A*B charges exactly 2*m*n*l).
void mm(ConstMatView a, ConstMatView b, MatView c, Elem alpha, Elem beta,
        OpCounter& ctr);

// Triangular solve: B is overwritten with the X solving T*X = B (Left) or
// X*T = B (Right). T is read only on the side selected by uplo; Unit means
// the stored diagonal is never read and treated as ones. NonUnit requires a
// nonzero diagonal (SingularDiagonal otherwise); each diagonal entry is
// inverted once and applied by multiplication.
//
// Recursion halves the dimension; blocks of size <= threshold run the
// substitution loops directly. threshold 1 reproduces the scalar base case.
void trsm(Side side, UpLo uplo, Diag diag, ConstMatView t, MatView b,
          OpCounter& ctr, std::size_t threshold = 1);

// Triangular multiply, same eight variants and the same half-splitting
// recursion: B <- T*B (Left) or B*T (Right), in place.
void trmm(Side side, UpLo uplo, Diag diag, ConstMatView t, MatView b,
          OpCounter& ctr, std::size_t threshold = 1);

} // namespace ranklab
