#pragma once

#include "ranklab/kernels.hpp"

namespace ranklab {

// Which packed factor owns the stored diagonal of a [L\U] body. The other
// factor gets an implicit all-ones diagonal.
enum class DiagOwner { UpperOwnsDiag, LowerOwnsDiag };

// T <- T^{-1}, in place, same triangularity and diagonal mode. The Unit
// variants touch only the strict triangle; stored diagonal positions are
// never read or written.
void trtri(UpLo uplo, Diag diag, MatView t, OpCounter& ctr);

// A holds L and U packed side by side; overwrite A with the full product
// U*L. Schedule: top-left corner first, then the two off-diagonal
// triangular products, then the bottom-right corner.
void trulm(MatView a, DiagOwner owner, OpCounter& ctr);

// Mirror of trulm computing L*U: bottom-right corner first.
void trlum(MatView a, DiagOwner owner, OpCounter& ctr);

} // namespace ranklab
