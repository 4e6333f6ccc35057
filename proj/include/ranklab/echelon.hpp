#pragma once

#include <variant>

#include "ranklab/factor.hpp"

namespace ranklab {

// After col_ech_trans the body holds [C\X]: C as in the packed cup layout,
// X the strict-upper part of U^{-1} (unit diagonal implicit). Embedding X
// in an n x n unit upper triangular matrix gives A*P^T*X = C.
struct EchelonTransform {
    std::size_t rank = 0;
    std::vector<std::uint32_t> row_profile;
    Perm col_perm{0};
};

// After red_col_ech_trans the body holds [[X1, X2],[R2, 0]]. With
// X = [[X1,X2],[0,I]] and Q the pivot-compression permutation derived from
// the row profile, A*P^T*X = Q~^T*[[I_r,0],[R2,0]] is the reduced column
// echelon form.
struct ReducedEchelonTransform {
    std::size_t rank = 0;
    std::vector<std::uint32_t> row_profile;
    Perm col_perm{0};
};

EchelonTransform col_ech_trans(MatView a, OpCounter& ctr);
ReducedEchelonTransform red_col_ech_trans(MatView a, OpCounter& ctr);

// Fresh explicit matrices read off the packed bodies (interop/test side;
// the in-place guarantee is scoped to the transforms themselves).
Mat echelon_form(ConstMatView body, const EchelonTransform& t);
Mat ech_transform_matrix(ConstMatView body, const EchelonTransform& t);
Mat reduced_form(ConstMatView body, const ReducedEchelonTransform& t);
Mat red_transform_matrix(ConstMatView body, const ReducedEchelonTransform& t);

// B <- A*B with no temporary the size of B; A is restored bit-exactly.
// Throws SingularMatrix when rank(A) < n (B is then untouched, A is left
// factored).
void in_place_mm(MatView a, MatView b, OpCounter& ctr);

enum class BundleKind { LSP, LQUP, QLUP, Turing };

struct LspBundle {
    Mat l_prime; // m x m unit lower
    Mat s;       // m x n, nonzero rows exactly at the row rank profile
    Perm p;      // A = L' * S * P
};

struct LqupBundle {
    Mat l_prime;
    Perm q; // row i of Q*M is row q[i] of M
    Mat u_prime;
    Perm p; // A = L' * Q * U' * P
};

struct QlupBundle {
    Perm q;
    Mat l2; // m x r unit lower trapezoidal
    Mat u2; // r x n upper, pivots on the diagonal
    Perm p; // A * P^T = Q * L'' * U''
};

struct TuringBundle {
    Mat r;                  // reduced column echelon form, m x n
    Mat lbar;               // n x n unit lower
    std::vector<Elem> dbar; // diagonal: the pivots padded with ones
    Mat ubar;               // n x n unit upper
    Perm p;                 // A * P^T = R * Lbar * diag(dbar) * Ubar
};

using DecompBundle = std::variant<LspBundle, LqupBundle, QlupBundle, TuringBundle>;

// Explicit factor sets from a packed cup body. LSP/LQUP/QLUP need only
// permutation placement plus pivot scaling; Turing additionally solves a
// small triangular system for the reduced form.
DecompBundle convert(ConstMatView body, const PackedCup& pc, BundleKind kind,
                     OpCounter& ctr);

} // namespace ranklab
