#pragma once

#include <cstdint>
#include <vector>

#include "ranklab/matrix.hpp"

namespace ranklab {

// One-line permutation sigma on {0..k-1}. The associated matrix P has
// P[i, sigma(i)] = 1, so with row-major semantics:
//   row i of P*A      = row sigma(i) of A
//   column j of A*P^T = column sigma(j) of A
class Perm {
public:
    explicit Perm(std::size_t k);                       // identity
    explicit Perm(std::vector<std::uint32_t> sigma);    // validated bijection

    static Perm transposition(std::size_t i, std::size_t j, std::size_t k);

    std::size_t order() const { return sigma_.size(); }
    std::uint32_t operator[](std::size_t i) const { return sigma_[i]; }
    const std::vector<std::uint32_t>& sigma() const { return sigma_; }

    bool is_identity() const;

    Perm inverse() const;

    // Diag(I_offset, *this) padded with fixed points up to `total`.
    Perm embed_at(std::size_t offset, std::size_t total) const;

    // Parity via cycle decomposition: +1 even, -1 odd.
    int sign() const;

    bool operator==(const Perm& o) const { return sigma_ == o.sigma_; }
    bool operator!=(const Perm& o) const { return !(*this == o); }

private:
    std::vector<std::uint32_t> sigma_;
};

// Permutation whose matrix is the product P*Q.
Perm perm_compose(const Perm& p, const Perm& q);

// A <- P*A (inverse=false) or A <- P^T*A (inverse=true). In-place cycle
// chase with O(k) index scratch; no element storage is allocated.
void perm_apply_rows(MatView a, const Perm& p, bool inverse);

// A <- A*P^T (inverse=false) or A <- A*P (inverse=true).
void perm_apply_cols(MatView a, const Perm& p, bool inverse);

// Explicit 0/1 matrix of P, for oracle-style checks.
Mat perm_matrix(const Perm& p, const PrimeField& f);

} // namespace ranklab
