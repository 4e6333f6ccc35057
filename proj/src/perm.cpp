#include "ranklab/perm.hpp"

#include <numeric>
#include <string>

namespace ranklab {

Perm::Perm(std::size_t k) : sigma_(k) {
    std::iota(sigma_.begin(), sigma_.end(), 0u);
}

Perm::Perm(std::vector<std::uint32_t> sigma) : sigma_(std::move(sigma)) {
    std::vector<std::uint8_t> seen(sigma_.size(), 0);
    for (auto v : sigma_) {
        if (v >= sigma_.size() || seen[v])
            throw DimensionMismatch("one-line array is not a permutation");
        seen[v] = 1;
    }
}

Perm Perm::transposition(std::size_t i, std::size_t j, std::size_t k) {
    if (i >= k || j >= k) throw BoundsError("transposition index past order");
    Perm p(k);
    std::swap(p.sigma_[i], p.sigma_[j]);
    return p;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        if (sigma_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<std::uint32_t> inv(sigma_.size());
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        inv[sigma_[i]] = static_cast<std::uint32_t>(i);
    return Perm(std::move(inv));
}

Perm Perm::embed_at(std::size_t offset, std::size_t total) const {
    if (offset + sigma_.size() > total)
        throw DimensionMismatch("embedded permutation exceeds target order");
    std::vector<std::uint32_t> s(total);
    std::iota(s.begin(), s.end(), 0u);
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        s[offset + i] = static_cast<std::uint32_t>(offset) + sigma_[i];
    return Perm(std::move(s));
}

int Perm::sign() const {
    std::vector<std::uint8_t> seen(sigma_.size(), 0);
    std::size_t transpositions = 0;
    for (std::size_t s = 0; s < sigma_.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        std::size_t j = s;
        while (!seen[j]) {
            seen[j] = 1;
            j = sigma_[j];
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    if (p.order() != q.order())
        throw DimensionMismatch("composing permutations of orders " +
                                std::to_string(p.order()) + " and " +
                                std::to_string(q.order()));
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    // (PQ)[i,j] = 1 iff j = sigma_q(sigma_p(i)).
    std::vector<std::uint32_t> s(p.order());
    for (std::size_t i = 0; i < p.order(); ++i) s[i] = q[p[i]];
    return Perm(std::move(s));
}

namespace {

// In-place "new slot i <- old slot tau(i)" over rows or columns: walk each
// cycle of tau, swapping adjacent slots along the way.
template <typename SwapFn>
void apply_cycles(const std::vector<std::uint32_t>& tau, std::size_t k, SwapFn&& swp) {
    std::vector<std::uint8_t> seen(k, 0);
    for (std::size_t s = 0; s < k; ++s) {
        if (seen[s]) continue;
        std::size_t j = s;
        while (true) {
            seen[j] = 1;
            std::size_t nxt = tau[j];
            if (nxt == s) break;
            swp(j, nxt);
            j = nxt;
        }
    }
}

} // namespace

void perm_apply_rows(MatView a, const Perm& p, bool inverse) {
    if (p.order() != a.rows())
        throw DimensionMismatch("permutation order " + std::to_string(p.order()) +
                                " vs " + std::to_string(a.rows()) + " rows");
    if (a.empty() || p.order() < 2 || p.is_identity()) return;
    auto swp = [&](std::size_t i, std::size_t j) { a.swap_rows(i, j); };
    if (inverse)
        apply_cycles(p.inverse().sigma(), a.rows(), swp);
    else
        apply_cycles(p.sigma(), a.rows(), swp);
}

void perm_apply_cols(MatView a, const Perm& p, bool inverse) {
    if (p.order() != a.cols())
        throw DimensionMismatch("permutation order " + std::to_string(p.order()) +
                                " vs " + std::to_string(a.cols()) + " columns");
    if (a.empty() || p.order() < 2 || p.is_identity()) return;
    auto swp = [&](std::size_t i, std::size_t j) { a.swap_cols(i, j); };
    if (inverse)
        apply_cycles(p.inverse().sigma(), a.cols(), swp);
    else
        apply_cycles(p.sigma(), a.cols(), swp);
}

Mat perm_matrix(const Perm& p, const PrimeField& f) {
    Mat m(f, p.order(), p.order());
    for (std::size_t i = 0; i < p.order(); ++i) m(i, p[i]) = f.one();
    return m;
}

} // namespace ranklab
