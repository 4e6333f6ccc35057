#pragma once

#include <initializer_list>
#include <vector>

#include "ranklab/perm.hpp"
#include "ranklab/reference.hpp"

namespace tst {

using namespace ranklab;

inline Mat mat(const PrimeField& f,
               std::initializer_list<std::initializer_list<Elem>> rows) {
    std::size_t m = rows.size();
    std::size_t n = m ? rows.begin()->size() : 0;
    Mat a(f, m, n);
    std::size_t i = 0;
    for (auto& r : rows) {
        std::size_t j = 0;
        for (auto v : r) a(i, j++) = v;
        ++i;
    }
    return a;
}

inline Mat transpose(const Mat& a) {
    Mat t(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline Mat apply_cols_copy(const Mat& a, const Perm& p, bool inverse) {
    Mat m = a;
    perm_apply_cols(m.view(), p, inverse);
    return m;
}

inline Mat apply_rows_copy(const Mat& a, const Perm& p, bool inverse) {
    Mat m = a;
    perm_apply_rows(m.view(), p, inverse);
    return m;
}

// Dense triangular matrix from a possibly-packed source: keeps the
// selected triangle, forces ones on the diagonal for Unit.
inline Mat expand_triangle(const Mat& src, UpLo uplo, Diag diag) {
    const PrimeField& f = src.field();
    std::size_t n = src.rows();
    Mat t(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        t(i, i) = diag == Diag::Unit ? f.one() : src(i, i);
        if (uplo == UpLo::Upper)
            for (std::size_t j = i + 1; j < n; ++j) t(i, j) = src(i, j);
        else
            for (std::size_t j = 0; j < i; ++j) t(i, j) = src(i, j);
    }
    return t;
}

} // namespace tst
