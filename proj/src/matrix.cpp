#include "ranklab/matrix.hpp"

#include <string>

namespace ranklab {

namespace {
thread_local std::uint64_t g_elem_allocs = 0;
}

std::uint64_t elem_alloc_count() { return g_elem_allocs; }
void reset_elem_alloc_count() { g_elem_allocs = 0; }

namespace detail {
void note_elem_alloc(std::size_t n) { g_elem_allocs += n; }
}

namespace {
void check_bounds(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1,
                  std::size_t rows, std::size_t cols) {
    if (r0 > r1 || r1 > rows || c0 > c1 || c1 > cols)
        throw BoundsError("window [" + std::to_string(r0) + "," + std::to_string(r1) +
                          ")x[" + std::to_string(c0) + "," + std::to_string(c1) +
                          ") of " + std::to_string(rows) + "x" + std::to_string(cols));
}
} // namespace

ConstMatView ConstMatView::sub(std::size_t r0, std::size_t r1, std::size_t c0,
                               std::size_t c1) const {
    check_bounds(r0, r1, c0, c1, rows_, cols_);
    return ConstMatView(fld_, alloc_, stride_, r0_ + r0, c0_ + c0, r1 - r0, c1 - c0);
}

MatView MatView::sub(std::size_t r0, std::size_t r1, std::size_t c0,
                     std::size_t c1) const {
    check_bounds(r0, r1, c0, c1, rows_, cols_);
    return MatView(fld_, const_cast<Elem*>(alloc_), stride_, r0_ + r0, c0_ + c0,
                   r1 - r0, c1 - c0);
}

bool equal(ConstMatView a, ConstMatView b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.field() != b.field()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

void copy_into(ConstMatView src, MatView dst) {
    if (src.rows() != dst.rows() || src.cols() != dst.cols())
        throw DimensionMismatch("copy_into shapes differ");
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) dst(i, j) = src(i, j);
}

Mat to_mat(ConstMatView v) {
    Mat m(v.field(), v.rows(), v.cols());
    copy_into(v, m.view());
    return m;
}

} // namespace ranklab
