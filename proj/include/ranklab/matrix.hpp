#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "ranklab/field.hpp"

namespace ranklab {

// Running total of field elements handed out by Mat allocations on this
// thread. The in-place kernels are audited against it: they must not
// allocate element storage at all, while the deliberately non-in-place
// comparison algorithm shows growth. Index scratch (ints) is exempt.
std::uint64_t elem_alloc_count();
void reset_elem_alloc_count();

namespace detail {
void note_elem_alloc(std::size_t n);
}

class Mat;

// Rectangular window into a Mat. Half-open bounds, zero-copy; writes go
// straight to the underlying storage. Degenerate (0-row / 0-column)
// windows are legal and every kernel no-ops on them.
//
// Overlap bookkeeping: views remember the allocation they came from and
// their absolute rectangle, so kernels whose contract requires disjoint
// operands can reject aliased calls cheaply.
class ConstMatView {
public:
    ConstMatView(const PrimeField& f, const Elem* alloc, std::size_t stride,
                 std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols)
        : fld_(f), alloc_(alloc), stride_(stride), r0_(r0), c0_(c0), rows_(rows),
          cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    const PrimeField& field() const { return fld_; }

    Elem operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return alloc_[(r0_ + i) * stride_ + (c0_ + j)];
    }

    ConstMatView sub(std::size_t r0, std::size_t r1, std::size_t c0,
                     std::size_t c1) const;

    // True when both views window the same allocation and their rectangles
    // intersect.
    bool overlaps(const ConstMatView& o) const {
        if (alloc_ != o.alloc_) return false;
        bool row_hit = r0_ < o.r0_ + o.rows_ && o.r0_ < r0_ + rows_;
        bool col_hit = c0_ < o.c0_ + o.cols_ && o.c0_ < c0_ + cols_;
        return row_hit && col_hit && !empty() && !o.empty();
    }

protected:
    PrimeField fld_;
    const Elem* alloc_;
    std::size_t stride_;
    std::size_t r0_, c0_;
    std::size_t rows_, cols_;
};

class MatView : public ConstMatView {
public:
    MatView(const PrimeField& f, Elem* alloc, std::size_t stride, std::size_t r0,
            std::size_t c0, std::size_t rows, std::size_t cols)
        : ConstMatView(f, alloc, stride, r0, c0, rows, cols) {}

    using ConstMatView::operator();

    Elem& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return mut()[(r0_ + i) * stride_ + (c0_ + j)];
    }

    MatView sub(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

    void fill(Elem v) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < rows_);
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        assert(i < cols_ && j < cols_);
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }

private:
    Elem* mut() { return const_cast<Elem*>(alloc_); }
};

// Dense row-major matrix over GF(p). Entry (i,j) lives at flat index
// i*cols + j; that layout is part of the file-format contract.
class Mat {
public:
    Mat(const PrimeField& f, std::size_t rows, std::size_t cols)
        : fld_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {
        detail::note_elem_alloc(data_.size());
    }

    Mat(const Mat& o) : fld_(o.fld_), rows_(o.rows_), cols_(o.cols_), data_(o.data_) {
        detail::note_elem_alloc(data_.size());
    }

    Mat(Mat&&) noexcept = default;
    Mat& operator=(Mat&&) noexcept = default;
    Mat& operator=(const Mat& o) {
        if (this != &o) {
            fld_ = o.fld_;
            rows_ = o.rows_;
            cols_ = o.cols_;
            data_ = o.data_;
            detail::note_elem_alloc(data_.size());
        }
        return *this;
    }

    static Mat identity(const PrimeField& f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return fld_; }

    Elem& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    Elem operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    // Raw storage, canonicality not enforced; test code uses this to poison
    // never-read positions with out-of-range sentinels.
    std::span<Elem> raw_data() { return data_; }
    std::span<const Elem> raw_data() const { return data_; }

    MatView view() { return MatView(fld_, data_.data(), cols_, 0, 0, rows_, cols_); }
    ConstMatView view() const {
        return ConstMatView(fld_, data_.data(), cols_, 0, 0, rows_, cols_);
    }
    MatView view(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
        return view().sub(r0, r1, c0, c1);
    }
    ConstMatView view(std::size_t r0, std::size_t r1, std::size_t c0,
                      std::size_t c1) const {
        return view().sub(r0, r1, c0, c1);
    }

    bool operator==(const Mat& o) const {
        return fld_ == o.fld_ && rows_ == o.rows_ && cols_ == o.cols_ &&
               data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

private:
    PrimeField fld_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

// Free-function spelling of Mat::view with the usual bounds diagnostics.
inline MatView view(Mat& a, std::size_t r0, std::size_t r1, std::size_t c0,
                    std::size_t c1) {
    return a.view(r0, r1, c0, c1);
}

bool equal(ConstMatView a, ConstMatView b);

// Copies src into dst entry by entry; shapes must match.
void copy_into(ConstMatView src, MatView dst);

Mat to_mat(ConstMatView v);

} // namespace ranklab
