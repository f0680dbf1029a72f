#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace pmg {

/// Row-major dense matrix over any ring-like scalar.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T sum(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
    return sum;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.cols_ == b.rows_);
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      auto out = c.row(i);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        auto in = b.row(k);
        for (std::size_t j = 0; j < b.cols_; ++j) out[j] += aik * in[j];
      }
    }
    return c;
  }

  /// Adds `value` to every entry.
  DenseMatrix& add_constant(const T& value) {
    for (auto& x : data_) x += value;
    return *this;
  }

  std::span<const T> data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
T max_abs(const DenseMatrix<T>& m) {
  T best(0);
  for (const T& x : m.data()) {
    T a = x < T(0) ? T(-x) : x;
    if (best < a) best = a;
  }
  return best;
}

}  // namespace pmg
