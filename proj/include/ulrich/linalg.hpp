#pragma once

#include <stdexcept>
#include <vector>

#include "ulrich/field.hpp"

namespace ulrich {

/// Dense row-major matrix over an exact field.
template <Field F>
class DenseMatrix {
 public:
  using Scalar = typename F::value_type;

  DenseMatrix(F field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field_.zero()) {}

  static DenseMatrix identity(F field, int n) {
    DenseMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  const F& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    DenseMatrix r(a.field_, a.rows_, b.cols_);
    const F& f = a.field_;
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (f.is_zero(a(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(a(i, k), b(k, j)));
      }
    return r;
  }
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    DenseMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return r;
  }
  DenseMatrix scaled(const Scalar& c) const {
    DenseMatrix r = *this;
    for (auto& v : r.data_) v = field_.mul(v, c);
    return r;
  }
  DenseMatrix operator-() const { return scaled(field_.neg(field_.one())); }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.is_zero(a.field_.sub(a.data_[i], b.data_[i]))) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  /// [A | B]
  static DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    DenseMatrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }
  /// [A ; B]
  static DenseMatrix vconcat(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    DenseMatrix r(a.field_, a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
    return r;
  }

  /// Rank by Gaussian elimination.
  int rank() const {
    DenseMatrix m = *this;
    const F& f = field_;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if (!f.is_zero(m(i, c))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != r)
        for (int j = 0; j < cols_; ++j) std::swap(m(piv, j), m(r, j));
      auto inv = f.inv(m(r, c));
      for (int i = r + 1; i < rows_; ++i) {
        if (f.is_zero(m(i, c))) continue;
        auto factor = f.mul(m(i, c), inv);
        for (int j = c; j < cols_; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
      ++r;
    }
    return r;
  }

 private:
  F field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace ulrich
