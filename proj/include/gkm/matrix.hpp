#pragma once

#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

// Small dense matrix over an exact coefficient type.  A zero exemplar is kept
// so that coefficient types carrying shared state (TSeries variable tables)
// can be constructed uniformly.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

  static Mat identity(int n, const T& zero, const T& one) {
    Mat m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& at(int r, int c) { return a_[r * cols_ + c]; }
  const T& at(int r, int c) const { return a_[r * cols_ + c]; }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Mat& operator+=(const Mat& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r(a.rows_, b.cols_, a.zero_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Mat& o) const { return a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  int rows_ = 0, cols_ = 0;
  T zero_;
  std::vector<T> a_;
};

// Exact inverse by Gaussian elimination; T must be a field type with
// is_zero() and inverse().  Throws MathError on singular input.
template <class T>
Mat<T> mat_inverse(const Mat<T>& m, const T& one) {
  int n = m.rows();
  Mat<T> a = m;
  Mat<T> inv = Mat<T>::identity(n, m.zero(), one);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw MathError("singular matrix");
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(piv, c), a.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    T pinv = a.at(col, col).inverse();
    for (int c = 0; c < n; ++c) {
      a.at(col, c) = a.at(col, c) * pinv;
      inv.at(col, c) = inv.at(col, c) * pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      T f = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

}  // namespace gkm
