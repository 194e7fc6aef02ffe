#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "latwidth/errors.hpp"
#include "latwidth/scalar.hpp"

// Small dense exact linear algebra over Rational or ExactScalar. Sizes here
// are tiny (d <= 7 in the exact paths, a few hundred for block-diagonal rank
// checks), so plain Gaussian elimination with first-nonzero pivoting is fine.
namespace latwidth {

template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::initializer_list<T> entries)
      : rows_(rows), cols_(cols), a_(entries) {
    if (a_.size() != rows * cols) fail(errc::invalid_argument, "matrix literal size mismatch");
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <typename T>
std::vector<T> mat_vec(const Mat<T>& m, const std::vector<T>& v) {
  if (v.size() != m.cols()) fail(errc::invalid_argument, "mat_vec shape mismatch");
  std::vector<T> r(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r[i] += m(i, j) * v[j];
  return r;
}

template <typename T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) fail(errc::invalid_argument, "mat_mul shape mismatch");
  Mat<T> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) fail(errc::invalid_argument, "dot shape mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

template <typename T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename T>
std::vector<T> vec_scale(const T& k, const std::vector<T>& v) {
  std::vector<T> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

template <typename T>
bool vec_is_zero(const std::vector<T>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Row echelon rank; operates on a copy.
template <typename T>
std::size_t rank(Mat<T> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      T f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

template <typename T>
T determinant(Mat<T> m) {
  if (m.rows() != m.cols()) fail(errc::invalid_argument, "determinant of non-square matrix");
  T det(1);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      T f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <typename T>
Mat<T> inverse(Mat<T> m) {
  if (m.rows() != m.cols()) fail(errc::invalid_argument, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Mat<T> inv = Mat<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) fail(errc::singular_matrix, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    T piv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Solve A x = b for square invertible A.
template <typename T>
std::vector<T> solve(const Mat<T>& a, const std::vector<T>& b) {
  return mat_vec(inverse(a), b);
}

// LDL^T of a symmetric positive definite matrix: G = L D L^T with L unit
// lower triangular. Throws if a pivot fails to be positive.
template <typename T>
void ldl_decompose(const Mat<T>& g, Mat<T>& l, std::vector<T>& d) {
  std::size_t n = g.rows();
  l = Mat<T>::identity(n);
  d.assign(n, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    T dj = g(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= l(j, k) * l(j, k) * d[k];
    if (dj.sign() <= 0) fail(errc::degenerate_polytope, "quadratic form not positive definite");
    d[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      T v = g(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k) * d[k];
      l(i, j) = v / dj;
    }
  }
}

// Conversions between Rational and ExactScalar vectors/matrices.
inline Point to_scalar_vec(const RatVec& v) {
  Point p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = ExactScalar(v[i]);
  return p;
}

inline Mat<ExactScalar> to_scalar_mat(const Mat<Rational>& m) {
  Mat<ExactScalar> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = ExactScalar(m(i, j));
  return r;
}

// Succeeds only when every entry is rational.
inline RatVec to_rational_vec(const Point& p) {
  RatVec v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i].as_rational();
  return v;
}

}  // namespace latwidth
