#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cgk {

using Int = mpz_class;
using Rat = mpq_class;

// Dense row-major matrix. Used with Int, Rat and int64_t entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const T& fill = T(0))
      : r_(r), c_(c), a_(r * c, fill) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows)
      for (long v : row) a_.push_back(T(v));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return a_[i * c_ + j];
  }

  std::vector<T>& data() { return a_; }
  const std::vector<T>& data() const { return a_; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix m(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix m(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
    return m;
  }
  Matrix operator-() const {
    Matrix m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
  }
  Matrix operator*(const Matrix& o) const {
    Matrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
      }
    return m;
  }
  Matrix scaled(const T& s) const {
    Matrix m(*this);
    for (auto& x : m.a_) x *= s;
    return m;
  }

  bool operator==(const Matrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Copy of the block starting at (r0, c0) with the given shape.
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
RatMatrix to_rat(const IntMatrix& m);

// Determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(IntMatrix a);

struct SmithForm {
  std::vector<Int> diag;  // length min(rows, cols), non-negative, d_i | d_{i+1}
  IntMatrix left;         // unimodular, left * A * right = diag
  IntMatrix left_inv;
  IntMatrix right;
};

// Smith normal form over Z. Transforms are tracked only when requested.
SmithForm smith_form(const IntMatrix& a, bool with_transforms = true);

// Exact inverse of a nonsingular integer matrix, over Q.
RatMatrix rat_inverse(const RatMatrix& a);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

}  // namespace cgk
