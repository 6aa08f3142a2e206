#pragma once

#include <string>
#include <vector>

#include "surfiso/algebra/field.hpp"
#include "surfiso/algebra/poly.hpp"

namespace surfiso {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  /// Rows stacked on top of each other.
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.r_ == 0) return b;
    if (b.r_ == 0) return a;
    Matrix m(a.r_ + b.r_, a.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int j = 0; j < a.c_; ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.r_; ++i)
      for (int j = 0; j < b.c_; ++j) m(a.r_ + i, j) = b(i, j);
    return m;
  }
  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Poly>;

ScalarMatrix identity_matrix(int n);
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const ScalarMatrix& b);
PolyMatrix to_poly_matrix(const ScalarMatrix& m, const Ring& r);
bool is_zero(const ScalarMatrix& m);
bool is_zero(const PolyMatrix& m);

/// Reduced row echelon form; pivot = first nonzero entry in each column scan. Returns pivot columns.
std::vector<int> rref(ScalarMatrix& m);
int rank(const ScalarMatrix& m);
/// Columns form a basis of the kernel, in reduced echelon form as row vectors. Empty (cols x 0) when trivial.
ScalarMatrix kernel_basis(const ScalarMatrix& m);
/// Throws std::domain_error when singular.
ScalarMatrix inverse(const ScalarMatrix& m);
Scalar determinant(ScalarMatrix m);
Poly determinant(const PolyMatrix& m);

struct Congruence {
  ScalarMatrix S;
  ScalarMatrix D;
};
/// S invertible with S^T A S = D diagonal. Throws InputError for non-symmetric A.
Congruence congruent_diagonalize(const ScalarMatrix& a);

std::string to_string(const ScalarMatrix& m);
std::string to_string(const PolyMatrix& m);

}  // namespace surfiso
