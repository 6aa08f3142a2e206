#include "surfiso/algebra/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace surfiso {

ScalarMatrix identity_matrix(int n) {
  ScalarMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw ContractError("matrix shape mismatch");
  ScalarMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw ContractError("matrix shape mismatch");
  Ring r;
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      if (a(i, k).ring().valid()) r = a(i, k).ring();
  PolyMatrix m(a.rows(), b.cols(), Poly(r));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      PolyBuilder pb(r);
      for (int k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) pb.add(a(i, k) * b(k, j));
      m(i, j) = pb.take();
    }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw ContractError("matrix shape mismatch");
  PolyMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    Ring r;
    for (int k = 0; k < a.cols(); ++k)
      if (a(i, k).ring().valid()) r = a(i, k).ring();
    for (int j = 0; j < b.cols(); ++j) {
      PolyBuilder pb(r);
      for (int k = 0; k < a.cols(); ++k)
        if (!b(k, j).is_zero()) pb.add(a(i, k), b(k, j));
      m(i, j) = pb.take();
    }
  }
  return m;
}

PolyMatrix to_poly_matrix(const ScalarMatrix& m, const Ring& r) {
  PolyMatrix p(m.rows(), m.cols(), Poly(r));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) p(i, j) = Poly(r, m(i, j));
  return p;
}

bool is_zero(const ScalarMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_zero(const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

std::vector<int> rref(ScalarMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Scalar inv = m(row, col).inverse();
    for (int j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const ScalarMatrix& m) {
  ScalarMatrix t = m;
  return static_cast<int>(rref(t).size());
}

ScalarMatrix kernel_basis(const ScalarMatrix& m) {
  ScalarMatrix r = m;
  auto piv = rref(r);
  const int n = m.cols();
  std::vector<bool> is_piv(n, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  ScalarMatrix k(static_cast<int>(free.size()), n);
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(static_cast<int>(f), free[f]) = Scalar(1);
    for (std::size_t i = 0; i < piv.size(); ++i) k(static_cast<int>(f), piv[i]) = -r(static_cast<int>(i), free[f]);
  }
  rref(k);
  return k.transpose();
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw ContractError("inverse of a non-square matrix");
  ScalarMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  return aug.block(0, n, n, n);
}

Scalar determinant(ScalarMatrix m) {
  const int n = m.rows();
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Poly determinant(const PolyMatrix& m) {
  const int n = m.rows();
  Ring r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j).ring().valid()) r = m(i, j).ring();
  if (n == 0) return Poly(r, Scalar(1));
  if (n == 1) return m(0, 0);
  // Laplace expansion along the first row (small sizes only).
  Poly det(r);
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    Poly t = m(0, j) * determinant(minor);
    if (j % 2) det -= t;
    else det += t;
  }
  return det;
}

Congruence congruent_diagonalize(const ScalarMatrix& a) {
  const int n = a.rows();
  if (a.cols() != n) throw InputError("congruence diagonalization needs a square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (a(i, j) != a(j, i)) throw InputError("matrix is not symmetric");
  ScalarMatrix d = a, s = identity_matrix(n);
  // column operation on S and the corresponding congruence on D
  auto add_multiple = [&](int dst, int src, const Scalar& f) {  // e_dst += f e_src
    for (int i = 0; i < n; ++i) s(i, dst) += f * s(i, src);
    for (int i = 0; i < n; ++i) d(i, dst) += f * d(i, src);
    for (int j = 0; j < n; ++j) d(dst, j) += f * d(src, j);
  };
  auto swap_basis = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < n; ++i) std::swap(s(i, x), s(i, y));
    for (int i = 0; i < n; ++i) std::swap(d(i, x), d(i, y));
    for (int j = 0; j < n; ++j) std::swap(d(x, j), d(y, j));
  };
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n && p < 0; ++i)
      if (!d(i, i).is_zero()) p = i;
    if (p < 0) {
      int pi = -1, pj = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!d(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;  // remaining block is zero
      add_multiple(pi, pj, Scalar(1));
      p = pi;
    }
    swap_basis(k, p);
    const Scalar inv = d(k, k).inverse();
    for (int j = k + 1; j < n; ++j) {
      if (d(k, j).is_zero()) continue;
      add_multiple(j, k, -(d(k, j) * inv));
    }
  }
  return {s, d};
}

std::string to_string(const ScalarMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
  }
  os << "]";
  return os.str();
}

std::string to_string(const PolyMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
  }
  os << "]";
  return os.str();
}

}  // namespace surfiso
