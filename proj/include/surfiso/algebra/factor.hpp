#pragma once

#include <utility>
#include <vector>

#include "surfiso/algebra/field.hpp"

namespace surfiso {

/// Dense univariate polynomial over a ground field, coefficients low to high, trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(Scalar c) { return UPoly(std::vector<Scalar>{std::move(c)}); }
  static UPoly x() { return UPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Scalar& operator[](int i) const { return c_[i]; }
  Scalar coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Scalar(); }
  const Scalar& leading() const { return c_.back(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  GroundField field() const;

  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& x) const;
  /// p(x + s)
  UPoly shift(const Scalar& s) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Scalar& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; zero when both are zero.
UPoly gcd(UPoly a, UPoly b);

/// Factor a nonzero polynomial over Q into monic irreducible factors with multiplicities.
/// The constant content is dropped. Factors are sorted by degree, then canonically.
std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& p);

/// Factor over the field `k` (which must contain the coefficients of p).
std::vector<std::pair<UPoly, int>> factor(const UPoly& p, const GroundField& k);

/// Roots in `k` with multiplicities, sorted canonically. Irreducible factors of degree > 1
/// are returned in `rest` when non-null.
std::vector<std::pair<Scalar, int>> roots(const UPoly& p, const GroundField& k,
                                          std::vector<UPoly>* rest = nullptr);

}  // namespace surfiso
