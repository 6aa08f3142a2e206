#pragma once

#include <string>
#include <vector>

#include "surfiso/forms.hpp"

namespace surfiso {

/// Class d*e0 - sum m_i e_i on blown-up P2, or a0*l0 + a1*l1 - sum m_i eps_i on blown-up P1xP1.
/// Multiplicities are indexed against one base-point tree; zeros are stored.
struct DivisorClass {
  Domain domain = Domain::P2;
  Degree degree;           // (d, 0) on P2
  std::vector<int> mults;  // m_1 .. m_r

  DivisorClass() = default;
  DivisorClass(Domain dom, Degree deg, std::vector<int> m) : domain(dom), degree(deg), mults(std::move(m)) {}
  static DivisorClass zero(Domain dom, int r) { return {dom, {0, 0}, std::vector<int>(r, 0)}; }

  int rank() const { return static_cast<int>(mults.size()); }
  bool is_zero() const;
  /// Text form "3*e0-2*e1-e2-e3" or "5*l0+5*l1-2*eps1".
  std::string to_string() const;

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(int k, const DivisorClass& a);
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.domain == b.domain && a.degree == b.degree && a.mults == b.mults;
  }
  friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }
};

/// Intersection product. Throws InputError for classes from different lattices.
int intersect(const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(Domain d, int r);
/// Gcd of all coordinates. Throws InputError for the zero class.
int class_gcd(const DivisorClass& c);
/// c divided by an integer that divides all coordinates.
DivisorClass divide(const DivisorClass& c, int k);

}  // namespace surfiso
