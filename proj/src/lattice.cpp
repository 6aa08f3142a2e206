#include "surfiso/lattice.hpp"

#include <numeric>
#include <sstream>

namespace surfiso {

namespace {

void check_compatible(const DivisorClass& a, const DivisorClass& b) {
  if (a.domain != b.domain) throw InputError("classes on different domains");
  if (a.mults.size() != b.mults.size()) throw InputError("classes indexed against different base-point sets");
}

void append_term(std::ostringstream& os, bool& first, int coeff, const std::string& gen) {
  if (coeff == 0) return;
  if (coeff < 0) os << "-";
  else if (!first) os << "+";
  int a = coeff < 0 ? -coeff : coeff;
  if (a != 1) os << a << "*";
  os << gen;
  first = false;
}

}  // namespace

bool DivisorClass::is_zero() const {
  if (degree.d1 || degree.d2) return false;
  for (int m : mults)
    if (m) return false;
  return true;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (domain == Domain::P2) {
    append_term(os, first, degree.d1, "e0");
    for (std::size_t i = 0; i < mults.size(); ++i) append_term(os, first, -mults[i], "e" + std::to_string(i + 1));
  } else {
    append_term(os, first, degree.d1, "l0");
    append_term(os, first, degree.d2, "l1");
    for (std::size_t i = 0; i < mults.size(); ++i) append_term(os, first, -mults[i], "eps" + std::to_string(i + 1));
  }
  if (first) os << "0";
  return os.str();
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  check_compatible(a, b);
  DivisorClass c = a;
  c.degree.d1 += b.degree.d1;
  c.degree.d2 += b.degree.d2;
  for (std::size_t i = 0; i < c.mults.size(); ++i) c.mults[i] += b.mults[i];
  return c;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-1) * b; }

DivisorClass operator*(int k, const DivisorClass& a) {
  DivisorClass c = a;
  c.degree.d1 *= k;
  c.degree.d2 *= k;
  for (auto& m : c.mults) m *= k;
  return c;
}

int intersect(const DivisorClass& a, const DivisorClass& b) {
  check_compatible(a, b);
  int s = a.domain == Domain::P2 ? a.degree.d1 * b.degree.d1 : a.degree.d1 * b.degree.d2 + a.degree.d2 * b.degree.d1;
  for (std::size_t i = 0; i < a.mults.size(); ++i) s -= a.mults[i] * b.mults[i];
  return s;
}

DivisorClass canonical_class(Domain d, int r) {
  if (r < 0) throw InputError("negative number of base points");
  if (d == Domain::P2) return {d, {-3, 0}, std::vector<int>(r, -1)};
  return {d, {-2, -2}, std::vector<int>(r, -1)};
}

int class_gcd(const DivisorClass& c) {
  if (c.is_zero()) throw InputError("gcd of the zero class");
  int g = std::gcd(c.degree.d1, c.degree.d2);
  for (int m : c.mults) g = std::gcd(g, m);
  return g;
}

DivisorClass divide(const DivisorClass& c, int k) {
  if (k == 0) throw ContractError("division of a class by zero");
  DivisorClass r = c;
  auto div = [k](int& v) {
    if (v % k) throw ContractError("class is not divisible");
    v /= k;
  };
  div(r.degree.d1);
  div(r.degree.d2);
  for (auto& m : r.mults) div(m);
  return r;
}

}  // namespace surfiso
