#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "surfiso/algebra/field.hpp"

namespace surfiso {

constexpr int kMaxVars = 32;

enum class MonomialOrder { GrLex, GrevLex, Lex, Elim };

/// Exponent vector over at most kMaxVars variables.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  int deg = 0;

  int operator[](int i) const { return e[i]; }
  void set(int i, int v);
  bool divides(const Monomial& o) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  std::size_t hash() const;
};

struct RingData;

/// Polynomial ring over Q(a): ordered variable names plus a monomial order.
/// Rings are interned; handles compare by identity.
class Ring {
 public:
  Ring() = default;
  /// For MonomialOrder::Elim the first `block` variables form the eliminated block.
  static Ring make(const std::vector<std::string>& names, MonomialOrder order = MonomialOrder::GrLex, int block = 0);

  int nvars() const;
  const std::vector<std::string>& names() const;
  const std::string& name(int i) const;
  int index(const std::string& name) const;  // -1 when absent
  MonomialOrder order() const;
  int block() const;
  /// Same variables under another order.
  Ring with_order(MonomialOrder order, int block = 0) const;
  /// true when a > b in this ring's order
  bool greater(const Monomial& a, const Monomial& b) const;
  std::string monomial_string(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Ring& a, const Ring& b) { return a.d_ != b.d_; }
  bool valid() const { return d_ != nullptr; }

 private:
  explicit Ring(const RingData* d) : d_(d) {}
  const RingData* d_ = nullptr;
};

struct Term {
  Monomial m;
  Scalar c;
};

/// Sparse polynomial; terms sorted by decreasing monomial in the ring order, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring r) : ring_(r) {}
  Poly(Ring r, Scalar c);
  static Poly variable(Ring r, int i);
  static Poly variable(Ring r, const std::string& name);
  static Poly monomial(Ring r, const Monomial& m, Scalar c = Scalar(1));
  /// Builds from unsorted terms, combining duplicates.
  static Poly from_terms(Ring r, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.deg == 0); }
  Scalar constant_value() const;  // requires is_constant()
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lead() const { return t_.front(); }
  const Monomial& lead_monomial() const { return t_.front().m; }
  const Scalar& lead_coefficient() const { return t_.front().c; }
  int total_degree() const;
  int degree(int var) const;
  int min_degree(int var) const;
  /// Variables that occur.
  std::vector<int> support() const;
  bool is_homogeneous() const;
  GroundField field() const;
  Scalar coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  Poly pow(int k) const;
  Poly mul_monomial(const Monomial& m, const Scalar& c = Scalar(1)) const;
  /// Divide by a monomial that divides every term.
  Poly div_monomial(const Monomial& m) const;
  /// Leading coefficient scaled to 1.
  Poly monic() const;
  /// Gcd of all exponent vectors.
  Monomial monomial_content() const;

  /// Same polynomial in another ring; variable i goes to index map[i] (all must be valid).
  Poly in_ring(const Ring& target, const std::vector<int>& map) const;
  /// Same polynomial in a ring that contains all variable names of this one.
  Poly in_ring(const Ring& target) const;
  /// Replace each variable i by images[i] (all in one target ring).
  Poly substitute(const std::vector<Poly>& images) const;
  /// Replace selected variables by scalars; others untouched.
  Poly evaluate(const std::vector<std::pair<int, Scalar>>& values) const;
  /// Full evaluation at a point (one scalar per variable).
  Scalar eval(const std::vector<Scalar>& point) const;
  /// Coefficients with respect to the variables flagged in `vars`: keys hold only those exponents.
  std::vector<std::pair<Monomial, Poly>> coefficients_wrt(const std::vector<bool>& vars) const;
  /// Partial derivative.
  Poly derivative(int var) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> t_;
  friend class PolyBuilder;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Accumulates terms in a hash map; produces a sorted Poly.
class PolyBuilder {
 public:
  explicit PolyBuilder(Ring r);
  void add(const Monomial& m, const Scalar& c);
  void add(const Poly& p, const Scalar& c = Scalar(1));
  Poly take();

 private:
  Ring ring_;
  struct Hash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
  };
  std::unordered_map<Monomial, Scalar, Hash> acc_;
};

/// Exact division; nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
/// Multivariate gcd over the ground field, normalized monic. gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly gcd(const std::vector<Poly>& ps);
/// Gcd treating only `coord` variables as polynomial variables: factors depending only
/// on the other variables are discarded. Result is monic in the ring order.
Poly gcd_in(const std::vector<Poly>& ps, const std::vector<bool>& coord);

/// Parse "x0^2 + 3/2*x1*x2 - i*x2^2" style text. `field` supplies the generator symbol.
Poly parse_poly(const std::string& text, const Ring& ring, const GroundField& field = GroundField());

}  // namespace surfiso
