#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfiso {

/// Raised for malformed input: mixed domains, bad polynomial text, unsupported shapes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation needs an algebraic number outside the current ground field.
class ExtensionRequired : public std::runtime_error {
 public:
  ExtensionRequired(const std::string& what, std::string factor)
      : std::runtime_error(what), factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

/// Raised when an operation is called outside its precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an internal cross-check fails (e.g. a claimed solution violates an identity).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldData;

/// The rationals or a simple extension Q(a) with a monic irreducible minimal polynomial.
/// Field descriptors are interned and live for the whole process, so handles compare by identity.
class GroundField {
 public:
  GroundField() = default;

  static GroundField rationals() { return {}; }
  /// `minpoly` holds coefficients low to high; it is made monic and checked for irreducibility.
  static GroundField extension(const std::string& generator, std::vector<mpq_class> minpoly);

  bool is_rational() const { return data_ == nullptr; }
  int degree() const;
  const std::string& generator() const;
  /// Monic minimal polynomial, low to high. Empty for the rationals.
  std::span<const mpq_class> minimal_polynomial() const;
  const FieldData* data() const { return data_; }
  std::string to_string() const;

  /// The common field of two fields where one contains the other; throws otherwise.
  static GroundField join(const GroundField& a, const GroundField& b);

  friend bool operator==(const GroundField& a, const GroundField& b) { return a.data_ == b.data_; }

 private:
  explicit GroundField(const FieldData* d) : data_(d) {}
  const FieldData* data_ = nullptr;
  friend class Scalar;
};

/// Element of a ground field, stored canonically as c0 + c1 a + ... + c_{k-1} a^{k-1}.
/// Rational values carry no field, so they mix freely with elements of any extension.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : c0_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : c0_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class v) : c0_(std::move(v)) { c0_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  Scalar(mpz_class v) : c0_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static Scalar generator(const GroundField& f);
  /// Builds c[0] + c[1] a + ... reduced modulo the minimal polynomial of `f`.
  static Scalar from_coefficients(const GroundField& f, std::vector<mpq_class> c);

  bool is_zero() const { return hi_.empty() && sgn(c0_) == 0; }
  bool is_one() const { return hi_.empty() && c0_ == 1; }
  bool is_rational() const { return hi_.empty(); }
  const mpq_class& rational() const;  // throws unless is_rational()
  /// Coefficient of a^i in the canonical representation.
  mpq_class coefficient(int i) const;
  /// Field this element needs; rationals for rational values.
  GroundField field() const { return GroundField(field_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c0_ == b.c0_ && a.hi_ == b.hi_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Norm down to Q over the element's own field (determinant of multiplication).
  mpq_class norm() const;
  /// Canonical text: "p/q" for rationals, else a polynomial in the generator.
  std::string to_string() const;
  /// Like to_string but wrapped in parentheses when it is a sum.
  std::string to_factor_string() const;
  /// Total order on canonical representations (used for deterministic sorting).
  friend bool canonical_less(const Scalar& a, const Scalar& b);
  std::size_t hash() const;

 private:
  void normalize();
  const FieldData* field_ = nullptr;
  mpq_class c0_;
  std::vector<mpq_class> hi_;  // coefficients of a^1 .. a^{k-1}; trimmed
};

/// Dense univariate polynomial over Q, coefficients low to high.
using QPoly = std::vector<mpq_class>;

void qpoly_trim(QPoly& p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
/// Quotient and remainder of a by b (b nonzero).
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);
QPoly qpoly_gcd(QPoly a, QPoly b);
std::string qpoly_to_string(const QPoly& p, const std::string& var);

}  // namespace surfiso
