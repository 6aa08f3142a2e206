#pragma once

#include <string>
#include <vector>

#include "surfiso/algebra/matrix.hpp"
#include "surfiso/algebra/poly.hpp"

namespace surfiso {

enum class Domain { P2, P1xP1 };

std::string to_string(Domain d);
Domain parse_domain(const std::string& s);
/// Number of homogeneous coordinates: 3 for P2, 4 for P1xP1.
int coordinate_count(Domain d);
/// x0,x1,x2 or y0,y1,y2,y3.
std::vector<std::string> coordinate_names(Domain d);
/// Coordinate ring under graded lex.
Ring domain_ring(Domain d);
/// Coordinates followed by parameter names.
Ring param_ring(Domain d, const std::vector<std::string>& params);

/// Degree of a form: (d, 0) on P2, bidegree (d1, d2) on P1xP1.
struct Degree {
  int d1 = 0, d2 = 0;
  friend bool operator==(const Degree& a, const Degree& b) { return a.d1 == b.d1 && a.d2 == b.d2; }
  friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }
};
std::string to_string(Domain d, const Degree& deg);

/// Degree of a homogeneous (bihomogeneous) form in the coordinates of `d`, which must be the
/// first variables of the polynomial's ring. Throws InputError when not homogeneous.
Degree form_degree(const Poly& p, Domain d);
/// Monomials of the given degree in decreasing order (the column order of coefficient matrices).
std::vector<Monomial> monomial_basis(Domain d, const Degree& deg);
/// Number of monomials of this degree.
int monomial_count(Domain d, const Degree& deg);

/// Greatest common divisor of forms, monic in the fixed monomial order.
Poly form_gcd(const std::vector<Poly>& forms);
/// Gcd in the coordinate variables only; parameter-only factors are dropped.
Poly form_gcd(const std::vector<Poly>& forms, Domain d);

/// A rational map from P2 or P1xP1 given by forms of a common degree with constant gcd.
/// The components may carry symbolic parameters after the coordinates in their ring.
struct Parametrization {
  Domain domain = Domain::P2;
  std::vector<Poly> components;

  Degree degree() const;
  GroundField field() const;
  const Ring& ring() const { return components.front().ring(); }
  /// Throws InputError unless components are nonzero forms of one degree with constant gcd.
  void validate() const;
  std::string to_string() const;
};

/// Divide all components by their gcd.
Parametrization strip_gcd(const Parametrization& f);
/// Rows: components; columns: monomial_basis(domain, degree). Entries may be polynomials in parameters.
PolyMatrix coefficient_matrix_poly(const Parametrization& f);
/// Parameter-free coefficient matrix.
ScalarMatrix coefficient_matrix(const Parametrization& f);
/// Inverse of coefficient_matrix: forms from rows over the monomial basis.
std::vector<Poly> forms_from_rows(const ScalarMatrix& rows, Domain d, const Degree& deg, const Ring& ring);
/// Coefficient vector of one form over the monomial basis.
std::vector<Poly> coefficient_vector(const Poly& form, Domain d, const Degree& deg);

/// Ring of the ambient space P^n with coordinates z0..zn.
Ring ambient_ring(int n);
/// Monomials of degree `deg` in variables 0..nvars-1, decreasing in lex order.
std::vector<Monomial> homogeneous_monomials(int nvars, int deg);
/// Basis of the degree-d forms in z0..zn vanishing on img f (parameter-free f).
std::vector<Poly> implicit_forms(const Parametrization& f, int d);

}  // namespace surfiso
