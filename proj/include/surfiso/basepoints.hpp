#pragma once

#include <string>
#include <vector>

#include "surfiso/forms.hpp"
#include "surfiso/lattice.hpp"

namespace surfiso {

/// How a point is reached from its parent. Roots are simple points of the domain.
/// ChartA blows up (u,v) -> (u, u(v+t)); ChartB blows up (u,v) -> (uv, v) and only its origin is used.
enum class Chart { Simple, A, B };

struct BasePoint {
  /// Simple points: projective coordinates with the first nonzero entry of each factor equal to 1.
  /// ChartA points: {t}. ChartB points: empty.
  std::vector<Scalar> coordinates;
  int multiplicity = 0;
  Chart chart = Chart::Simple;
  int parent = -1;            // index into BasePointTree::points, -1 for roots
  std::vector<int> children;  // indices into BasePointTree::points

  std::string to_string(Domain d) const;
};

/// All base points in breadth-first order: every parent precedes its children.
/// Position i in `points` is lattice generator e_{i+1} (resp. eps_{i+1}).
struct BasePointTree {
  Domain domain = Domain::P2;
  GroundField field;
  std::vector<BasePoint> points;

  int size() const { return static_cast<int>(points.size()); }
  std::vector<int> roots() const;
  std::vector<int> multiplicities() const;
  /// Indices of the chain from a root down to point i.
  std::vector<int> chain(int i) const;
  /// Class d*e0 - sum m_i e_i of the given (bi)degree with the tree's multiplicities.
  DivisorClass divisor_class(const Degree& deg) const;
  std::string to_string() const;
};

struct BasePointOptions {
  /// Allow adjoining one algebraic number when the input field is Q.
  bool auto_extend = true;
};

/// Base points of the linear series spanned by `forms` (common degree, constant gcd).
/// `field` is the field the search may use; it is joined with the coefficient field.
BasePointTree get_base_points(const std::vector<Poly>& forms, Domain d, const GroundField& field = {},
                              const BasePointOptions& options = {});

/// Actual multiplicities of the series spanned by `forms` at every tree point
/// (strict transforms along the tree charts). Zero where the series does not pass.
std::vector<int> tree_multiplicities(const BasePointTree& tree, const std::vector<Poly>& forms);

/// Linear conditions on coefficients over monomial_basis(domain, deg): forms F with
/// condition_matrix * coeffs(F) = 0 are exactly those with multiplicity >= mults[i] at point i
/// (infinitely near conditions through virtual transforms). Negative entries count as 0.
ScalarMatrix condition_matrix(const BasePointTree& tree, const Degree& deg, const std::vector<int>& mults);

/// Basis (echelon form, leading monomials decreasing) of forms of degree `deg` in the ring `ring`
/// satisfying the multiplicity conditions.
std::vector<Poly> set_linear_series(const BasePointTree& tree, const Degree& deg, const std::vector<int>& mults,
                                    const Ring& ring);
std::vector<Poly> set_linear_series(const BasePointTree& tree, const Degree& deg, const std::vector<int>& mults);

/// Condition polynomials for a form whose coefficients involve parameters (variables of its ring
/// after the domain coordinates). The multiplicity conditions hold iff all returned polynomials vanish.
std::vector<Poly> linear_series_conditions(const BasePointTree& tree, const Degree& deg,
                                           const std::vector<int>& mults, const Poly& form);

/// Local expansion of a form at tree point i in coordinates (u, v), using virtual transforms
/// with the given multiplicities along the chain.
Poly local_expansion(const BasePointTree& tree, int i, const std::vector<int>& mults, const Poly& form);

/// Order of vanishing at the origin (lowest total degree) of a bivariate polynomial; large for zero.
int local_order(const Poly& p);

}  // namespace surfiso
