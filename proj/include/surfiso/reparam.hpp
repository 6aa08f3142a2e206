#pragma once

#include <memory>
#include <string>
#include <vector>

#include "surfiso/adjunction.hpp"

namespace surfiso {

/// Source or target of a rational map. P2 uses x0..x2, P1xP1 uses y0..y3, Pn uses z0..zn.
/// P2 and Pn with n = 2 are interchangeable for composition.
struct Space {
  enum Kind { P2, P1xP1, Pn } kind = P2;
  int n = 2;

  static Space plane() { return {P2, 2}; }
  static Space quadric() { return {P1xP1, 3}; }
  static Space projective(int n) { return {Pn, n}; }
  static Space of(Domain d) { return d == Domain::P2 ? plane() : quadric(); }

  int coordinates() const { return kind == P1xP1 ? 4 : n + 1; }
  std::vector<std::string> names() const;
  bool product() const { return kind == P1xP1; }
  friend bool operator==(const Space& a, const Space& b) { return a.kind == b.kind && a.n == b.n; }
  std::string to_string() const;
};

/// Components live in a ring whose first variables are the source coordinates; any further
/// variables are parameters. For a P1xP1 target the components are two pairs of forms.
struct RationalMap {
  Space source, target;
  std::vector<Poly> components;

  const Ring& ring() const { return components.front().ring(); }
  std::vector<std::string> parameters() const;
  bool symbolic() const { return !parameters().empty(); }
  std::string to_string() const;
};

RationalMap as_rational_map(const Parametrization& f);
/// The domain-to-image map of a parameter-free RationalMap with a non-product target.
Parametrization as_parametrization(const RationalMap& m, Domain d);

/// outer o inner. Parameters are merged by name. With `strip` the common factor in the
/// source coordinates is removed (pairwise for a P1xP1 target).
RationalMap compose(const RationalMap& outer, const RationalMap& inner, bool strip = true);

/// Removes the common factor in the source coordinates (pairwise for a P1xP1 target).
RationalMap strip_common_factor(const RationalMap& m);

/// Identity map of a space.
RationalMap identity_map(const Space& s);

/// A parametrized set of candidate reparametrizations dom f -> dom g.
struct ReparamFamily {
  std::vector<std::string> params;  // names of the parameters in member.ring()
  RationalMap member;
  std::vector<Poly> equations;    // extra constraints on parameters (cone case)
  std::vector<Poly> inequations;  // nonvanishing determinants and auxiliary unknowns
  /// Each group lists parameter indices (into params) of one matrix whose first nonzero entry is one.
  std::vector<std::vector<int>> normalization;
  std::string label;
  /// An equivalent family without equations, used for solving when present.
  std::shared_ptr<const ReparamFamily> unconstrained;

  /// Index of a parameter in member.ring().
  int variable(int param) const;
};

/// r_c on P2 (c0..c8) or on P1xP1 (c0..c7), normalized with nonzero determinants.
ReparamFamily identity_family(const Space& s);
ReparamFamily identity_family(Domain d);

struct LineClassOptions {
  int bound = -1;                 // bound on the degree part; -1 uses the degree part of [f]
  std::size_t max_candidates = 20000;
};

/// Classes c with c^2 = 0, [f].c = 1 and c = <c>, enumerated with bounded degree part.
std::vector<DivisorClass> line_classes(const ClassifiedMap& cm, const LineClassOptions& options = {});

/// (Psi_a ; Psi_b) into P1xP1. Requires h0(a) = h0(b) = 2 and a.b = 1.
RationalMap pencil_pair_map(const ClassifiedMap& cm, const DivisorClass& a, const DivisorClass& b);

struct InverseOptions {
  int max_degree = 6;
};

/// Inverse of a birational map from its graph relations, verified by composition.
/// Throws InputError when no inverse within the degree bound passes verification.
RationalMap birational_inverse(const RationalMap& m, const InverseOptions& options = {});

/// Families g^-1 o r_c o f for two maps classified B1.
std::vector<ReparamFamily> superset_B1(const ClassifiedMap& f, const ClassifiedMap& g);

/// The fixed quadric cone used for B2 maps onto cones: z0^2 + z1^2 - z2^2.
ScalarMatrix standard_cone();

struct QuadricNormalization {
  ScalarMatrix quadric;  // symmetric matrix of the image quadric
  ScalarMatrix to_cone;  // s with s^T C s = mu * quadric for the standard cone C
};

/// Symmetric matrix of the quadric containing img f and a linear map onto the standard cone.
/// Built from a hyperbolic pair through an image point, so no field extension is needed.
QuadricNormalization normalize_cone(const ClassifiedMap& f);

/// Families for two maps classified B2: two pencil branches for smooth quadrics, one
/// stabilizer family for cones, none for a smooth quadric against a cone.
std::vector<ReparamFamily> superset_B2(const ClassifiedMap& f, const ClassifiedMap& g,
                                       const LineClassOptions& options = {});

}  // namespace surfiso
