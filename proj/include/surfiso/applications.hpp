#pragma once

#include <vector>

#include "surfiso/recovery.hpp"

namespace surfiso {

/// Fixed structures in P^n: hyperplane at infinity z0 = 0, absolute quadric z0 = 0, z1^2 + ... + zn^2 = 0,
/// and the Moebius sphere -x0^2 + x1^2 + ... + x_{n+1}^2 = 0 in P^{n+1}.
struct AmbientStructure {
  int n = 3;

  ScalarMatrix sphere() const;  // diag(-1, 1, ..., 1) of size n+2
  /// Inverse stereographic projection P^n -> S^n:
  /// (z0^2 + s : 2 z0 z1 : ... : 2 z0 zn : -z0^2 + s) with s = z1^2 + ... + zn^2.
  RationalMap lift() const;
  /// Stereographic projection S^n -> P^n: (x0 - x_{n+1} : x1 : ... : xn).
  RationalMap projection() const;
};

/// pi^-1 o f with the common factor removed. Checks that the image lies on the sphere.
Parametrization stereographic_lift(const Parametrization& f);

/// Restriction of an isomorphism family to a sub-branch of its constraints (rescaled).
IsoFamily restrict_family(const IsoFamily& iso, const Branch& b);

/// Sub-families with U fixing the hyperplane z0 = 0 (first row (u00, 0, ..., 0)).
std::vector<IsoFamily> filter_affine(const IsoFamily& iso);
/// Affine sub-families whose block B = U[1.., 1..] satisfies B^T B = lambda * identity, lambda != 0.
std::vector<IsoFamily> filter_euclidean(const IsoFamily& iso);
/// Sub-families with U^T S U = lambda * S for the sphere matrix S.
std::vector<IsoFamily> filter_sphere(const IsoFamily& iso);

/// Filters applied to a list.
std::vector<IsoFamily> filter_affine(const std::vector<IsoFamily>& isos);
std::vector<IsoFamily> filter_euclidean(const std::vector<IsoFamily>& isos);

/// Linear map of P^{n+1} preserving the sphere that corresponds to a constant Euclidean U of P^n:
/// lift o U = L o lift. Throws InputError when U is not Euclidean.
ScalarMatrix moebius_lift(const ScalarMatrix& u);

struct MoebiusIsomorphism {
  IsoFamily rho;       // projective isomorphism between the lifted surfaces fixing the sphere
  RationalMap alpha;   // pi o rho o pi^-1 : P^n -> P^n
};

struct MoebiusReport {
  IsomorphismReport lifted;  // projective isomorphisms of the lifted surfaces
  std::vector<MoebiusIsomorphism> isomorphisms;
};

/// Moebius isomorphisms f -> g via the lifted surfaces. Each alpha is checked to map the absolute
/// quadric into itself modulo the constraints (ConsistencyError otherwise).
MoebiusReport moebius_isomorphisms(const Parametrization& f, const Parametrization& g,
                                   const RecoveryOptions& options = {});

/// Whether alpha maps the absolute quadric of P^n into itself modulo the branch.
bool alpha_fixes_absolute(const RationalMap& alpha, const Branch& b);

}  // namespace surfiso
