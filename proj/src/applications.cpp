#include "surfiso/applications.hpp"

namespace surfiso {

namespace {

// Same polynomial in a ring matched by variable names; absent names must not occur in p.
Poly rename(const Poly& p, const Ring& target) {
  const Ring& r = p.ring();
  std::vector<int> map(r.nvars(), 0);
  for (int i = 0; i < r.nvars(); ++i) {
    int j = target.index(r.name(i));
    map[i] = j < 0 ? 0 : j;
  }
  return p.in_ring(target, map);
}

std::vector<IsoFamily> refine_family(const IsoFamily& iso, const std::vector<Poly>& eqs, const std::vector<Poly>& ineqs) {
  std::vector<IsoFamily> out;
  for (const auto& b : refine_branch(iso.constraints, eqs, ineqs)) out.push_back(restrict_family(iso, b));
  return out;
}

ScalarMatrix coefficients(const std::vector<Poly>& forms, const std::vector<Monomial>& basis) {
  ScalarMatrix m(static_cast<int>(forms.size()), static_cast<int>(basis.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = forms[i].coefficient(basis[j]);
  return m;
}

}  // namespace

ScalarMatrix AmbientStructure::sphere() const {
  ScalarMatrix s = identity_matrix(n + 2);
  s(0, 0) = Scalar(-1);
  return s;
}

RationalMap AmbientStructure::lift() const {
  RationalMap m;
  m.source = Space::projective(n);
  m.target = Space::projective(n + 1);
  Ring r = Ring::make(m.source.names());
  auto z = [&](int i) { return Poly::variable(r, i); };
  Poly s(r);
  for (int i = 1; i <= n; ++i) s += z(i) * z(i);
  Poly two(r, Scalar(2));
  m.components.push_back(z(0) * z(0) + s);
  for (int i = 1; i <= n; ++i) m.components.push_back(two * z(0) * z(i));
  m.components.push_back(s - z(0) * z(0));
  return m;
}

RationalMap AmbientStructure::projection() const {
  RationalMap m;
  m.source = Space::projective(n + 1);
  m.target = Space::projective(n);
  Ring r = Ring::make(m.source.names());
  m.components.push_back(Poly::variable(r, 0) - Poly::variable(r, n + 1));
  for (int i = 1; i <= n; ++i) m.components.push_back(Poly::variable(r, i));
  return m;
}

Parametrization stereographic_lift(const Parametrization& f) {
  const int n = static_cast<int>(f.components.size()) - 1;
  const Ring& r = f.ring();
  Poly s(r);
  for (int i = 1; i <= n; ++i) s += f.components[i] * f.components[i];
  const Poly& f0 = f.components[0];
  std::vector<Poly> comps;
  comps.push_back(f0 * f0 + s);
  for (int i = 1; i <= n; ++i) comps.push_back(Scalar(2) * (f0 * f.components[i]));
  comps.push_back(s - f0 * f0);
  Poly common = form_gcd(comps, f.domain);
  if (!common.is_constant())
    for (auto& c : comps)
      if (!c.is_zero()) c = *divide_exact(c, common);
  Poly q = -(comps[0] * comps[0]);
  for (int i = 1; i <= n + 1; ++i) q += comps[i] * comps[i];
  if (!q.is_zero()) throw ConsistencyError("lifted map does not lie on the sphere");
  Parametrization out;
  out.domain = f.domain;
  out.components = std::move(comps);
  return out;
}

IsoFamily restrict_family(const IsoFamily& iso, const Branch& b) {
  IsoFamily out = iso;
  out.constraints = b;
  for (int i = 0; i < out.U.rows(); ++i)
    for (int j = 0; j < out.U.cols(); ++j) out.U(i, j) = reduce_modulo(b, iso.U(i, j));
  out.U = canonical_scaling(out.U);
  for (int i = 0; i < out.U.rows(); ++i)
    for (int j = 0; j < out.U.cols(); ++j) out.U(i, j) = reduce_modulo(b, out.U(i, j));
  for (int i = 0; i < out.Mh.rows(); ++i)
    for (int j = 0; j < out.Mh.cols(); ++j) out.Mh(i, j) = reduce_modulo(b, iso.Mh(i, j));
  return out;
}

std::vector<IsoFamily> filter_affine(const IsoFamily& iso) {
  std::vector<Poly> eqs;
  for (int j = 1; j < iso.U.cols(); ++j) eqs.push_back(iso.U(0, j));
  return refine_family(iso, eqs, {iso.U(0, 0)});
}

std::vector<IsoFamily> filter_euclidean(const IsoFamily& iso) {
  std::vector<IsoFamily> out;
  for (const auto& a : filter_affine(iso)) {
    const int n = a.U.rows() - 1;
    PolyMatrix b = a.U.block(1, 1, n, n);
    PolyMatrix btb = b.transpose() * b;
    std::vector<Poly> eqs;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) eqs.push_back(i == j ? btb(i, i) - btb(0, 0) : btb(i, j));
    for (auto& e : refine_family(a, eqs, {btb(0, 0)})) out.push_back(std::move(e));
  }
  return out;
}

std::vector<IsoFamily> filter_sphere(const IsoFamily& iso) {
  const int n = iso.U.rows() - 2;
  AmbientStructure amb{n};
  const Ring& r = iso.U(0, 0).ring();
  PolyMatrix s = to_poly_matrix(amb.sphere(), r);
  PolyMatrix p = iso.U.transpose() * s * iso.U;
  std::vector<Poly> eqs;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = i; j < p.cols(); ++j)
      eqs.push_back(i == j ? p(i, i) * s(0, 0) - p(0, 0) * s(i, i) : p(i, j));
  return refine_family(iso, eqs, {p(0, 0)});
}

std::vector<IsoFamily> filter_affine(const std::vector<IsoFamily>& isos) {
  std::vector<IsoFamily> out;
  for (const auto& i : isos)
    for (auto& a : filter_affine(i)) out.push_back(std::move(a));
  return out;
}

std::vector<IsoFamily> filter_euclidean(const std::vector<IsoFamily>& isos) {
  std::vector<IsoFamily> out;
  for (const auto& i : isos)
    for (auto& a : filter_euclidean(i)) out.push_back(std::move(a));
  return out;
}

ScalarMatrix moebius_lift(const ScalarMatrix& u) {
  const int n = u.rows() - 1;
  for (int j = 1; j <= n; ++j)
    if (!u(0, j).is_zero()) throw InputError("not an affine map");
  ScalarMatrix b = u.block(1, 1, n, n);
  ScalarMatrix btb = b.transpose() * b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(btb(i, j) == (i == j ? btb(0, 0) : Scalar(0)))) throw InputError("not a similarity");
  AmbientStructure amb{n};
  RationalMap lift = amb.lift();
  const Ring& r = lift.ring();
  std::vector<Poly> images;
  for (int i = 0; i <= n; ++i) {
    Poly s(r);
    for (int j = 0; j <= n; ++j) s += Poly::variable(r, j) * u(i, j);
    images.push_back(std::move(s));
  }
  std::vector<Poly> moved;
  for (const auto& c : lift.components) moved.push_back(c.substitute(images));
  auto basis = homogeneous_monomials(n + 1, 2);
  ScalarMatrix a = coefficients(lift.components, basis);
  ScalarMatrix m = coefficients(moved, basis);
  ScalarMatrix at = a.transpose();
  ScalarMatrix l = m * at * inverse(a * at);
  ScalarMatrix check = l * a;
  for (int i = 0; i < check.rows(); ++i)
    for (int j = 0; j < check.cols(); ++j)
      if (!(check(i, j) == m(i, j))) throw ConsistencyError("lifted similarity is not linear");
  return l;
}

bool alpha_fixes_absolute(const RationalMap& alpha, const Branch& b) {
  const Ring& r = alpha.ring();
  const int n = alpha.source.coordinates() - 1;
  Poly sq(r);
  for (int i = 1; i <= n; ++i) sq += Poly::variable(r, i) * Poly::variable(r, i);
  const std::vector<Poly> ideal = {Poly::variable(r, 0), sq};
  Poly s(r);
  for (int i = 1; i <= n; ++i) s += alpha.components[i] * alpha.components[i];
  std::vector<bool> coords(r.nvars(), false);
  for (int i = 0; i <= n; ++i) coords[i] = true;
  for (const auto& p : {alpha.components[0], s}) {
    Poly rem = normal_form(p, ideal);
    for (auto& [m, c] : rem.coefficients_wrt(coords))
      if (!reduce_modulo(b, rename(c, b.ring)).is_zero()) return false;
  }
  return true;
}

MoebiusReport moebius_isomorphisms(const Parametrization& f, const Parametrization& g, const RecoveryOptions& options) {
  MoebiusReport out;
  auto lf = classify_map(stereographic_lift(f));
  auto lg = classify_map(stereographic_lift(g));
  out.lifted = projective_isomorphisms(lf, lg, options);
  const int n = static_cast<int>(f.components.size()) - 1;
  AmbientStructure amb{n};
  const RationalMap lift = amb.lift();
  const RationalMap proj = amb.projection();
  for (const auto& iso : out.lifted.isomorphisms)
    for (auto& rho : filter_sphere(iso)) {
      const Ring& ru = rho.U(0, 0).ring();
      const int skip = lf.map.ring().nvars();
      auto names = Space::projective(n + 1).names();
      for (int i = skip; i < ru.nvars(); ++i) names.push_back(ru.name(i));
      Ring r = Ring::make(names);
      RationalMap m;
      m.source = m.target = Space::projective(n + 1);
      for (int i = 0; i < rho.U.rows(); ++i) {
        Poly s(r);
        for (int j = 0; j < rho.U.cols(); ++j) s += rename(rho.U(i, j), r) * Poly::variable(r, j);
        m.components.push_back(std::move(s));
      }
      MoebiusIsomorphism mi;
      mi.alpha = compose(proj, compose(m, lift));
      if (!alpha_fixes_absolute(mi.alpha, rho.constraints))
        throw ConsistencyError("Moebius map does not fix the absolute quadric");
      mi.rho = std::move(rho);
      out.isomorphisms.push_back(std::move(mi));
    }
  return out;
}

}  // namespace surfiso
