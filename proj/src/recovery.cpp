#include "surfiso/recovery.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace surfiso {

namespace {

// Assignments of `outer` rewritten through `inner`, which solved what was left after `outer`.
Branch merge(const Branch& outer, const Branch& inner) {
  Branch out = inner;
  for (const auto& [v, e] : outer.assignments) out.assignments.emplace_back(v, inner.apply(e));
  std::sort(out.assignments.begin(), out.assignments.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Normalization choices: in each group the entries before the chosen one vanish, the chosen one is 1.
std::vector<Branch> normalization_branches(const ReparamFamily& fam) {
  const Ring& r = fam.member.ring();
  std::vector<Branch> out(1);
  out[0].ring = r;
  for (const auto& group : fam.normalization) {
    std::vector<Branch> next;
    for (const auto& b : out)
      for (std::size_t k = 0; k < group.size(); ++k) {
        Branch nb = b;
        for (std::size_t j = 0; j <= k; ++j)
          nb.assignments.emplace_back(fam.variable(group[j]), Poly(r, Scalar(j == k ? 1 : 0)));
        next.push_back(std::move(nb));
      }
    out = std::move(next);
  }
  for (auto& b : out)
    std::sort(b.assignments.begin(), b.assignments.end(),
              [](const auto& a, const auto& c) { return a.first < c.first; });
  return out;
}

// Solves eqs/ineqs (already rewritten through b) and merges the results back into b.
std::vector<Branch> refine(const Branch& b, std::vector<Poly> eqs, std::vector<Poly> ineqs, const SolveOptions& opts) {
  std::vector<Poly> e;
  for (auto& p : eqs) {
    Poly q = reduce_modulo(b, p);
    if (q.is_zero()) continue;
    if (q.is_constant()) return {};
    e.push_back(std::move(q));
  }
  e.insert(e.end(), b.equations.begin(), b.equations.end());
  std::vector<Poly> h;
  for (auto& p : ineqs) {
    Poly q = reduce_modulo(b, p);
    if (q.is_zero()) return {};
    if (!q.is_constant()) h.push_back(std::move(q));
  }
  for (const auto& p : b.inequations) {
    Poly q = b.apply(p);
    if (q.is_zero()) return {};
    if (!q.is_constant()) h.push_back(std::move(q));
  }
  if (e.empty()) {
    Branch out = b;
    out.inequations = h;
    return {out};
  }
  std::vector<Branch> out;
  Branch base = b;
  base.equations.clear();
  base.inequations.clear();
  for (const auto& r : solve(e, h, opts)) out.push_back(merge(base, r));
  return out;
}

RationalMap raw_composition(const ClassifiedMap& g, const ReparamFamily& fam) {
  return compose(as_rational_map(g.map), fam.member, false);
}

Parametrization over(Domain d, std::vector<Poly> comps) {
  Parametrization p;
  p.domain = d;
  p.components = std::move(comps);
  return p;
}

SolveOptions with_field(SolveOptions opts, const ClassifiedMap& f, const ClassifiedMap& g) {
  opts.field = GroundField::join(opts.field, GroundField::join(f.tree.field, g.tree.field));
  opts.field = GroundField::join(opts.field, GroundField::join(f.map.field(), g.map.field()));
  return opts;
}

bool reduces_to_zero(const Branch& b, const Poly& p) { return reduce_modulo(b, p).is_zero(); }

std::vector<bool> parameter_flags(const Ring& r, int coords) {
  std::vector<bool> flags(r.nvars(), false);
  for (int i = coords; i < r.nvars(); ++i) flags[i] = true;
  return flags;
}

// Largest factor of p free of parameters.
Poly parameter_free_part(const Poly& p, int coords) {
  std::vector<Poly> parts;
  for (auto& [m, c] : p.coefficients_wrt(parameter_flags(p.ring(), coords))) parts.push_back(c);
  return parts.empty() ? Poly(p.ring()) : gcd(parts);
}

Poly minor3(const std::vector<std::vector<Poly>>& m, int a, int b, int c) {
  const auto& r = m[0][0].ring();
  Poly out(r);
  const int cols[3] = {a, b, c};
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int k = 0; k < 6; ++k) {
    Poly t = m[0][cols[perms[k][0]]] * m[1][cols[perms[k][1]]] * m[2][cols[perms[k][2]]];
    if (k < 3) out += t;
    else out -= t;
  }
  return out;
}

// Parameter-free form vanishing on the curves contracted by the member on a branch
// (a constant when none are found).
Poly contracted_curves(const RationalMap& member, const Branch& b) {
  const Ring& r = member.ring();
  const int k = member.source.coordinates();
  std::vector<Poly> comps;
  for (const auto& c : member.components) comps.push_back(b.apply(c));
  auto grad = [&](const Poly& p) {
    std::vector<Poly> g;
    for (int i = 0; i < k; ++i) g.push_back(p.derivative(i));
    return g;
  };
  std::vector<Poly> minors;
  if (k == 3 && member.target.product()) {
    std::vector<std::vector<Poly>> w;
    for (int pair = 0; pair < 2; ++pair) {
      auto g0 = grad(comps[2 * pair]);
      auto g1 = grad(comps[2 * pair + 1]);
      std::vector<Poly> v;
      for (int i = 0; i < 3; ++i) v.push_back(comps[2 * pair] * g1[i] - comps[2 * pair + 1] * g0[i]);
      w.push_back(std::move(v));
    }
    for (int i = 0; i < 3; ++i) minors.push_back(w[0][(i + 1) % 3] * w[1][(i + 2) % 3] - w[0][(i + 2) % 3] * w[1][(i + 1) % 3]);
  } else if (comps.size() == 3 && !member.target.product()) {
    std::vector<std::vector<Poly>> jac;
    for (const auto& c : comps) jac.push_back(grad(c));
    for (int a = 0; a < k; ++a)
      for (int bb = a + 1; bb < k; ++bb)
        for (int c = bb + 1; c < k; ++c) minors.push_back(minor3(jac, a, bb, c));
  } else {
    return Poly(r, Scalar(1));
  }
  std::vector<bool> coord(r.nvars(), false);
  for (int i = 0; i < k; ++i) coord[i] = true;
  Poly j = gcd_in(minors, coord);
  if (j.is_zero()) return Poly(r, Scalar(1));
  Poly p = parameter_free_part(j, k);
  return p.is_zero() ? Poly(r, Scalar(1)) : p;
}

// Coefficients (in the parameters) of the remainders of the forms modulo d.
std::vector<Poly> divisibility_conditions(const std::vector<Poly>& forms, const Poly& d, int coords) {
  std::vector<Poly> out;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    Poly rem = normal_form(f, {d});
    std::vector<bool> coord(rem.ring().nvars(), false);
    for (int i = 0; i < coords; ++i) coord[i] = true;
    for (auto& [m, c] : rem.coefficients_wrt(coord)) out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<Branch> refine_branch(const Branch& b, const std::vector<Poly>& eqs, const std::vector<Poly>& ineqs,
                                  const SolveOptions& options) {
  return refine(b, eqs, ineqs, options);
}

Poly reduce_modulo(const Branch& b, const Poly& p) {
  Poly q = b.apply(p);
  if (!b.equations.empty() && !q.is_zero()) q = normal_form(q, b.equations);
  return q;
}

const ReparamFamily& solving_form(const ReparamFamily& fam) {
  return fam.unconstrained ? *fam.unconstrained : fam;
}

Parametrization reduced_composition(const ClassifiedMap& g, const ReparamFamily& given, const Branch& b) {
  auto raw = raw_composition(g, solving_form(given));
  const Domain d = raw.source.product() ? Domain::P1xP1 : Domain::P2;
  std::vector<Poly> comps;
  for (const auto& c : raw.components) comps.push_back(reduce_modulo(b, c));
  Poly common = form_gcd(comps, d);
  if (!common.is_constant())
    for (auto& c : comps)
      if (!c.is_zero()) c = *divide_exact(c, common);
  return over(d, std::move(comps));
}

SolutionSet index_set_J(const ClassifiedMap& f, const ClassifiedMap& g, const ReparamFamily& given,
                        const RecoveryOptions& options) {
  const ReparamFamily& fam = solving_form(given);
  SolutionSet out;
  if (f.dim() != g.dim()) return out;
  if (!(fam.member.source == Space::of(f.domain())) && !(fam.member.source.kind == Space::Pn && f.domain() == Domain::P2))
    throw ContractError("family source does not match the domain of f");
  const SolveOptions opts = with_field(options.solve, f, g);
  auto raw = raw_composition(g, fam);
  const Domain d = f.domain();
  Degree dh{0, 0};
  for (const auto& c : raw.components)
    if (!c.is_zero()) dh = form_degree(c, d);

  // base points of f with multiplicity on every component
  for (const auto& base : normalization_branches(fam)) {
    std::vector<Poly> eqs = fam.equations;
    for (const auto& c : raw.components) {
      Poly hc = base.apply(c);
      if (hc.is_zero() || f.tree.points.empty()) continue;
      auto conds = linear_series_conditions(f.tree, dh, f.cls.mults, hc);
      eqs.insert(eqs.end(), conds.begin(), conds.end());
    }
    for (auto& b : refine(base, eqs, fam.inequations, opts)) out.stage1.push_back(std::move(b));
  }

  // component degree after removing the common factor; a missing factor must lie on curves
  // contracted by the member, so divisibility by a power of those is imposed
  const Degree target = f.cdeg();
  const int coords = fam.member.source.coordinates();
  auto degree_ok = [&](const Branch& b) {
    auto h = reduced_composition(g, fam, b);
    bool any = false;
    for (const auto& c : h.components) {
      if (c.is_zero()) continue;
      any = true;
      if (!(form_degree(c, d) == target)) return false;
    }
    return any;
  };
  for (const auto& b : out.stage1) {
    if (degree_ok(b)) {
      out.stage2.push_back(b);
      continue;
    }
    auto h = reduced_composition(g, fam, b);
    Degree dr{0, 0};
    for (const auto& c : h.components)
      if (!c.is_zero()) dr = form_degree(c, d);
    const int excess = dr.d1 + dr.d2 - target.d1 - target.d2;
    if (excess <= 0) continue;
    Poly curves = contracted_curves(fam.member, b);
    const int cd = curves.total_degree();
    if (cd == 0 || excess % cd != 0) continue;
    auto conds = divisibility_conditions(h.components, curves.pow(excess / cd), coords);
    for (auto& nb : refine(b, conds, {}, opts))
      if (degree_ok(nb)) out.stage2.push_back(std::move(nb));
  }

  // rows of M_h in the row space of M_f
  const ScalarMatrix k = kernel_basis(coefficient_matrix(f.map));
  for (const auto& b : out.stage2) {
    auto h = reduced_composition(g, fam, b);
    std::vector<Poly> eqs;
    if (k.cols() > 0) {
      PolyMatrix e = coefficient_matrix_poly(h) * k;
      for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j)
          if (!e(i, j).is_zero()) eqs.push_back(e(i, j));
    }
    for (auto& nb : refine(b, eqs, {}, opts)) out.branches.push_back(std::move(nb));
  }
  return out;
}

PolyMatrix canonical_scaling(const PolyMatrix& u) {
  std::vector<Poly> entries;
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j)
      if (!u(i, j).is_zero()) entries.push_back(u(i, j));
  if (entries.empty()) return u;
  Poly common = gcd(entries);
  PolyMatrix out = u;
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j)
      if (!u(i, j).is_zero() && !common.is_constant()) out(i, j) = *divide_exact(u(i, j), common);
  Scalar lead;
  bool found = false;
  for (int i = 0; i < out.rows() && !found; ++i)
    for (int j = 0; j < out.cols() && !found; ++j)
      if (!out(i, j).is_zero()) {
        lead = out(i, j).lead_coefficient();
        found = true;
      }
  Scalar inv = Scalar(1) / lead;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) *= inv;
  return out;
}

bool IsoFamily::is_constant() const {
  for (int i = 0; i < U.rows(); ++i)
    for (int j = 0; j < U.cols(); ++j)
      if (!U(i, j).is_constant()) return false;
  return true;
}

std::string IsoFamily::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < U.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < U.cols(); ++j) os << (j ? ", " : "") << U(i, j).to_string();
  }
  os << "]";
  std::string c = constraints.to_string();
  if (!c.empty()) os << " with " << c;
  return os.str();
}

std::vector<IsoFamily> extract_isomorphisms(const ClassifiedMap& f, const ClassifiedMap& g, const ReparamFamily& given,
                                            const SolutionSet& sols) {
  const ReparamFamily& fam = solving_form(given);
  std::vector<IsoFamily> out;
  if (sols.branches.empty()) return out;
  const int n = f.dim();
  const ScalarMatrix mf = coefficient_matrix(f.map);
  const ScalarMatrix k = kernel_basis(mf);
  const ScalarMatrix ef = k.cols() > 0 ? ScalarMatrix::vstack(mf, k.transpose()) : mf;
  const ScalarMatrix einv = inverse(ef);
  std::set<std::string> seen;
  for (const auto& b : sols.branches) {
    auto h = reduced_composition(g, fam, b);
    PolyMatrix mh = coefficient_matrix_poly(h);
    PolyMatrix p = mh * einv;
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.cols(); ++j) p(i, j) = reduce_modulo(b, p(i, j));
    for (int i = 0; i < p.rows(); ++i)
      for (int j = n + 1; j < p.cols(); ++j)
        if (!p(i, j).is_zero()) throw ConsistencyError("E_h E_f^-1 is not block diagonal on branch " + b.to_string());
    IsoFamily iso;
    iso.U = canonical_scaling(p.block(0, 0, n + 1, n + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) iso.U(i, j) = reduce_modulo(b, iso.U(i, j));
    iso.constraints = b;
    iso.provenance = fam.label;
    iso.Mh = mh;
    iso.Mf = mf;
    if (!matrix_identity_holds(iso)) throw ConsistencyError("U M_f is not proportional to M_h on branch " + b.to_string());
    std::string key = iso.to_string();
    if (seen.insert(key).second) out.push_back(std::move(iso));
  }
  return out;
}

bool matrix_identity_holds(const IsoFamily& iso) {
  const Branch& b = iso.constraints;
  PolyMatrix lhs = iso.U * to_poly_matrix(iso.Mf, iso.U(0, 0).ring());
  if (lhs.rows() != iso.Mh.rows() || lhs.cols() != iso.Mh.cols()) return false;
  int pr = -1, pc = -1;
  for (int i = 0; i < lhs.rows() && pr < 0; ++i)
    for (int j = 0; j < lhs.cols() && pr < 0; ++j)
      if (!reduces_to_zero(b, iso.Mh(i, j))) pr = i, pc = j;
  if (pr < 0) return false;
  const Poly a = reduce_modulo(b, lhs(pr, pc));
  const Poly m = reduce_modulo(b, iso.Mh(pr, pc));
  if (a.is_zero()) return false;
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j)
      if (!reduces_to_zero(b, lhs(i, j) * m - iso.Mh(i, j) * a)) return false;
  return true;
}

bool verify_isomorphism(const Parametrization& f, const Parametrization& g, const IsoFamily& iso,
                        const VerifyOptions& options) {
  const Branch& b = iso.constraints;
  if (reduces_to_zero(b, determinant(iso.U))) return false;
  const Ring& r = iso.U(0, 0).ring();
  std::vector<Poly> images;
  bool any = false;
  for (int d = 1; d <= options.degree_budget; ++d) {
    auto forms = implicit_forms(g, d);
    if (forms.empty()) continue;
    if (images.empty()) {
      std::vector<Poly> fx;
      for (const auto& c : f.components) fx.push_back(c.in_ring(r));
      for (int i = 0; i < iso.U.rows(); ++i) {
        Poly s(r);
        for (int j = 0; j < iso.U.cols(); ++j) s += iso.U(i, j) * fx[j];
        images.push_back(std::move(s));
      }
    }
    any = true;
    for (const auto& form : forms)
      if (!reduces_to_zero(b, form.substitute(images))) return false;
  }
  if (any) return true;
  return iso.Mh.rows() > 0 && matrix_identity_holds(iso);
}

bool verify_isomorphism(const ClassifiedMap& f, const ClassifiedMap& g, const IsoFamily& iso,
                        const VerifyOptions& options) {
  return verify_isomorphism(f.map, g.map, iso, options);
}

bool admits_specialization(const IsoFamily& iso, const ScalarMatrix& t, const SolveOptions& options) {
  if (t.rows() != iso.U.rows() || t.cols() != iso.U.cols()) return false;
  const Branch& b = iso.constraints;
  int pr = -1, pc = -1;
  for (int i = 0; i < t.rows() && pr < 0; ++i)
    for (int j = 0; j < t.cols() && pr < 0; ++j)
      if (!t(i, j).is_zero()) pr = i, pc = j;
  if (pr < 0) return false;
  std::vector<Poly> eqs;
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j) eqs.push_back(iso.U(i, j) * t(pr, pc) - iso.U(pr, pc) * t(i, j));
  return !refine(b, eqs, {iso.U(pr, pc)}, options).empty();
}

IsomorphismReport projective_isomorphisms(const ClassifiedMap& f, const ClassifiedMap& g,
                                          const RecoveryOptions& options, const LineClassOptions& lines) {
  IsomorphismReport rep;
  rep.pipeline = reduce_pipeline(f, g);
  if (rep.pipeline.empty) return rep;
  const auto& fr = *rep.pipeline.f;
  const auto& gr = *rep.pipeline.g;
  switch (rep.pipeline.tag) {
    case BaseCase::B1: rep.families = superset_B1(fr, gr); break;
    case BaseCase::B2: rep.families = superset_B2(fr, gr, lines); break;
    default: rep.unsupported = true; return rep;
  }
  std::set<std::string> seen;
  for (const auto& fam : rep.families) {
    rep.solutions.push_back(index_set_J(f, g, fam, options));
    for (auto& iso : extract_isomorphisms(f, g, fam, rep.solutions.back()))
      if (seen.insert(iso.to_string()).second) rep.isomorphisms.push_back(std::move(iso));
  }
  return rep;
}

}  // namespace surfiso
