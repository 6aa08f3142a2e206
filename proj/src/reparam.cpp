#include "surfiso/reparam.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "surfiso/algebra/factor.hpp"

namespace surfiso {

namespace {

std::vector<std::string> indexed(const std::string& stem, int count, int first = 0) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

std::vector<bool> coordinate_mask(const Ring& r, int k) {
  std::vector<bool> mask(r.nvars(), false);
  for (int i = 0; i < k && i < r.nvars(); ++i) mask[i] = true;
  return mask;
}

std::vector<std::vector<int>> component_groups(const Space& target) {
  if (target.product()) return {{0, 1}, {2, 3}};
  std::vector<int> all(target.coordinates());
  for (int i = 0; i < target.coordinates(); ++i) all[i] = i;
  return {all};
}

// Monomials of a space of the given (bi)degree, decreasing.
std::vector<Monomial> space_monomials(const Space& s, const Degree& deg) {
  if (s.kind == Space::Pn) return homogeneous_monomials(s.n + 1, deg.d1);
  return monomial_basis(s.kind == Space::P2 ? Domain::P2 : Domain::P1xP1, deg);
}

// Moves p into r by variable names; variables of p's ring missing in r must not occur.
Poly transfer(const Poly& p, const Ring& r) {
  std::vector<int> map(p.ring().nvars());
  for (int i = 0; i < p.ring().nvars(); ++i) map[i] = r.index(p.ring().name(i));
  return p.in_ring(r, map);
}

// True when the components (grouped as for target s) are proportional to the coordinates.
bool is_identity(const RationalMap& m) {
  if (m.source.coordinates() != m.target.coordinates() || m.source.product() != m.target.product()) return false;
  const Ring& r = m.ring();
  for (const auto& g : component_groups(m.target))
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        Poly lhs = m.components[g[a]] * Poly::variable(r, g[b]);
        Poly rhs = m.components[g[b]] * Poly::variable(r, g[a]);
        if (lhs != rhs) return false;
      }
  for (const auto& c : m.components)
    if (c.is_zero()) return false;
  return true;
}

// Pulls monomials back along comps with cached powers.
class Pullback {
 public:
  explicit Pullback(const std::vector<Poly>& comps) : comps_(comps), powers_(comps.size()) {}
  Poly operator()(const Monomial& m) {
    Poly p(comps_.front().ring(), Scalar(1));
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (m[static_cast<int>(i)]) p = p * power(static_cast<int>(i), m[static_cast<int>(i)]);
    return p;
  }

 private:
  const Poly& power(int i, int k) {
    auto& v = powers_[i];
    if (v.empty()) v.push_back(Poly(comps_.front().ring(), Scalar(1)));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * comps_[i]);
    return v[k];
  }
  const std::vector<Poly>& comps_;
  std::vector<std::vector<Poly>> powers_;
};

std::vector<Degree> degree_candidates(const Space& s, int max_degree) {
  std::vector<Degree> out;
  for (int t = 1; t <= max_degree; ++t) {
    if (!s.product()) {
      out.push_back({t, 0});
      continue;
    }
    for (int a = t; a >= 0; --a) out.push_back({a, t - a});
  }
  return out;
}

// Inverse forms for one group of source coordinates, or empty when the degree fails.
std::vector<Poly> inverse_group(const RationalMap& m, const std::vector<int>& group, const Degree& deg,
                                const Ring& target_ring) {
  const auto mons = space_monomials(m.target, deg);
  Pullback pull(m.components);
  std::vector<Poly> pb;
  pb.reserve(mons.size());
  for (const auto& mo : mons) pb.push_back(pull(mo));
  const Ring& r = m.ring();
  const int g = static_cast<int>(group.size());
  const int nb = static_cast<int>(mons.size());
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> rows(g * (g - 1) / 2);
  std::vector<std::tuple<int, int, Scalar>> triplets;
  int nrows = 0;
  auto row_of = [&](int eq, const Monomial& mo) {
    auto [it, fresh] = rows[eq].emplace(mo, nrows);
    if (fresh) ++nrows;
    return it->second;
  };
  int eq = 0;
  for (int a = 0; a < g; ++a)
    for (int b = a + 1; b < g; ++b, ++eq) {
      Poly sa = Poly::variable(r, group[a]), sb = Poly::variable(r, group[b]);
      for (int k = 0; k < nb; ++k) {
        const Poly pa = pb[k] * sb, pbb = pb[k] * sa;
        for (const auto& t : pa.terms()) triplets.emplace_back(row_of(eq, t.m), a * nb + k, t.c);
        for (const auto& t : pbb.terms()) triplets.emplace_back(row_of(eq, t.m), b * nb + k, -t.c);
      }
    }
  ScalarMatrix a(std::max(1, nrows), g * nb);
  for (auto& [i, j, v] : triplets) a(i, j) += v;
  ScalarMatrix ker = kernel_basis(a);
  for (int c = 0; c < ker.cols(); ++c) {
    std::vector<Poly> forms;
    bool nonzero = false;
    for (int i = 0; i < g; ++i) {
      std::vector<Term> terms;
      Poly img(r);
      for (int k = 0; k < nb; ++k)
        if (!ker(i * nb + k, c).is_zero()) {
          terms.push_back({mons[k], ker(i * nb + k, c)});
          img += pb[k] * ker(i * nb + k, c);
        }
      if (!img.is_zero()) nonzero = true;
      forms.push_back(Poly::from_terms(target_ring, terms));
    }
    if (nonzero) return forms;
  }
  return {};
}

RationalMap linear_map(const ScalarMatrix& m, int n) {
  RationalMap out;
  out.source = Space::projective(n);
  out.target = Space::projective(n);
  Ring r = ambient_ring(n);
  for (int i = 0; i < m.rows(); ++i) {
    Poly p(r);
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) p += Poly::variable(r, j) * m(i, j);
    out.components.push_back(p);
  }
  return out;
}

ReparamFamily with_member(const ReparamFamily& fam, RationalMap member, std::string label) {
  ReparamFamily out;
  out.params = fam.params;
  out.member = std::move(member);
  const Ring& r = out.member.ring();
  for (const auto& e : fam.equations) out.equations.push_back(transfer(e, r));
  for (const auto& e : fam.inequations) out.inequations.push_back(transfer(e, r));
  out.normalization = fam.normalization;
  out.label = std::move(label);
  return out;
}

void require_case(const ClassifiedMap& f, const ClassifiedMap& g, BaseCase b) {
  if (classify_base_case(f) != b || classify_base_case(g) != b)
    throw ContractError("both maps must be characterized by " + to_string(b));
}

}  // namespace

std::vector<std::string> Space::names() const {
  if (kind == P2) return indexed("x", 3);
  if (kind == P1xP1) return indexed("y", 4);
  return indexed("z", n + 1);
}

std::string Space::to_string() const {
  if (kind == P2) return "P2";
  if (kind == P1xP1) return "P1xP1";
  return "P" + std::to_string(n);
}

std::vector<std::string> RationalMap::parameters() const {
  const auto& names = ring().names();
  return {names.begin() + std::min<std::size_t>(names.size(), source.coordinates()), names.end()};
}

std::string RationalMap::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) os << (target.product() && i == 2 ? " ; " : " : ");
    os << components[i].to_string();
  }
  os << ")";
  return os.str();
}

RationalMap as_rational_map(const Parametrization& f) {
  RationalMap m;
  m.source = Space::of(f.domain);
  m.target = Space::projective(static_cast<int>(f.components.size()) - 1);
  m.components = f.components;
  return m;
}

Parametrization as_parametrization(const RationalMap& m, Domain d) {
  if (m.target.product()) throw InputError("a map into P1xP1 is not a parametrization");
  if (Space::of(d).coordinates() != m.source.coordinates()) throw InputError("domain does not match the map source");
  Parametrization f;
  f.domain = d;
  Ring r = param_ring(d, m.parameters());
  std::vector<int> map(m.ring().nvars());
  for (int i = 0; i < m.ring().nvars(); ++i) map[i] = i;
  for (const auto& c : m.components) f.components.push_back(c.in_ring(r, map));
  return f;
}

RationalMap strip_common_factor(const RationalMap& m) {
  RationalMap out = m;
  auto mask = coordinate_mask(m.ring(), m.source.coordinates());
  for (const auto& g : component_groups(m.target)) {
    std::vector<Poly> part;
    for (int i : g)
      if (!m.components[i].is_zero()) part.push_back(m.components[i]);
    if (part.empty()) continue;
    Poly d = gcd_in(part, mask);
    if (d.is_constant()) continue;
    for (int i : g)
      if (!m.components[i].is_zero()) out.components[i] = *divide_exact(m.components[i], d);
  }
  return out;
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner, bool strip) {
  if (outer.source.coordinates() != inner.target.coordinates() || outer.source.product() != inner.target.product())
    throw InputError("cannot compose a map from " + outer.source.to_string() + " after a map to " +
                     inner.target.to_string());
  std::vector<std::string> names = inner.ring().names();
  for (const auto& p : outer.parameters())
    if (std::find(names.begin(), names.end(), p) == names.end()) names.push_back(p);
  Ring r = Ring::make(names);
  const Ring& ro = outer.ring();
  const int k = outer.source.coordinates();
  std::vector<Poly> images;
  for (int i = 0; i < ro.nvars(); ++i)
    images.push_back(i < k ? inner.components[i].in_ring(r) : Poly::variable(r, ro.name(i)));
  RationalMap out;
  out.source = inner.source;
  out.target = outer.target;
  for (const auto& c : outer.components) out.components.push_back(c.substitute(images));
  return strip ? strip_common_factor(out) : out;
}

RationalMap identity_map(const Space& s) {
  RationalMap m;
  m.source = m.target = s;
  Ring r = Ring::make(s.names());
  for (int i = 0; i < s.coordinates(); ++i) m.components.push_back(Poly::variable(r, i));
  return m;
}

int ReparamFamily::variable(int param) const { return member.ring().index(params[param]); }

ReparamFamily identity_family(const Space& s) {
  ReparamFamily fam;
  fam.label = "r_c";
  fam.member.source = fam.member.target = s;
  auto names = s.names();
  if (s.product()) {
    fam.params = indexed("c", 8);
    names.insert(names.end(), fam.params.begin(), fam.params.end());
    Ring r = Ring::make(names);
    auto c = [&](int i) { return Poly::variable(r, 4 + i); };
    auto y = [&](int i) { return Poly::variable(r, i); };
    fam.member.components = {c(0) * y(0) + c(1) * y(1), c(2) * y(0) + c(3) * y(1), c(4) * y(2) + c(5) * y(3),
                             c(6) * y(2) + c(7) * y(3)};
    fam.inequations = {c(0) * c(3) - c(1) * c(2), c(4) * c(7) - c(5) * c(6)};
    fam.normalization = {{0, 1, 2, 3}, {4, 5, 6, 7}};
    return fam;
  }
  const int k = s.coordinates();
  fam.params = indexed("c", k * k);
  names.insert(names.end(), fam.params.begin(), fam.params.end());
  Ring r = Ring::make(names);
  PolyMatrix mat(k, k);
  for (int i = 0; i < k; ++i) {
    Poly p(r);
    for (int j = 0; j < k; ++j) {
      mat(i, j) = Poly::variable(r, k + i * k + j);
      p += mat(i, j) * Poly::variable(r, j);
    }
    fam.member.components.push_back(p);
  }
  fam.inequations = {determinant(mat)};
  std::vector<int> all(k * k);
  for (int i = 0; i < k * k; ++i) all[i] = i;
  fam.normalization = {all};
  return fam;
}

ReparamFamily identity_family(Domain d) { return identity_family(Space::of(d)); }

std::vector<DivisorClass> line_classes(const ClassifiedMap& cm, const LineClassOptions& options) {
  const Domain dom = cm.domain();
  const Degree fd = cm.cls.degree;
  const int bound = options.bound >= 0 ? options.bound : std::max(fd.d1, fd.d2);
  const auto& m = cm.cls.mults;
  const int r = static_cast<int>(m.size());
  std::vector<int> tail_sq(r + 1, 0);
  for (int i = r - 1; i >= 0; --i) tail_sq[i] = tail_sq[i + 1] + std::max(m[i], 0) * std::max(m[i], 0);
  std::vector<DivisorClass> candidates;
  std::vector<int> b(r, 0);
  bool capped = false;
  std::function<void(int, int, int, const Degree&)> rec = [&](int i, int sq, int lin, const Degree& deg) {
    if (capped) return;
    if (i == r) {
      if (sq == 0 && lin == 0) {
        if (candidates.size() >= options.max_candidates) {
          capped = true;
          return;
        }
        candidates.emplace_back(dom, deg, b);
      }
      return;
    }
    if (lin < 0 || sq < 0) return;
    if (static_cast<double>(lin) * lin > static_cast<double>(sq) * tail_sq[i] + 1e-9) return;
    const int top = static_cast<int>(std::sqrt(static_cast<double>(sq)) + 1e-9);
    for (int v = top; v >= 0; --v) {
      b[i] = v;
      rec(i + 1, sq - v * v, lin - m[i] * v, deg);
    }
    b[i] = 0;
  };
  std::vector<Degree> degrees;
  if (dom == Domain::P2) {
    for (int a = 1; a <= bound; ++a) degrees.push_back({a, 0});
  } else {
    for (int t = 1; t <= 2 * bound; ++t)
      for (int a0 = std::min(t, bound); a0 >= 0 && t - a0 <= bound; --a0) degrees.push_back({a0, t - a0});
  }
  for (const auto& deg : degrees) {
    DivisorClass pure(dom, deg, std::vector<int>(r, 0));
    const int sq = intersect(pure, pure);
    const int lin = intersect(DivisorClass(dom, fd, std::vector<int>(r, 0)), pure) - 1;
    rec(0, sq, lin, deg);
  }
  std::vector<DivisorClass> out;
  for (const auto& c : candidates) {
    if (h0(cm, c) < 1) continue;
    if (moving_part(cm, c).cls == c) out.push_back(c);
  }
  return out;
}

RationalMap pencil_pair_map(const ClassifiedMap& cm, const DivisorClass& a, const DivisorClass& b) {
  if (h0(cm, a) != 2 || h0(cm, b) != 2) throw InputError("pencil classes must have h0 = 2");
  if (intersect(a, b) != 1) throw InputError("pencil classes must meet with intersection number 1");
  RationalMap out;
  out.source = Space::of(cm.domain());
  out.target = Space::quadric();
  for (const auto* c : {&a, &b}) {
    auto mp = moving_part(cm, *c);
    for (const auto& p : mp.psi.components) out.components.push_back(p);
  }
  return out;
}

RationalMap birational_inverse(const RationalMap& m, const InverseOptions& options) {
  if (m.symbolic()) throw InputError("cannot invert a map with parameters");
  Ring tr = Ring::make(m.target.names());
  const auto groups = component_groups(m.source);
  RationalMap inv;
  inv.source = m.target;
  inv.target = m.source;
  inv.components.assign(m.source.coordinates(), Poly(tr));
  for (const auto& group : groups) {
    bool found = false;
    for (const auto& deg : degree_candidates(m.target, options.max_degree)) {
      auto forms = inverse_group(m, group, deg, tr);
      if (forms.empty()) continue;
      for (std::size_t i = 0; i < group.size(); ++i) inv.components[group[i]] = forms[i];
      found = true;
      break;
    }
    if (!found) throw InputError("no inverse found up to degree " + std::to_string(options.max_degree));
  }
  if (!is_identity(compose(inv, m)))
    throw InputError("map is not birational onto its image (inverse verification failed)");
  if (m.target.coordinates() == m.source.coordinates() && m.target.product() == m.source.product() &&
      !is_identity(compose(m, inv)))
    throw InputError("map is not birational (inverse verification failed)");
  return inv;
}

std::vector<ReparamFamily> superset_B1(const ClassifiedMap& f, const ClassifiedMap& g) {
  require_case(f, g, BaseCase::B1);
  RationalMap fr = as_rational_map(f.map);
  RationalMap ginv = birational_inverse(as_rational_map(g.map));
  ReparamFamily fam = identity_family(Space::projective(2));
  RationalMap member = compose(ginv, compose(fam.member, fr));
  return {with_member(fam, member, "g^-1 o r_c o f")};
}

ScalarMatrix standard_cone() {
  ScalarMatrix c(4, 4);
  c(0, 0) = Scalar(1);
  c(1, 1) = Scalar(1);
  c(2, 2) = Scalar(-1);
  return c;
}

QuadricNormalization normalize_cone(const ClassifiedMap& f) {
  if (f.dim() != 3) throw InputError("cone normalization needs a map into P3");
  auto quadrics = implicit_forms(f.map, 2);
  if (quadrics.size() != 1) throw InputError("image is not contained in a unique quadric");
  QuadricNormalization out;
  out.quadric = ScalarMatrix(4, 4);
  for (const auto& t : quadrics[0].terms()) {
    std::vector<int> v;
    for (int i = 0; i < 4; ++i)
      for (int e = 0; e < t.m[i]; ++e) v.push_back(i);
    if (v[0] == v[1]) {
      out.quadric(v[0], v[0]) = t.c;
    } else {
      out.quadric(v[0], v[1]) = t.c / Scalar(2);
      out.quadric(v[1], v[0]) = t.c / Scalar(2);
    }
  }
  const ScalarMatrix& q = out.quadric;
  const ScalarMatrix vertex = kernel_basis(q);
  if (vertex.cols() != 1) throw InputError("image quadric is not a cone");
  auto form = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    Scalar s(0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += a[i] * q(i, j) * b[j];
    return s;
  };
  auto apply_q = [&](const std::vector<Scalar>& a) {
    std::vector<Scalar> out(4, Scalar(0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[i] += q(i, j) * a[j];
    return out;
  };
  // an isotropic vector off the vertex: the image of a domain point
  std::vector<Scalar> v;
  const int nd = f.map.ring().nvars();
  std::vector<int> pt(nd, -2);
  while (v.empty()) {
    std::vector<Scalar> x;
    for (int c : pt) x.push_back(Scalar(c));
    std::vector<Scalar> img;
    for (const auto& c : f.map.components) img.push_back(c.eval(x));
    auto av = apply_q(img);
    if (std::any_of(av.begin(), av.end(), [](const Scalar& s) { return !s.is_zero(); })) v = img;
    int i = 0;
    while (i < nd && pt[i] == 2) pt[i++] = -2;
    if (i == nd) break;
    ++pt[i];
  }
  if (v.empty()) throw ConsistencyError("no image point off the vertex of the cone");
  // hyperbolic partner w with q(w) = 0 and b = <v, w> != 0
  auto av = apply_q(v);
  int k = 0;
  while (av[k].is_zero()) ++k;
  std::vector<Scalar> w(4, Scalar(0));
  w[k] = Scalar(1);
  const Scalar b = av[k];
  const Scalar shift = form(w, w) / (Scalar(2) * b);
  for (int i = 0; i < 4; ++i) w[i] -= shift * v[i];
  // u orthogonal to v and w with q(u) != 0
  ScalarMatrix rows(2, 4);
  auto aw = apply_q(w);
  for (int j = 0; j < 4; ++j) rows(0, j) = av[j], rows(1, j) = aw[j];
  const ScalarMatrix perp = kernel_basis(rows);
  std::vector<Scalar> u;
  for (int c = 0; c < perp.cols() && u.empty(); ++c) {
    std::vector<Scalar> cand;
    for (int i = 0; i < 4; ++i) cand.push_back(perp(i, c));
    if (!form(cand, cand).is_zero()) u = cand;
  }
  if (u.empty()) throw ConsistencyError("degenerate cone normalization");
  // q(n z) = d (z0^2 + z1^2 - z2^2)
  const Scalar d = form(u, u);
  const Scalar t = d / (Scalar(2) * b);
  ScalarMatrix n(4, 4);
  for (int i = 0; i < 4; ++i) {
    n(i, 0) = v[i] + t * w[i];
    n(i, 1) = u[i];
    n(i, 2) = t * w[i] - v[i];
    n(i, 3) = vertex(i, 0);
  }
  out.to_cone = inverse(n);
  return out;
}

std::vector<ReparamFamily> superset_B2(const ClassifiedMap& f, const ClassifiedMap& g,
                                       const LineClassOptions& options) {
  require_case(f, g, BaseCase::B2);
  auto ff = line_classes(f, options), fg = line_classes(g, options);
  auto pair = [](const std::vector<DivisorClass>& cs) {
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        if (intersect(cs[i], cs[j]) == 1) return std::make_pair(cs[i], cs[j]);
    throw ConsistencyError("no pair of line classes meeting once");
  };
  if (ff.size() >= 2 && fg.size() >= 2) {
    auto [a, b] = pair(ff);
    auto [u, v] = pair(fg);
    RationalMap inv = birational_inverse(pencil_pair_map(g, u, v));
    ReparamFamily fam = identity_family(Space::quadric());
    std::vector<ReparamFamily> out;
    out.push_back(with_member(fam, compose(inv, compose(fam.member, pencil_pair_map(f, a, b))), "s_c"));
    out.push_back(with_member(fam, compose(inv, compose(fam.member, pencil_pair_map(f, b, a))), "t_c"));
    return out;
  }
  if (ff.size() >= 2 || fg.size() >= 2) return {};

  auto nf = normalize_cone(f), ng = normalize_cone(g);
  RationalMap s = linear_map(nf.to_cone, 3);
  RationalMap tinv = linear_map(inverse(ng.to_cone), 3);
  RationalMap ginv = birational_inverse(as_rational_map(g.map));

  ReparamFamily fam = identity_family(Space::projective(3));
  fam.params.push_back("lambda");
  {
    auto names = fam.member.ring().names();
    names.push_back("lambda");
    Ring r = Ring::make(names);
    for (auto& c : fam.member.components) c = c.in_ring(r);
    for (auto& c : fam.inequations) c = c.in_ring(r);
    PolyMatrix mc(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) mc(i, j) = Poly::variable(r, 4 + 4 * i + j);
    PolyMatrix cone = to_poly_matrix(standard_cone(), r);
    PolyMatrix lhs = mc.transpose() * cone * mc;
    Poly lambda = Poly::variable(r, "lambda");
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) fam.equations.push_back(lhs(i, j) - cone(i, j) * lambda);
    fam.inequations.push_back(lambda);
  }
  RationalMap tail = compose(s, as_rational_map(f.map));
  RationalMap member = compose(ginv, compose(tinv, compose(fam.member, tail)));
  ReparamFamily out = with_member(fam, member, "cone");

  // Same set without equations: similitudes of the conic z0^2 + z1^2 - z2^2 are Sym^2 of
  // PGL2 acting on (u : v) with z2 + z0 = u^2, z2 - z0 = v^2, z1 = u v.
  ReparamFamily open;
  open.label = "cone";
  open.params = indexed("c", 8);
  open.member.source = open.member.target = Space::projective(3);
  auto names = Space::projective(3).names();
  names.insert(names.end(), open.params.begin(), open.params.end());
  Ring r = Ring::make(names);
  auto z = [&](int i) { return Poly::variable(r, i); };
  auto c = [&](int i) { return Poly::variable(r, 4 + i); };
  const Poly a = c(0), b = c(1), cc = c(2), d = c(3);
  const Poly p = z(0) + z(2), q = z(2) - z(0), w = z(1);
  const Poly two(r, Scalar(2));
  const Scalar half = Scalar(mpq_class(1, 2));
  Poly p2 = a * a * p + two * a * b * w + b * b * q;
  Poly w2 = a * cc * p + (a * d + b * cc) * w + b * d * q;
  Poly q2 = cc * cc * p + two * cc * d * w + d * d * q;
  open.member.components = {(p2 - q2) * half, w2, (p2 + q2) * half, c(4) * z(0) + c(5) * z(1) + c(6) * z(2) + c(7) * z(3)};
  open.inequations = {a * d - b * cc, c(7)};
  open.normalization = {{0, 1, 2, 3}};
  open.member = compose(ginv, compose(tinv, compose(open.member, tail)));
  out.unconstrained = std::make_shared<const ReparamFamily>(std::move(open));
  return {out};
}

}  // namespace surfiso
