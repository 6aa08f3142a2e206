#include "surfiso/basepoints.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "surfiso/algebra/factor.hpp"
#include "surfiso/algebra/solver.hpp"

namespace surfiso {

namespace {

const Ring& local_ring() {
  static const Ring r = Ring::make({"u", "v"});
  return r;
}

struct NeedExtension {
  UPoly factor;
};

std::vector<std::string> texts(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

/// Images of the domain coordinates in the local ring at a simple point.
std::vector<Poly> root_chart(Domain d, const std::vector<Scalar>& p, int nvars) {
  const Ring& L = local_ring();
  Poly u = Poly::variable(L, 0), v = Poly::variable(L, 1);
  std::vector<Poly> img(nvars, Poly(L));
  if (d == Domain::P2) {
    int k = p[0].is_zero() ? (p[1].is_zero() ? 2 : 1) : 0;
    std::vector<int> other;
    for (int i = 0; i < 3; ++i)
      if (i != k) other.push_back(i);
    img[k] = Poly(L, Scalar(1));
    img[other[0]] = u + Poly(L, p[other[0]]);
    img[other[1]] = v + Poly(L, p[other[1]]);
  } else {
    int k1 = p[0].is_zero() ? 1 : 0, o1 = 1 - k1;
    int k2 = p[2].is_zero() ? 3 : 2, o2 = 5 - k2;
    img[k1] = Poly(L, Scalar(1));
    img[o1] = u + Poly(L, p[o1]);
    img[k2] = Poly(L, Scalar(1));
    img[o2] = v + Poly(L, p[o2]);
  }
  return img;
}

Poly to_local(const Poly& form, Domain d, const std::vector<Scalar>& p) {
  const int nc = coordinate_count(d);
  for (int var : form.support())
    if (var >= nc) throw InputError("local expansion of a form with parameters: " + form.to_string());
  return form.substitute(root_chart(d, p, form.ring().nvars()));
}

Poly drop_below(const Poly& p, int m) {
  if (m <= 0) return p;
  std::vector<Term> keep;
  for (const auto& t : p.terms())
    if (t.m.deg >= m) keep.push_back(t);
  return Poly::from_terms(p.ring(), std::move(keep));
}

/// Transform of a local polynomial to a child chart, dividing by the exceptional factor to power m.
Poly blow(const Poly& p, Chart c, const Scalar& t, int m) {
  const Ring& L = local_ring();
  Poly u = Poly::variable(L, 0), v = Poly::variable(L, 1);
  Poly q = drop_below(p, m);
  Monomial e;
  if (c == Chart::A) {
    q = q.substitute({u, u * (v + Poly(L, t))});
    e.set(0, m);
  } else {
    q = q.substitute({u * v, v});
    e.set(1, m);
  }
  return m > 0 ? q.div_monomial(e) : q;
}

Scalar chart_parameter(const BasePoint& p) { return p.chart == Chart::A ? p.coordinates[0] : Scalar(0); }

UPoly univariate(const Poly& p, int var) {
  std::vector<Scalar> c(std::max(0, p.degree(var) + 1));
  for (const auto& t : p.terms()) c[t.m[var]] += t.c;
  return UPoly(std::move(c));
}

/// p(0, v) as a univariate polynomial in v.
UPoly on_exceptional(const Poly& p) {
  std::vector<Scalar> c(std::max(0, p.degree(1) + 1));
  for (const auto& t : p.terms())
    if (t.m[0] == 0) c[t.m[1]] += t.c;
  return UPoly(std::move(c));
}

UPoly nonlinear_factor(const Branch& b, const GroundField& k) {
  auto pick = [&](const Poly& p) -> std::optional<UPoly> {
    auto s = p.support();
    if (s.size() != 1) return std::nullopt;
    std::vector<UPoly> rest;
    auto r = roots(univariate(p, s[0]), k, &rest);
    if (!rest.empty()) return rest.front();
    return std::nullopt;
  };
  for (const auto& e : b.equations)
    if (auto f = pick(e)) return *f;
  std::vector<Poly> gens;
  Ring lex_ring = b.ring.with_order(MonomialOrder::Lex);
  for (const auto& e : b.equations) gens.push_back(e.in_ring(lex_ring));
  auto lex = groebner_basis(gens);
  for (const auto& e : lex)
    if (auto f = pick(e)) return *f;
  throw ConsistencyError("branch without a univariate factor: " + b.to_string());
}

struct RawPoint {
  BasePoint p;
  std::vector<Poly> local;  // strict transforms of the input forms in (u, v)
};

int min_order(const std::vector<Poly>& ps) {
  int m = INT_MAX;
  for (const auto& p : ps) m = std::min(m, local_order(p));
  return m;
}

std::vector<RawPoint> simple_points(const std::vector<Poly>& forms, Domain d, const GroundField& k) {
  const int nc = coordinate_count(d);
  // Patterns: -1 free, else fixed value. Every point has exactly one pattern.
  std::vector<std::vector<int>> patterns;
  if (d == Domain::P2) {
    patterns = {{1, -1, -1}, {0, 1, -1}, {0, 0, 1}};
  } else {
    for (auto a : {std::vector<int>{1, -1}, std::vector<int>{0, 1}})
      for (auto b : {std::vector<int>{1, -1}, std::vector<int>{0, 1}}) patterns.push_back({a[0], a[1], b[0], b[1]});
  }
  const auto names = coordinate_names(d);
  std::vector<RawPoint> out;
  for (const auto& pat : patterns) {
    std::vector<std::string> free;
    for (int i = 0; i < nc; ++i)
      if (pat[i] < 0) free.push_back(names[i]);
    std::vector<std::vector<Scalar>> pts;
    if (free.empty()) {
      std::vector<Scalar> pt(forms[0].ring().nvars());
      for (int i = 0; i < nc; ++i) pt[i] = pat[i];
      bool all = std::all_of(forms.begin(), forms.end(), [&](const Poly& f) { return f.eval(pt).is_zero(); });
      if (all) pts.push_back(std::vector<Scalar>(pt.begin(), pt.begin() + nc));
    } else {
      Ring r = Ring::make(free);
      std::vector<Poly> img(forms[0].ring().nvars(), Poly(r));
      for (int i = 0, j = 0; i < nc; ++i) img[i] = pat[i] < 0 ? Poly::variable(r, j++) : Poly(r, Scalar(pat[i]));
      std::vector<Poly> eqs;
      bool none = false;
      for (const auto& f : forms) {
        Poly g = f.substitute(img);
        if (g.is_zero()) continue;
        if (g.is_constant()) none = true;
        eqs.push_back(g);
      }
      if (none) continue;
      if (eqs.empty()) throw InputError("forms vanish on a whole chart");
      SolveOptions opt;
      opt.field = k;
      for (const auto& b : solve(eqs, {}, opt)) {
        if (!b.is_explicit()) throw NeedExtension{nonlinear_factor(b, k)};
        if (!b.free_variables().empty()) throw InputError("forms have a common component");
        std::vector<Scalar> pt(nc);
        for (int i = 0, j = 0; i < nc; ++i) {
          if (pat[i] >= 0) {
            pt[i] = pat[i];
          } else {
            for (const auto& [v, e] : b.assignments)
              if (v == j) pt[i] = e.constant_value();
            ++j;
          }
        }
        pts.push_back(pt);
      }
    }
    for (auto& pt : pts) {
      RawPoint rp;
      rp.p.coordinates = pt;
      for (const auto& f : forms) rp.local.push_back(to_local(f, d, pt));
      rp.p.multiplicity = min_order(rp.local);
      if (rp.p.multiplicity == 0) throw ConsistencyError("common zero with multiplicity zero");
      out.push_back(std::move(rp));
    }
  }
  return out;
}

std::vector<RawPoint> children_of(const RawPoint& parent, const GroundField& k) {
  const int m = parent.p.multiplicity;
  std::vector<RawPoint> out;
  std::vector<Poly> a;
  UPoly h;
  for (const auto& l : parent.local) {
    a.push_back(blow(l, Chart::A, Scalar(0), m));
    h = gcd(h, on_exceptional(a.back()));
  }
  if (!h.is_zero() && h.degree() > 0) {
    std::vector<UPoly> rest;
    auto rts = roots(h, k, &rest);
    if (!rest.empty()) throw NeedExtension{rest.front()};
    const Ring& L = local_ring();
    for (const auto& [t, mult] : rts) {
      RawPoint c;
      c.p.chart = Chart::A;
      c.p.coordinates = {t};
      std::vector<Poly> shift = {Poly::variable(L, 0), Poly::variable(L, 1) + Poly(L, t)};
      for (const auto& g : a) c.local.push_back(g.substitute(shift));
      c.p.multiplicity = min_order(c.local);
      if (c.p.multiplicity > 0) out.push_back(std::move(c));
    }
  }
  RawPoint c;
  c.p.chart = Chart::B;
  for (const auto& l : parent.local) c.local.push_back(blow(l, Chart::B, Scalar(0), m));
  c.p.multiplicity = min_order(c.local);
  if (c.p.multiplicity > 0) out.push_back(std::move(c));
  return out;
}

BasePointTree build_tree(const std::vector<Poly>& forms, Domain d, const GroundField& k) {
  const Degree deg = form_degree(forms.front(), d);
  const long budget = d == Domain::P2 ? 1L * deg.d1 * deg.d1 : 2L * deg.d1 * deg.d2;
  BasePointTree tree;
  tree.domain = d;
  tree.field = k;
  auto level = simple_points(forms, d, k);
  std::stable_sort(level.begin(), level.end(), [](const RawPoint& a, const RawPoint& b) {
    if (a.p.multiplicity != b.p.multiplicity) return a.p.multiplicity > b.p.multiplicity;
    return texts(a.p.coordinates) < texts(b.p.coordinates);
  });
  long used = 0;
  while (!level.empty()) {
    const int first = tree.size();
    for (auto& rp : level) {
      used += 1L * rp.p.multiplicity * rp.p.multiplicity;
      if (rp.p.parent >= 0) tree.points[rp.p.parent].children.push_back(tree.size());
      tree.points.push_back(rp.p);
    }
    if (used > budget) throw ConsistencyError("base point multiplicities exceed the self-intersection budget");
    std::vector<RawPoint> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (auto& c : children_of(level[i], k)) {
        if (c.p.multiplicity > level[i].p.multiplicity)
          throw ConsistencyError("infinitely near point with larger multiplicity than its parent");
        c.p.parent = first + static_cast<int>(i);
        next.push_back(std::move(c));
      }
    }
    std::stable_sort(next.begin(), next.end(), [](const RawPoint& a, const RawPoint& b) {
      if (a.p.multiplicity != b.p.multiplicity) return a.p.multiplicity > b.p.multiplicity;
      if (a.p.parent != b.p.parent) return a.p.parent < b.p.parent;
      if (a.p.chart != b.p.chart) return a.p.chart < b.p.chart;
      return texts(a.p.coordinates) < texts(b.p.coordinates);
    });
    level = std::move(next);
  }
  return tree;
}

mpz_class squarefree_part(mpz_class n) {
  mpz_class s = n < 0 ? mpz_class(-1) : mpz_class(1);
  n = abs(n);
  for (mpz_class p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) s *= p;
  }
  return s * n;
}

GroundField field_for(const UPoly& f) {
  QPoly q;
  for (const auto& c : f.coefficients()) {
    if (!c.is_rational()) throw ExtensionRequired("a second algebraic extension is required", f.to_string("t"));
    q.push_back(c.rational());
  }
  if (q.size() == 3) {
    mpq_class disc = q[1] * q[1] - 4 * q[0] * q[2];
    mpz_class s = squarefree_part(disc.get_num() * disc.get_den());
    if (s == -1) return GroundField::extension("i", {1, 0, 1});
    return GroundField::extension("a", {mpq_class(-s), 0, 1});
  }
  return GroundField::extension("a", q);
}

}  // namespace

std::string BasePoint::to_string(Domain d) const {
  std::ostringstream os;
  if (chart == Chart::Simple) {
    os << "(";
    for (std::size_t i = 0; i < coordinates.size(); ++i) {
      if (i) os << (d == Domain::P1xP1 && i == 2 ? ";" : ":");
      os << coordinates[i].to_string();
    }
    os << ")";
  } else if (chart == Chart::A) {
    os << "A(" << coordinates[0].to_string() << ")";
  } else {
    os << "B";
  }
  return os.str();
}

std::vector<int> BasePointTree::roots() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (points[i].parent < 0) out.push_back(i);
  return out;
}

std::vector<int> BasePointTree::multiplicities() const {
  std::vector<int> out;
  for (const auto& p : points) out.push_back(p.multiplicity);
  return out;
}

std::vector<int> BasePointTree::chain(int i) const {
  std::vector<int> out;
  for (; i >= 0; i = points[i].parent) out.push_back(i);
  std::reverse(out.begin(), out.end());
  return out;
}

DivisorClass BasePointTree::divisor_class(const Degree& deg) const {
  return {domain, domain == Domain::P2 ? Degree{deg.d1, 0} : deg, multiplicities()};
}

std::string BasePointTree::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    const auto& p = points[i];
    os << "p" << i + 1 << " " << p.to_string(domain) << " m=" << p.multiplicity;
    if (p.parent >= 0) os << " near p" << p.parent + 1;
    os << "\n";
  }
  return os.str();
}

int local_order(const Poly& p) {
  int m = INT_MAX / 2;
  for (const auto& t : p.terms()) m = std::min(m, t.m.deg);
  return m;
}

BasePointTree get_base_points(const std::vector<Poly>& forms, Domain d, const GroundField& field,
                              const BasePointOptions& options) {
  if (forms.empty()) throw InputError("empty linear series");
  std::vector<Poly> nz;
  for (const auto& f : forms)
    if (!f.is_zero()) nz.push_back(f);
  if (nz.empty()) throw InputError("all forms are zero");
  const Degree deg = form_degree(nz[0], d);
  GroundField k = field;
  for (const auto& f : nz) {
    if (form_degree(f, d) != deg) throw InputError("forms of different degrees");
    k = GroundField::join(k, f.field());
  }
  if (!form_gcd(nz, d).is_constant()) throw InputError("forms have a common factor");
  bool extended = false;
  while (true) {
    try {
      return build_tree(nz, d, k);
    } catch (const NeedExtension& e) {
      if (!k.is_rational() || !options.auto_extend || extended)
        throw ExtensionRequired("base point outside " + k.to_string() + ": root of " + e.factor.to_string("t"),
                                e.factor.to_string("t"));
      k = field_for(e.factor);
      extended = true;
    }
  }
}

std::vector<int> tree_multiplicities(const BasePointTree& tree, const std::vector<Poly>& forms) {
  std::vector<std::vector<Poly>> local(tree.size());
  std::vector<int> out(tree.size(), 0);
  std::vector<Poly> nz;
  for (const auto& f : forms)
    if (!f.is_zero()) nz.push_back(f);
  for (int i = 0; i < tree.size(); ++i) {
    const auto& p = tree.points[i];
    for (const auto& f : nz) {
      if (p.parent < 0) local[i].push_back(to_local(f, tree.domain, p.coordinates));
    }
    if (p.parent >= 0) {
      for (const auto& l : local[p.parent]) local[i].push_back(blow(l, p.chart, chart_parameter(p), out[p.parent]));
    }
    out[i] = nz.empty() ? 0 : min_order(local[i]);
  }
  return out;
}

Poly local_expansion(const BasePointTree& tree, int i, const std::vector<int>& mults, const Poly& form) {
  auto ch = tree.chain(i);
  Poly l = to_local(form, tree.domain, tree.points[ch[0]].coordinates);
  for (std::size_t s = 1; s < ch.size(); ++s) {
    const auto& p = tree.points[ch[s]];
    l = blow(l, p.chart, chart_parameter(p), std::max(0, mults[ch[s - 1]]));
  }
  return l;
}

ScalarMatrix condition_matrix(const BasePointTree& tree, const Degree& deg, const std::vector<int>& mults) {
  if (static_cast<int>(mults.size()) != tree.size())
    throw InputError("multiplicity vector does not match the base point tree");
  const auto basis = monomial_basis(tree.domain, deg);
  const Ring ring = domain_ring(tree.domain);
  const int nm = static_cast<int>(basis.size());
  std::vector<std::vector<Poly>> local(tree.size());
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < tree.size(); ++i) {
    const auto& p = tree.points[i];
    const int m = std::max(0, mults[i]);
    bool needed = m > 0;
    // Descendants with conditions need this point's transforms as well.
    std::vector<int> stack(p.children);
    while (!needed && !stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      if (mults[c] > 0) needed = true;
      stack.insert(stack.end(), tree.points[c].children.begin(), tree.points[c].children.end());
    }
    if (!needed) continue;
    local[i].reserve(nm);
    for (int j = 0; j < nm; ++j) {
      if (p.parent < 0)
        local[i].push_back(to_local(Poly::monomial(ring, basis[j]), tree.domain, p.coordinates));
      else
        local[i].push_back(blow(local[p.parent][j], p.chart, chart_parameter(p), std::max(0, mults[p.parent])));
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; a + b < m; ++b) {
        Monomial e;
        e.set(0, a);
        e.set(1, b);
        std::vector<Scalar> row(nm);
        bool any = false;
        for (int j = 0; j < nm; ++j) {
          row[j] = local[i][j].coefficient(e);
          any = any || !row[j].is_zero();
        }
        if (any) rows.push_back(std::move(row));
      }
  }
  ScalarMatrix c(static_cast<int>(rows.size()), nm);
  for (int r = 0; r < c.rows(); ++r)
    for (int j = 0; j < nm; ++j) c(r, j) = rows[r][j];
  return c;
}

std::vector<Poly> set_linear_series(const BasePointTree& tree, const Degree& deg, const std::vector<int>& mults,
                                    const Ring& ring) {
  if (deg.d1 < 0 || deg.d2 < 0 || (tree.domain == Domain::P2 && deg.d2 != 0)) return {};
  const int nm = monomial_count(tree.domain, deg);
  ScalarMatrix c = condition_matrix(tree, deg, mults);
  ScalarMatrix rows;
  if (c.rows() == 0) {
    rows = identity_matrix(nm);
  } else {
    ScalarMatrix k = kernel_basis(c);
    if (k.cols() == 0) return {};
    rows = k.transpose();
    rref(rows);
  }
  return forms_from_rows(rows, tree.domain, deg, ring);
}

std::vector<Poly> set_linear_series(const BasePointTree& tree, const Degree& deg, const std::vector<int>& mults) {
  return set_linear_series(tree, deg, mults, domain_ring(tree.domain));
}

std::vector<Poly> linear_series_conditions(const BasePointTree& tree, const Degree& deg,
                                           const std::vector<int>& mults, const Poly& form) {
  ScalarMatrix c = condition_matrix(tree, deg, mults);
  auto a = coefficient_vector(form, tree.domain, deg);
  std::vector<Poly> out;
  for (int r = 0; r < c.rows(); ++r) {
    PolyBuilder b(form.ring());
    for (int j = 0; j < c.cols(); ++j)
      if (!c(r, j).is_zero() && !a[j].is_zero()) b.add(a[j], c(r, j));
    Poly p = b.take();
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

}  // namespace surfiso
