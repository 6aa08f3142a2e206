#include "surfiso/algebra/solver.hpp"

#include <algorithm>
#include <sstream>

#include "surfiso/algebra/factor.hpp"
#include "surfiso/algebra/matrix.hpp"

namespace surfiso {

Poly substitute_var(const Poly& p, int v, const Poly& e) {
  if (p.degree(v) <= 0) return p;
  std::vector<bool> mask(p.ring().nvars(), false);
  mask[v] = true;
  PolyBuilder b(p.ring());
  std::vector<Poly> powers{Poly(p.ring(), Scalar(1))};
  for (const auto& [m, c] : p.coefficients_wrt(mask)) {
    while (static_cast<int>(powers.size()) <= m[v]) powers.push_back(powers.back() * e);
    b.add(c * powers[m[v]]);
  }
  return b.take();
}

bool Branch::assigned(int var) const {
  for (const auto& [v, e] : assignments)
    if (v == var) return true;
  return false;
}

std::vector<int> Branch::free_variables() const {
  std::vector<int> out;
  for (int i = 0; i < ring.nvars(); ++i)
    if (!assigned(i)) out.push_back(i);
  return out;
}

Poly Branch::apply(const Poly& p) const {
  if (assignments.empty()) return p;
  std::vector<Poly> images;
  for (int i = 0; i < ring.nvars(); ++i) images.push_back(Poly::variable(ring, i));
  for (const auto& [v, e] : assignments) images[v] = e;
  Poly q = p.ring() == ring ? p : p.in_ring(ring);
  return q.substitute(images);
}

std::string Branch::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : assignments) {
    os << (first ? "" : ", ") << ring.name(v) << " = " << e.to_string();
    first = false;
  }
  for (const auto& e : equations) {
    os << (first ? "" : ", ") << e.to_string() << " = 0";
    first = false;
  }
  for (const auto& h : inequations) {
    os << (first ? "" : ", ") << h.to_string() << " != 0";
    first = false;
  }
  return os.str();
}

namespace {

struct State {
  Branch b;
  std::vector<bool> nonzero;
  std::vector<bool> held;  // variables whose minimal polynomial has no root in the field
  bool is_gb = false;
};

bool contains(const std::vector<Poly>& v, const Poly& p) {
  return std::any_of(v.begin(), v.end(), [&](const Poly& q) { return q == p; });
}

class Solver {
 public:
  Solver(const SolveOptions& o) : opt_(o) {}

  std::vector<Branch> run(State s) {
    stack_.push_back(std::move(s));
    while (!stack_.empty()) {
      State cur = std::move(stack_.back());
      stack_.pop_back();
      if (++visited_ > opt_.max_branches) throw GroebnerAbort("solver branch limit exceeded");
      step(std::move(cur));
    }
    return std::move(out_);
  }

 private:
  const SolveOptions& opt_;
  std::vector<State> stack_;
  std::vector<Branch> out_;
  std::size_t visited_ = 0;

  void assign(State& s, int v, const Poly& e) {
    for (auto& [w, x] : s.b.assignments) x = substitute_var(x, v, e);
    s.b.assignments.push_back({v, e});
    std::sort(s.b.assignments.begin(), s.b.assignments.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& q : s.b.equations) q = substitute_var(q, v, e);
    for (auto& h : s.b.inequations) h = substitute_var(h, v, e);
    s.is_gb = false;
  }

  Poly strip(const State& s, Poly q) const {
    Monomial mc = q.monomial_content();
    Monomial drop;
    for (int i = 0; i < s.b.ring.nvars(); ++i)
      if (s.nonzero[i] && mc[i]) drop.set(i, mc[i]);
    if (drop.deg) q = q.div_monomial(drop);
    for (const auto& h : s.b.inequations) {
      if (h.size() < 2 || h.total_degree() > q.total_degree()) continue;
      while (q.total_degree() >= h.total_degree()) {
        auto d = divide_exact(q, h);
        if (!d) break;
        q = *d;
      }
    }
    return q.monic();
  }

  // Returns false when the branch is contradictory.
  bool normalize(State& s) {
    std::vector<Poly> ineq;
    for (auto& h : s.b.inequations) {
      if (h.is_zero()) return false;
      if (h.is_constant()) continue;
      if (h.size() == 1) {
        for (int i = 0; i < s.b.ring.nvars(); ++i)
          if (h.lead_monomial()[i]) s.nonzero[i] = true;
      }
      Poly m = h.monic();
      if (!contains(ineq, m)) ineq.push_back(m);
    }
    s.b.inequations = std::move(ineq);
    std::vector<Poly> eqs;
    for (auto& q : s.b.equations) {
      if (q.is_zero()) continue;
      if (q.is_constant()) return false;
      Poly r = strip(s, q);
      if (r.is_constant()) return false;
      if (!contains(eqs, r)) eqs.push_back(r);
    }
    if (eqs.size() != s.b.equations.size()) s.is_gb = false;
    std::sort(eqs.begin(), eqs.end(), [](const Poly& a, const Poly& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.total_degree() < b.total_degree();
    });
    s.b.equations = std::move(eqs);
    return true;
  }

  bool rule_linear(State& s) {
    for (const auto& q : s.b.equations) {
      auto sup = q.support();
      for (auto it = sup.rbegin(); it != sup.rend(); ++it) {
        const int v = *it;
        if (q.degree(v) != 1) continue;
        std::vector<bool> mask(s.b.ring.nvars(), false);
        mask[v] = true;
        Poly a(s.b.ring), rest(s.b.ring);
        for (const auto& [m, c] : q.coefficients_wrt(mask)) (m[v] ? a : rest) = c;
        if (!a.is_constant()) continue;
        Poly e = rest * (-a.constant_value()).inverse();
        assign(s, v, e);
        return true;
      }
    }
    return false;
  }

  bool rule_univariate(State& s) {
    for (std::size_t k = 0; k < s.b.equations.size(); ++k) {
      const Poly& q = s.b.equations[k];
      auto sup = q.support();
      if (sup.size() != 1 || s.held[sup[0]]) continue;
      branch_on_univariate(s, sup[0], q);
      return true;
    }
    return false;
  }

  void branch_on_univariate(const State& s, int v, const Poly& q) {
    std::vector<Scalar> c(q.degree(v) + 1);
    for (const auto& t : q.terms()) c[t.m[v]] += t.c;
    UPoly u(std::move(c));
    for (auto& [f, mult] : factor(u, GroundField::join(opt_.field, u.field()))) {
      State n = s;
      if (f.degree() == 1) {
        assign(n, v, Poly(s.b.ring, -f[0] / f[1]));
      } else {
        Poly fp(s.b.ring);
        for (int i = 0; i <= f.degree(); ++i) {
          Monomial m;
          m.set(v, i);
          fp += Poly::monomial(s.b.ring, m, f[i]);
        }
        n.b.equations.push_back(fp);
        n.held[v] = true;
        n.is_gb = false;
      }
      stack_.push_back(std::move(n));
    }
  }

  bool rule_monomial(State& s) {
    for (const auto& q : s.b.equations) {
      Monomial mc = q.monomial_content();
      if (mc.deg == 0) continue;
      std::vector<int> vars;
      for (int i = 0; i < s.b.ring.nvars(); ++i)
        if (mc[i]) vars.push_back(i);
      // disjoint split: v1 = 0 | v1 != 0, v2 = 0 | ... | all nonzero and q/mc = 0
      Poly rest = q.div_monomial(mc);
      for (std::size_t k = 0; k <= vars.size(); ++k) {
        State n = s;
        for (std::size_t j = 0; j < k; ++j) {
          n.b.inequations.push_back(Poly::variable(s.b.ring, vars[j]));
          n.nonzero[vars[j]] = true;
        }
        if (k < vars.size()) {
          assign(n, vars[k], Poly(s.b.ring));
        } else {
          for (auto& e : n.b.equations)
            if (e == q) e = rest;
          n.is_gb = false;
        }
        stack_.push_back(std::move(n));
      }
      return true;
    }
    return false;
  }

  std::vector<Poly> to_grevlex(const std::vector<Poly>& ps, const Ring& g) const {
    std::vector<Poly> out;
    for (const auto& p : ps) out.push_back(p.in_ring(g));
    return out;
  }

  // Returns false when the ideal is the unit ideal.
  bool rule_groebner(State& s) {
    const Ring g = s.b.ring.with_order(MonomialOrder::GrevLex);
    std::vector<Poly> gb = groebner_basis(to_grevlex(s.b.equations, g), opt_.limits);
    for (const auto& h : s.b.inequations) {
      if (is_unit_ideal(gb)) break;
      gb = saturate(gb, h.in_ring(g), opt_.limits);
    }
    if (is_unit_ideal(gb)) return false;
    std::vector<Poly> eqs;
    for (const auto& p : gb) eqs.push_back(p.in_ring(s.b.ring));
    s.b.equations = std::move(eqs);
    s.is_gb = true;
    return true;
  }

  // Zero-dimensional case: branch on the minimal polynomial of some variable.
  bool rule_zero_dim(State& s) {
    const Ring g = s.b.ring.with_order(MonomialOrder::GrevLex);
    std::vector<Poly> gb = groebner_basis(to_grevlex(s.b.equations, g), opt_.limits);
    const int n = g.nvars();
    std::vector<int> vars;
    for (int v : s.b.free_variables()) {
      bool occurs = false;
      for (const auto& p : gb)
        if (p.degree(v) > 0) occurs = true;
      if (occurs) vars.push_back(v);
    }
    for (int v : vars) {
      bool pure = false;
      for (const auto& p : gb) {
        const Monomial& lm = p.lead_monomial();
        if (lm.deg > 0 && lm[v] == lm.deg) pure = true;
      }
      if (!pure) return false;  // positive-dimensional
    }
    (void)n;
    for (int v : vars) {
      if (s.held[v]) continue;
      // minimal polynomial of v from normal forms of its powers
      std::vector<Poly> nfs;
      Poly pw(g, Scalar(1));
      const Poly x = Poly::variable(g, v);
      for (int k = 0; k <= 64; ++k) {
        nfs.push_back(normal_form(pw, gb));
        // collect the monomial support
        std::vector<Monomial> mons;
        for (const auto& f : nfs)
          for (const auto& t : f.terms())
            if (std::none_of(mons.begin(), mons.end(), [&](const Monomial& m) { return m == t.m; }))
              mons.push_back(t.m);
        ScalarMatrix a(static_cast<int>(mons.size()), static_cast<int>(nfs.size()));
        for (std::size_t j = 0; j < nfs.size(); ++j)
          for (std::size_t i = 0; i < mons.size(); ++i) a(static_cast<int>(i), static_cast<int>(j)) = nfs[j].coefficient(mons[i]);
        ScalarMatrix ker = kernel_basis(a);
        if (ker.cols() > 0) {
          Poly mp(s.b.ring);
          for (int j = 0; j < ker.rows(); ++j) {
            Monomial m;
            m.set(v, j);
            mp += Poly::monomial(s.b.ring, m, ker(j, 0));
          }
          // keep the original equations in each branch
          branch_on_univariate(s, v, mp);
          return true;
        }
        pw = pw * x;
      }
      return false;
    }
    return false;
  }

  void step(State s) {
    for (;;) {
      if (!normalize(s)) return;
      if (s.b.equations.empty()) {
        out_.push_back(s.b);
        return;
      }
      if (rule_linear(s)) continue;
      if (rule_univariate(s)) return;
      if (rule_monomial(s)) return;
      if (!s.is_gb) {
        std::vector<Poly> before = s.b.equations;
        if (!rule_groebner(s)) return;
        if (!normalize(s)) return;
        bool same = before.size() == s.b.equations.size();
        for (std::size_t i = 0; same && i < before.size(); ++i) same = contains(before, s.b.equations[i]);
        s.is_gb = true;
        if (!same) continue;
      }
      if (rule_zero_dim(s)) return;
      out_.push_back(s.b);  // positive-dimensional or without roots in the field
      return;
    }
  }
};

}  // namespace

std::vector<Branch> solve(const std::vector<Poly>& eqs, const std::vector<Poly>& ineqs, const SolveOptions& options) {
  Ring r;
  for (const auto& p : eqs)
    if (p.ring().valid()) r = p.ring();
  for (const auto& p : ineqs)
    if (p.ring().valid()) r = p.ring();
  State s;
  s.b.ring = r;
  s.b.equations = eqs;
  s.b.inequations = ineqs;
  s.nonzero.assign(r.nvars(), false);
  s.held.assign(r.nvars(), false);
  return Solver(options).run(std::move(s));
}

}  // namespace surfiso
