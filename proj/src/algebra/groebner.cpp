#include "surfiso/algebra/groebner.hpp"

#include <algorithm>
#include <map>

namespace surfiso {

namespace {

struct Reducer {
  const Ring& ring;
  const std::vector<Poly>& basis;

  const Poly* find_divisor(const Monomial& m) const {
    for (const auto& g : basis)
      if (!g.is_zero() && g.lead_monomial().divides(m)) return &g;
    return nullptr;
  }

  // Reduce p; with `full` also the tail.
  Poly reduce(const Poly& p, bool full) const {
    auto cmp = [this](const Monomial& a, const Monomial& b) { return ring.greater(a, b); };
    std::map<Monomial, Scalar, decltype(cmp)> rem(cmp);
    for (const auto& t : p.terms()) rem.emplace(t.m, t.c);
    std::vector<Term> out;
    while (!rem.empty()) {
      auto it = rem.begin();
      const Poly* g = find_divisor(it->first);
      if (!g) {
        out.push_back({it->first, it->second});
        rem.erase(it);
        if (!full) {
          for (auto& [m, c] : rem) out.push_back({m, c});
          break;
        }
        continue;
      }
      Monomial q = it->first / g->lead_monomial();
      Scalar f = it->second / g->lead_coefficient();
      rem.erase(it);
      const auto& gt = g->terms();
      for (std::size_t k = 1; k < gt.size(); ++k) {
        Monomial m = gt[k].m * q;
        Scalar d = gt[k].c * f;
        auto [jt, ins] = rem.try_emplace(m, -d);
        if (!ins) {
          jt->second -= d;
          if (jt->second.is_zero()) rem.erase(jt);
        }
      }
    }
    return Poly::from_terms(ring, std::move(out));
  }
};

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (int k = 0; k < kMaxVars; ++k)
    if (a.e[k] && b.e[k]) return false;
  return true;
}

Poly spoly(const Poly& f, const Poly& g, const Monomial& l) {
  Poly a = f.mul_monomial(l / f.lead_monomial(), g.lead_coefficient());
  Poly b = g.mul_monomial(l / g.lead_monomial(), f.lead_coefficient());
  return a - b;
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
  if (p.is_zero()) return p;
  Reducer r{p.ring(), basis};
  return r.reduce(p, true);
}

bool is_unit_ideal(const std::vector<Poly>& gb) {
  for (const auto& g : gb)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const GroebnerLimits& limits) {
  std::vector<Poly> polys;
  std::vector<int> sugar;
  Ring ring;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      if (g.is_constant()) return {Poly(g.ring(), Scalar(1))};
      ring = g.ring();
    }
  if (!ring.valid()) return {};

  std::vector<int> G;  // active indices
  std::vector<Pair> B;
  auto update = [&](int h) {
    const Monomial& lh = polys[h].lead_monomial();
    std::vector<Pair> C, D;
    for (int g : G) {
      Monomial l = lcm(lh, polys[g].lead_monomial());
      int s = std::max(sugar[h] + l.deg - lh.deg, sugar[g] + l.deg - polys[g].lead_monomial().deg);
      C.push_back({h, g, l, s});
    }
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(lh, polys[p.j].lead_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> nb;
    for (const auto& p : B) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys[p.i].lead_monomial(), lh) == p.lcm) &&
                  !(lcm(lh, polys[p.j].lead_monomial()) == p.lcm);
      if (!drop) nb.push_back(p);
    }
    for (const auto& p : D)
      if (!coprime(lh, polys[p.j].lead_monomial())) nb.push_back(p);
    B = std::move(nb);
    std::vector<int> ng;
    for (int g : G)
      if (!lh.divides(polys[g].lead_monomial())) ng.push_back(g);
    ng.push_back(h);
    G = std::move(ng);
  };

  auto active = [&]() {
    std::vector<Poly> a;
    for (int g : G) a.push_back(polys[g]);
    return a;
  };

  // seed with inter-reduced generators, lowest leading monomial first
  std::vector<Poly> start;
  for (const auto& g : gens)
    if (!g.is_zero()) start.push_back(g.monic());
  std::sort(start.begin(), start.end(),
            [&ring](const Poly& a, const Poly& b) { return ring.greater(b.lead_monomial(), a.lead_monomial()); });
  for (const auto& g : start) {
    auto cur = active();
    Poly h = Reducer{ring, cur}.reduce(g, false);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Poly(ring, Scalar(1))};
    polys.push_back(h.monic());
    sugar.push_back(g.total_degree());
    update(static_cast<int>(polys.size()) - 1);
  }

  std::size_t processed = 0;
  while (!B.empty()) {
    if (++processed > limits.max_pairs) throw GroebnerAbort("Groebner basis pair limit exceeded");
    auto best = std::min_element(B.begin(), B.end(), [&ring](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return ring.greater(b.lcm, a.lcm);
    });
    Pair p = *best;
    B.erase(best);
    Poly s = spoly(polys[p.i], polys[p.j], p.lcm);
    auto cur = active();
    Poly h = Reducer{ring, cur}.reduce(s, false);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Poly(ring, Scalar(1))};
    polys.push_back(h.monic());
    sugar.push_back(std::max(p.sugar, h.total_degree()));
    update(static_cast<int>(polys.size()) - 1);
  }

  // minimal, then reduced
  std::vector<Poly> gb = active();
  std::vector<Poly> minimal;
  for (std::size_t a = 0; a < gb.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < gb.size() && !redundant; ++b) {
      if (a == b) continue;
      if (gb[b].lead_monomial().divides(gb[a].lead_monomial()) &&
          (!(gb[a].lead_monomial() == gb[b].lead_monomial()) || b < a))
        redundant = true;
    }
    if (!redundant) minimal.push_back(gb[a]);
  }
  std::vector<Poly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Poly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(Reducer{ring, others}.reduce(minimal[a], true).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&ring](const Poly& a, const Poly& b) { return ring.greater(b.lead_monomial(), a.lead_monomial()); });
  return reduced;
}

std::vector<Poly> saturate(const std::vector<Poly>& gens, const Poly& h, const GroebnerLimits& limits) {
  if (gens.empty()) return {};
  const Ring r = gens[0].ring();
  if (h.is_constant()) return groebner_basis(gens, limits);
  std::vector<std::string> names{"_sat"};
  for (const auto& n : r.names()) names.push_back(n);
  Ring rt = Ring::make(names, MonomialOrder::Elim, 1);
  std::vector<int> map(r.nvars());
  for (int i = 0; i < r.nvars(); ++i) map[i] = i + 1;
  std::vector<Poly> g;
  for (const auto& p : gens) g.push_back(p.in_ring(rt, map));
  g.push_back(Poly::variable(rt, 0) * h.in_ring(rt, map) - Poly(rt, Scalar(1)));
  auto gb = groebner_basis(g, limits);
  std::vector<int> back(rt.nvars(), -1);
  for (int i = 0; i < r.nvars(); ++i) back[i + 1] = i;
  std::vector<Poly> out;
  for (const auto& p : gb)
    if (p.degree(0) <= 0) out.push_back(p.in_ring(r, back));
  return groebner_basis(out, limits);
}

}  // namespace surfiso
