#include "surfiso/adjunction.hpp"

#include <algorithm>

namespace surfiso {

namespace {

Degree degree_of(const Poly& p, Domain d) {
  if (p.is_constant()) return {0, 0};
  return form_degree(p, d);
}

std::vector<int> clamped(const std::vector<int>& m) {
  std::vector<int> out(m);
  for (auto& v : out) v = std::max(v, 0);
  return out;
}

bool positive_degree(const DivisorClass& c) {
  if (c.domain == Domain::P2) return c.degree.d1 > 0;
  return c.degree.d1 >= 0 && c.degree.d2 >= 0 && c.degree.d1 + c.degree.d2 > 0;
}

void check_lattice(const ClassifiedMap& cm, const DivisorClass& c) {
  if (c.domain != cm.domain() || c.rank() != cm.tree.size())
    throw InputError("class " + c.to_string() + " is not indexed against this map's base points");
}

ClassifiedMap from_moving_part(const ClassifiedMap& cm, const MovingPart& mp) {
  ClassifiedMap out;
  out.map = mp.psi;
  out.tree = cm.tree;
  out.cls = mp.cls;
  out.canonical = cm.canonical;
  return out;
}

}  // namespace

std::string PTriple::to_string() const {
  return "(" + std::to_string(h0) + "," + std::to_string(self) + "," + std::to_string(gcd) + ")";
}

std::string to_string(BaseCase b) {
  switch (b) {
    case BaseCase::B1: return "B1";
    case BaseCase::B2: return "B2";
    case BaseCase::B3: return "B3";
    case BaseCase::B4: return "B4";
    case BaseCase::B5: return "B5";
    case BaseCase::None: break;
  }
  return "none";
}

ClassifiedMap classify_map(const Parametrization& f, const GroundField& field) {
  f.validate();
  for (const auto& c : f.components) {
    auto s = c.support();
    if (!s.empty() && s.back() >= coordinate_count(f.domain)) throw InputError("map has symbolic coefficients");
  }
  if (rank(coefficient_matrix(f)) != static_cast<int>(f.components.size()))
    throw InputError("image lies in a hyperplane (components are linearly dependent)");
  ClassifiedMap cm;
  cm.map = f;
  cm.tree = get_base_points(f.components, f.domain, GroundField::join(field, f.field()));
  cm.cls = cm.tree.divisor_class(f.degree());
  cm.canonical = canonical_class(f.domain, cm.tree.size());
  return cm;
}

int h0(const ClassifiedMap& cm, const DivisorClass& c) {
  check_lattice(cm, c);
  if (!positive_degree(c)) return 0;
  return static_cast<int>(set_linear_series(cm.tree, c.degree, clamped(c.mults), cm.map.ring()).size());
}

MovingPart moving_part(const ClassifiedMap& cm, const DivisorClass& c) {
  check_lattice(cm, c);
  if (!positive_degree(c)) throw ContractError("empty series for " + c.to_string());
  auto basis = set_linear_series(cm.tree, c.degree, clamped(c.mults), domain_ring(cm.domain()));
  if (basis.empty()) throw ContractError("empty series for " + c.to_string());
  MovingPart mp;
  mp.fixed = form_gcd(basis, cm.domain());
  mp.psi.domain = cm.domain();
  for (const auto& b : basis) mp.psi.components.push_back(mp.fixed.is_constant() ? b : *divide_exact(b, mp.fixed));
  Degree fd = degree_of(mp.fixed, cm.domain());
  Degree md{c.degree.d1 - fd.d1, c.degree.d2 - fd.d2};
  mp.cls = DivisorClass(cm.domain(), md, tree_multiplicities(cm.tree, mp.psi.components));
  return mp;
}

PTriple p_invariant(const ClassifiedMap& cm) {
  return {h0(cm, cm.cls), intersect(cm.cls, cm.cls), class_gcd(cm.cls)};
}

bool condition_c0(const ClassifiedMap& cm) { return cm.dim() < h0(cm, cm.cls) - 1; }

bool condition_c1(const ClassifiedMap& cm) {
  DivisorClass c = cm.cls + cm.canonical;
  if (h0(cm, c) <= 1) return false;
  DivisorClass mc = moving_part(cm, c).cls;
  int ff = intersect(cm.cls, cm.cls), mm = intersect(mc, mc), cm2 = intersect(c, mc);
  return !(ff > mm && mm == cm2 && cm2 == 0);
}

bool condition_c2(const ClassifiedMap& cm) { return class_gcd(cm.cls) > 1; }

ClassifiedMap reduce_r0(const ClassifiedMap& cm) {
  if (!condition_c0(cm)) throw ContractError("r0 requires dim f < h0([f]) - 1");
  auto mp = moving_part(cm, cm.cls);
  if (mp.cls != cm.cls) throw ConsistencyError("complete series of [f] changed the class");
  return from_moving_part(cm, mp);
}

ClassifiedMap reduce_r1(const ClassifiedMap& cm) {
  if (!condition_c1(cm)) throw ContractError("r1 requires condition c1");
  auto mp = moving_part(cm, cm.cls + cm.canonical);
  Degree before = cm.cdeg(), after = mp.psi.degree(), fixed = degree_of(mp.fixed, cm.domain());
  Degree drop = cm.domain() == Domain::P2 ? Degree{3, 0} : Degree{2, 2};
  if (after.d1 != before.d1 - drop.d1 - fixed.d1 || after.d2 != before.d2 - drop.d2 - fixed.d2)
    throw ConsistencyError("adjunction did not lower the component degree as expected");
  return from_moving_part(cm, mp);
}

ClassifiedMap reduce_r2(const ClassifiedMap& cm) {
  if (!condition_c2(cm)) throw ContractError("r2 requires gcd [f] > 1");
  auto mp = moving_part(cm, divide(cm.cls, class_gcd(cm.cls)));
  return from_moving_part(cm, mp);
}

BaseCase classify_base_case(const ClassifiedMap& cm) {
  if (condition_c0(cm) || condition_c1(cm) || condition_c2(cm))
    throw ContractError("base case classification requires c0 = c1 = c2 = 0");
  const int s = intersect(cm.cls, cm.cls), h = h0(cm, cm.cls);
  if (s == 0) return BaseCase::None;
  if (h == 3 && s == 1) return BaseCase::B1;
  if (h == 4 && s == 2) return BaseCase::B2;
  if (h == s + 1 && 1 <= s && s <= 8) return BaseCase::B3;
  auto fibration = [&](const DivisorClass& c) {
    if (h0(cm, c) < 2) return false;
    auto mc = moving_part(cm, c).cls;
    return intersect(mc, mc) == 0;
  };
  if (fibration(2 * cm.cls + cm.canonical)) return BaseCase::B4;
  if (fibration(cm.cls + cm.canonical)) return BaseCase::B5;
  return BaseCase::None;
}

PipelineResult reduce_pipeline(const ClassifiedMap& f, const ClassifiedMap& g) {
  PipelineResult res;
  ClassifiedMap fh = f, gh = g;
  auto record = [&](const std::string& step, const Poly* ffix, const Poly* gfix) {
    for (int s = 0; s < 2; ++s) {
      const ClassifiedMap& m = s ? gh : fh;
      LogEntry e;
      e.step = step;
      e.side = s ? "g" : "f";
      e.cls = m.cls;
      e.p = p_invariant(m);
      e.flags = {condition_c0(m), condition_c1(m), condition_c2(m)};
      const Poly* fix = s ? gfix : ffix;
      if (fix && !fix->is_constant()) e.fixed_degree = fix->total_degree();
      res.log.push_back(e);
    }
  };
  auto fail = [&](const std::string& why) {
    res.empty = true;
    res.reason = why;
    return res;
  };
  record("input", nullptr, nullptr);
  auto last = [&](int side) -> const LogEntry& { return res.log[res.log.size() - 2 + side]; };
  if (last(0).p != last(1).p) return fail("p(f) != p(g)");

  auto flags_differ = [&](int k) { return last(0).flags[k] != last(1).flags[k]; };
  if (flags_differ(0)) return fail("c0(f) != c0(g)");
  if (last(0).flags[0]) {
    fh = reduce_r0(fh);
    gh = reduce_r0(gh);
    record("r0", nullptr, nullptr);
  }
  while (true) {
    if (flags_differ(1)) return fail("c1(f) != c1(g)");
    if (!last(0).flags[1]) break;
    auto fm = moving_part(fh, fh.cls + fh.canonical), gm = moving_part(gh, gh.cls + gh.canonical);
    fh = reduce_r1(fh);
    gh = reduce_r1(gh);
    record("r1", &fm.fixed, &gm.fixed);
  }
  if (flags_differ(2)) return fail("c2(f) != c2(g)");
  if (last(0).flags[2]) {
    fh = reduce_r2(fh);
    gh = reduce_r2(gh);
    record("r2", nullptr, nullptr);
  }
  if (last(0).p != last(1).p) return fail("p(f^) != p(g^)");
  res.f = fh;
  res.g = gh;
  BaseCase bf = BaseCase::None, bg = BaseCase::None;
  if (!last(0).flags[0] && !last(0).flags[1] && !last(0).flags[2]) bf = classify_base_case(fh);
  if (!last(1).flags[0] && !last(1).flags[1] && !last(1).flags[2]) bg = classify_base_case(gh);
  if (bf != bg) return fail("base cases differ");
  res.tag = bf;
  if (bf == BaseCase::None) return fail("no base case applies");
  return res;
}

}  // namespace surfiso
