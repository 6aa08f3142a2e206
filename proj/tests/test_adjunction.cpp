#include <doctest.h>

#include <random>

#include "surfiso/adjunction.hpp"

using namespace surfiso;

namespace {

Parametrization param(Domain d, const std::vector<std::string>& text, const GroundField& k = {}) {
  Ring r = domain_ring(d);
  Parametrization f;
  f.domain = d;
  for (const auto& t : text) f.components.push_back(parse_poly(t, r, k));
  return f;
}

Parametrization roman() { return param(Domain::P2, {"x0^2+x1^2+x2^2", "x0*x1", "x0*x2", "x1*x2"}); }

Parametrization octic() {
  return param(Domain::P2, {"x0^6*x1^2", "x0*x1^5*x2^2", "x1^3*x2^5", "x0^5*x1*x2^2+2*x0^5*x2^3"});
}

Parametrization quintic_pair() {
  return param(Domain::P1xP1, {"y0^3*y1^2*y2^5", "y0^3*y1^2*y2^5+y1^5*y2^3*y3^2", "y0^2*y1^3*y3^5",
                               "y0^4*y1*y2^3*y3^2+y0^5*y2^2*y3^3+y0^2*y1^3*y3^5"});
}

Parametrization cubic() { return param(Domain::P2, {"x1^3-x1^2*x0", "x1^2*x2", "x1*x2^2", "x1*x2*x0+x2^3-x2^2*x0"}); }

// complete series of 8e0-5e1-3e2-3e3 at the coordinate points (1:0:0), (0:1:0), (0:0:1)
Parametrization octic_b4() {
  BasePointTree t;
  t.domain = Domain::P2;
  for (int i = 0; i < 3; ++i) {
    BasePoint p;
    p.coordinates.assign(3, Scalar(0));
    p.coordinates[i] = Scalar(1);
    p.multiplicity = i == 0 ? 5 : 3;
    t.points.push_back(p);
  }
  Parametrization f;
  f.domain = Domain::P2;
  f.components = set_linear_series(t, {8, 0}, {5, 3, 3});
  return f;
}

Parametrization transform(const Parametrization& f, const ScalarMatrix& t) {
  Parametrization g = f;
  for (int i = 0; i < t.rows(); ++i) {
    Poly s(f.ring());
    for (int j = 0; j < t.cols(); ++j) s += f.components[j] * t(i, j);
    g.components[i] = s;
  }
  return g;
}

ScalarMatrix random_invertible(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Scalar(d(rng));
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace

TEST_CASE("class and complete series of a cubic map") {
  auto cm = classify_map(cubic());
  CHECK(cm.cls.to_string() == "3*e0-2*e1-e2-e3");
  CHECK(intersect(cm.cls, cm.cls) == 3);
  CHECK(h0(cm, cm.cls) == 5);
  CHECK(condition_c0(cm));
  auto r = reduce_r0(cm);
  CHECK(r.map.components.size() == 5);
  CHECK(r.cls == cm.cls);
  CHECK(!condition_c0(r));
}

TEST_CASE("Roman surface reduces to the plane") {
  auto cm = classify_map(roman());
  CHECK(cm.cls.to_string() == "2*e0");
  CHECK(p_invariant(cm) == PTriple{6, 4, 2});
  CHECK(condition_c0(cm));
  auto v = reduce_r0(cm);
  CHECK(v.dim() == 5);
  CHECK(h0(v, v.cls + v.canonical) == 0);
  CHECK(!condition_c1(v));
  CHECK(condition_c2(v));
  auto id = reduce_r2(v);
  CHECK(id.dim() == 2);
  CHECK(id.cls.to_string() == "e0");
  CHECK(id.map.degree().d1 == 1);
  CHECK(classify_base_case(id) == BaseCase::B1);

  auto res = reduce_pipeline(cm, cm);
  CHECK(!res.empty);
  CHECK(res.tag == BaseCase::B1);
  REQUIRE(res.log.size() == 6);
  CHECK(res.log[2].step == "r0");
  CHECK(res.log[4].step == "r2");
}

TEST_CASE("line-covered octic reaches a fibration case") {
  auto cm = classify_map(octic_b4());
  CHECK(cm.cls.to_string() == "8*e0-5*e1-3*e2-3*e3");
  CHECK(h0(cm, cm.cls) == 18);
  DivisorClass u = cm.cls + cm.canonical;
  CHECK(u.to_string() == "5*e0-4*e1-2*e2-2*e3");
  auto mu = moving_part(cm, u);
  CHECK(mu.cls.to_string() == "3*e0-2*e1-e2-e3");
  CHECK(mu.fixed.total_degree() == 2);
  CHECK(condition_c1(cm));
  auto r = reduce_r1(cm);
  CHECK(r.cdeg().d1 == 3);
  CHECK(!condition_c0(r));
  CHECK(!condition_c1(r));
  CHECK(!condition_c2(r));
  CHECK((r.cls + r.canonical).to_string() == "-e1");
  DivisorClass v = 2 * r.cls + r.canonical;
  CHECK(v.to_string() == "3*e0-3*e1-e2-e3");
  CHECK(moving_part(r, v).cls.to_string() == "e0-e1");
  CHECK(classify_base_case(r) == BaseCase::B4);
}

TEST_CASE("reduction chain of the octic and the bidegree (5,5) map") {
  auto f = classify_map(octic());
  auto g = classify_map(quintic_pair());
  CHECK(p_invariant(f) == PTriple{16, 26, 1});
  CHECK(p_invariant(g) == PTriple{16, 26, 1});
  CHECK(h0(f, f.cls + f.canonical) == 12);
  auto res = reduce_pipeline(f, g);
  REQUIRE(!res.empty);
  CHECK(res.tag == BaseCase::B2);
  std::vector<std::string> chain;
  for (const auto& e : res.log)
    if (e.side == "f") chain.push_back(e.p.to_string());
  CHECK(chain == std::vector<std::string>{"(16,26,1)", "(16,26,1)", "(12,14,1)", "(4,2,1)"});
  REQUIRE(res.log.size() == 8);
  CHECK(res.log[2].step == "r0");
  CHECK(res.log[4].cls.to_string() == "5*e0-2*e1-2*e2-e3-e4-e5");
  CHECK(res.log[5].cls.to_string() == "3*l0+3*l1-eps1-eps2-eps3-eps4");
  CHECK(res.log[6].cls.to_string() == "2*e0-e1-e2");
  CHECK(res.log[7].cls.to_string() == "l0+l1");
  CHECK(res.log[7].step == "r1");
  CHECK(res.f->cdeg().d1 == 2);
  CHECK(res.g->cdeg().d1 == 1);
  CHECK(res.g->cdeg().d2 == 1);
}

TEST_CASE("pipeline rejects different invariants before reducing") {
  auto f = classify_map(octic());
  auto r = classify_map(roman());
  auto res = reduce_pipeline(f, r);
  CHECK(res.empty);
  CHECK(res.log.size() == 2);
  CHECK(res.reason == "p(f) != p(g)");
}

TEST_CASE("invariants under projectivities") {
  std::mt19937 rng(7);
  for (auto make : {roman, cubic}) {
    auto f = make();
    auto base = classify_map(f);
    for (int k = 0; k < 3; ++k) {
      auto t = random_invertible(static_cast<int>(f.components.size()), rng);
      auto g = classify_map(transform(f, t));
      CHECK(p_invariant(g) == p_invariant(base));
      CHECK(condition_c0(g) == condition_c0(base));
      CHECK(condition_c1(g) == condition_c1(base));
    }
  }
}

TEST_CASE("moving part is idempotent and h0 conventions") {
  auto cm = classify_map(octic_b4());
  for (const auto& c : {cm.cls, cm.cls + cm.canonical, 2 * cm.cls + cm.canonical}) {
    auto m = moving_part(cm, c).cls;
    CHECK(moving_part(cm, m).cls == m);
  }
  CHECK(h0(cm, cm.canonical) == 0);
  CHECK_THROWS_AS(moving_part(cm, cm.canonical), ContractError);
  CHECK_THROWS_AS(reduce_r2(cm), ContractError);
  CHECK_THROWS_AS(classify_base_case(cm), ContractError);
  CHECK_THROWS_AS(h0(cm, DivisorClass::zero(Domain::P2, 1)), InputError);
  CHECK_THROWS_AS(classify_map(param(Domain::P2, {"x0", "x1", "x0+x1"})), InputError);
  auto g = classify_map(param(Domain::P2, {"x0^4", "x1^4", "x2^4", "x0^2*x1^2", "x0*x1*x2^2"}));
  CHECK(condition_c2(g));
  auto empty = classify_map(param(Domain::P2, {"x0^2", "x1^2", "x2^2", "x0*x1", "x0*x2", "x1*x2"}));
  auto half = reduce_r2(empty);
  CHECK(half.cls.to_string() == "e0");
}
