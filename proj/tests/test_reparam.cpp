#include <doctest.h>

#include <algorithm>
#include <functional>

#include "surfiso/reparam.hpp"

using namespace surfiso;

namespace {

Parametrization param(Domain d, const std::vector<std::string>& text) {
  Ring r = domain_ring(d);
  Parametrization f;
  f.domain = d;
  for (const auto& t : text) f.components.push_back(parse_poly(t, r));
  return f;
}

RationalMap map_of(Space src, Space tgt, const std::vector<std::string>& text) {
  RationalMap m;
  m.source = src;
  m.target = tgt;
  Ring r = Ring::make(src.names());
  for (const auto& t : text) m.components.push_back(parse_poly(t, r));
  return m;
}

std::vector<std::string> texts(const RationalMap& m) {
  std::vector<std::string> out;
  for (const auto& c : m.components) out.push_back(c.to_string());
  return out;
}

// components equal up to one common scalar
bool proportional(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  std::optional<Scalar> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    Scalar r = a[i].lead_coefficient() / b[i].lead_coefficient();
    if (ratio && !(*ratio == r)) return false;
    ratio = r;
    if (a[i] != b[i] * r) return false;
  }
  return true;
}

Parametrization cone() { return param(Domain::P2, {"x0*x2", "x1^2", "x1*x2", "x2^2"}); }
Parametrization segre() { return param(Domain::P1xP1, {"y0*y2", "y0*y3", "y1*y2", "y1*y3"}); }

Parametrization octic() {
  return param(Domain::P2, {"x0^6*x1^2", "x0*x1^5*x2^2", "x1^3*x2^5", "x0^5*x1*x2^2+2*x0^5*x2^3"});
}

Parametrization quintic_pair() {
  return param(Domain::P1xP1, {"y0^3*y1^2*y2^5", "y0^3*y1^2*y2^5+y1^5*y2^3*y3^2", "y0^2*y1^3*y3^5",
                               "y0^4*y1*y2^3*y3^2+y0^5*y2^2*y3^3+y0^2*y1^3*y3^5"});
}

// brute force over all vectors with entries in [-bound, bound]
std::vector<DivisorClass> brute_line_classes(const ClassifiedMap& cm, int bound) {
  const int r = cm.tree.size();
  const bool p2 = cm.domain() == Domain::P2;
  std::vector<DivisorClass> out;
  std::vector<int> v(r + (p2 ? 1 : 2), -bound);
  while (true) {
    Degree deg = p2 ? Degree{v[0], 0} : Degree{v[0], v[1]};
    DivisorClass c(cm.domain(), deg, std::vector<int>(v.begin() + (p2 ? 1 : 2), v.end()));
    if (intersect(c, c) == 0 && intersect(cm.cls, c) == 1 && h0(cm, c) >= 1 && moving_part(cm, c).cls == c)
      out.push_back(c);
    std::size_t i = 0;
    while (i < v.size() && v[i] == bound) v[i++] = -bound;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

bool same_set(std::vector<DivisorClass> a, std::vector<DivisorClass> b) {
  auto key = [](const DivisorClass& c) { return c.to_string(); };
  auto less = [&](const DivisorClass& x, const DivisorClass& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace

TEST_CASE("identity families") {
  auto p2 = identity_family(Domain::P2);
  CHECK(p2.params.size() == 9);
  CHECK(p2.member.components[0].to_string() == "x0*c0 + x1*c1 + x2*c2");
  CHECK(p2.inequations.size() == 1);
  CHECK(p2.inequations[0].total_degree() == 3);
  auto q = identity_family(Domain::P1xP1);
  CHECK(q.params.size() == 8);
  CHECK(texts(q.member) == std::vector<std::string>{"y0*c0 + y1*c1", "y0*c2 + y1*c3", "y2*c4 + y3*c5", "y2*c6 + y3*c7"});
  CHECK(q.normalization.size() == 2);
  // specializing to the identity parameters
  Poly c0 = q.member.components[0];
  auto special = c0.evaluate({{q.variable(0), Scalar(1)}, {q.variable(1), Scalar(0)}});
  CHECK(special.to_string() == "y0");
}

TEST_CASE("birational inverses") {
  auto id = identity_map(Space::plane());
  CHECK(texts(birational_inverse(id)) == texts(id));
  auto pp = map_of(Space::plane(), Space::quadric(), {"x0", "x1", "x0", "x2"});
  auto inv = birational_inverse(pp);
  CHECK(inv.source == Space::quadric());
  CHECK(proportional(inv.components, map_of(Space::quadric(), Space::plane(), {"y0*y2", "y1*y2", "y0*y3"}).components));
  auto cremona = map_of(Space::plane(), Space::plane(), {"x1*x2", "x0*x2", "x0*x1"});
  auto ci = birational_inverse(cremona);
  CHECK(proportional(ci.components, map_of(Space::plane(), Space::plane(), {"x1*x2", "x0*x2", "x0*x1"}).components));
  auto cm = as_rational_map(cone());
  auto cinv = birational_inverse(cm);
  CHECK(cinv.source == Space::projective(3));
  CHECK(cinv.components.size() == 3);
  CHECK_THROWS_AS(birational_inverse(map_of(Space::plane(), Space::plane(), {"x0^2", "x1^2", "x2^2"})), InputError);
}

TEST_CASE("composition strips common factors") {
  auto cremona = map_of(Space::plane(), Space::plane(), {"x1*x2", "x0*x2", "x0*x1"});
  auto sq = compose(cremona, cremona);
  CHECK(texts(sq) == std::vector<std::string>{"x0", "x1", "x2"});
  auto raw = compose(cremona, cremona, false);
  CHECK(raw.components[0].total_degree() == 4);
}

TEST_CASE("line classes against brute force") {
  auto c = classify_map(cone());
  CHECK(c.cls.to_string() == "2*e0-e1-e2");
  REQUIRE(c.tree.points[1].parent == 0);
  auto lc = line_classes(c);
  REQUIRE(lc.size() == 1);
  CHECK(lc[0].to_string() == "e0-e1");
  CHECK(same_set(lc, brute_line_classes(c, 2)));
  auto s = classify_map(segre());
  auto ls = line_classes(s);
  CHECK(same_set(ls, brute_line_classes(s, 1)));
  REQUIRE(ls.size() == 2);
  CHECK(ls[0].to_string() == "l0");
  CHECK(ls[1].to_string() == "l1");
}

TEST_CASE("reparametrizations of the reduced octic and quintic pair") {
  auto res = reduce_pipeline(classify_map(octic()), classify_map(quintic_pair()));
  REQUIRE(res.tag == BaseCase::B2);
  const auto& f = *res.f;
  const auto& g = *res.g;
  auto ff = line_classes(f);
  REQUIRE(ff.size() == 2);
  CHECK(ff[0].to_string() == "e0-e1");
  CHECK(ff[1].to_string() == "e0-e2");
  auto fg = line_classes(g);
  REQUIRE(fg.size() == 2);
  CHECK(fg[0].to_string() == "l0");
  CHECK(fg[1].to_string() == "l1");
  CHECK(texts(pencil_pair_map(f, ff[0], ff[1])) == std::vector<std::string>{"x0", "x1", "x0", "x2"});
  CHECK(texts(pencil_pair_map(f, ff[1], ff[0])) == std::vector<std::string>{"x0", "x2", "x0", "x1"});
  CHECK(texts(pencil_pair_map(g, fg[0], fg[1])) == std::vector<std::string>{"y0", "y1", "y2", "y3"});
  CHECK_THROWS_AS(pencil_pair_map(f, ff[0], ff[0]), InputError);
  auto fams = superset_B2(f, g);
  REQUIRE(fams.size() == 2);
  CHECK(fams[0].label == "s_c");
  CHECK(texts(fams[0].member) ==
        std::vector<std::string>{"x0*c0 + x1*c1", "x0*c2 + x1*c3", "x0*c4 + x2*c5", "x0*c6 + x2*c7"});
  CHECK(texts(fams[1].member) ==
        std::vector<std::string>{"x0*c0 + x2*c1", "x0*c2 + x2*c3", "x0*c4 + x1*c5", "x0*c6 + x1*c7"});
}

TEST_CASE("plane base case family") {
  auto r = classify_map(param(Domain::P2, {"x0^2+x1^2+x2^2", "x0*x1", "x0*x2", "x1*x2"}));
  auto res = reduce_pipeline(r, r);
  REQUIRE(res.tag == BaseCase::B1);
  auto fams = superset_B1(*res.f, *res.g);
  REQUIRE(fams.size() == 1);
  CHECK(texts(fams[0].member) == texts(identity_family(Domain::P2).member));
  // conjugation by a fixed linear map gives the same set
  auto l = classify_map(param(Domain::P2, {"x0+x1", "x1", "x0+x2"}));
  auto fl = superset_B1(l, l);
  REQUIRE(fl.size() == 1);
  for (const auto& c : fl[0].member.components) CHECK(c.total_degree() == 2);
  CHECK_THROWS_AS(superset_B1(classify_map(cone()), classify_map(cone())), ContractError);
}

TEST_CASE("quadric cones") {
  auto c = classify_map(cone());
  auto n = normalize_cone(c);
  // quadric proportional to z1*z3 - z2^2
  CHECK(n.quadric(1, 3) == Scalar(mpq_class(1, 2)));
  CHECK(n.quadric(2, 2) == Scalar(-1));
  CHECK(n.quadric(0, 0).is_zero());
  ScalarMatrix lhs = n.to_cone.transpose() * standard_cone() * n.to_cone;
  std::optional<Scalar> mu;
  bool prop = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (n.quadric(i, j).is_zero()) {
        prop = prop && lhs(i, j).is_zero();
        continue;
      }
      Scalar r = lhs(i, j) / n.quadric(i, j);
      if (mu) prop = prop && (*mu == r);
      mu = r;
    }
  CHECK(prop);
  auto fams = superset_B2(c, c);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].label == "cone");
  CHECK(fams[0].params.size() == 17);
  CHECK(fams[0].equations.size() == 10);
  // smooth quadric against a cone
  auto s = classify_map(segre());
  CHECK(classify_base_case(s) == BaseCase::B2);
  CHECK(superset_B2(s, c).empty());
  CHECK(superset_B2(c, s).empty());
  auto ss = superset_B2(s, s);
  REQUIRE(ss.size() == 2);
  CHECK(texts(ss[0].member) == texts(identity_family(Domain::P1xP1).member));
  CHECK(texts(ss[1].member) == std::vector<std::string>{"y2*c0 + y3*c1", "y2*c2 + y3*c3", "y0*c4 + y1*c5", "y0*c6 + y1*c7"});
}
