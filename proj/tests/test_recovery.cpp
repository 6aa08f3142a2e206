#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "surfiso/recovery.hpp"

using namespace surfiso;

namespace {

Parametrization param(Domain d, const std::vector<std::string>& text) {
  Ring r = domain_ring(d);
  Parametrization f;
  f.domain = d;
  for (const auto& t : text) f.components.push_back(parse_poly(t, r));
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

// parameter vector of an explicit branch, scaled so the first nonzero entry is 1
std::vector<Scalar> point(const Branch& b, const ReparamFamily& fam) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < fam.params.size(); ++i) {
    Poly v = b.apply(Poly::variable(b.ring, fam.variable(static_cast<int>(i))));
    REQUIRE(v.is_constant());
    out.push_back(v.constant_value());
  }
  return out;
}

std::string key(std::vector<Scalar> c) {
  Scalar lead;
  for (const auto& x : c)
    if (!x.is_zero()) {
      lead = x;
      break;
    }
  std::string s;
  for (auto& x : c) s += (x / lead).to_string() + ",";
  return s;
}

// the listed rows and their column interchanges
std::set<std::string> roman_oracle() {
  std::vector<std::vector<int>> rows;
  for (int s : {1, -1}) {
    rows.push_back({0, s, 0, 1, 0, 0, 0, 0, 1});
    rows.push_back({0, s, 0, -1, 0, 0, 0, 0, 1});
    rows.push_back({0, s, 0, 0, 0, 1, 1, 0, 0});
    rows.push_back({0, s, 0, 0, 0, -1, 1, 0, 0});
  }
  std::set<std::string> out;
  for (auto r : rows) {
    auto add = [&](const std::vector<int>& v) {
      std::vector<Scalar> c;
      for (int x : v) c.push_back(Scalar(x));
      out.insert(key(c));
    };
    add(r);
    auto a = r;
    for (int i : {0, 3, 6}) std::swap(a[i], a[i + 1]);
    add(a);
    auto b = r;
    for (int i : {1, 4, 7}) std::swap(b[i], b[i + 1]);
    add(b);
  }
  return out;
}

PolyMatrix constant_matrix(const Ring& r, const std::vector<std::vector<int>>& rows) {
  PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = Poly(r, Scalar(rows[i][j]));
  return m;
}

}  // namespace

TEST_CASE("Roman surface index set and isomorphisms") {
  auto f = classify_map(roman());
  auto rep = projective_isomorphisms(f, f);
  REQUIRE(rep.pipeline.tag == BaseCase::B1);
  REQUIRE(rep.families.size() == 1);
  const auto& fam = rep.families[0];
  const auto& sols = rep.solutions[0];
  CHECK(sols.branches.size() == 24);
  std::set<std::string> found;
  for (const auto& b : sols.branches) found.insert(key(point(b, fam)));
  CHECK(found == roman_oracle());
  REQUIRE(rep.isomorphisms.size() == 24);

  const Ring& r = rep.isomorphisms[0].U(0, 0).ring();
  bool swap_found = false;
  bool identity_found = false;
  for (const auto& iso : rep.isomorphisms) {
    CHECK(iso.is_constant());
    CHECK(matrix_identity_holds(iso));
    CHECK(verify_isomorphism(f, f, iso));
    auto c = point(iso.constraints, fam);
    if (key(c) == "0,1,0,1,0,0,0,0,1,")
      swap_found = iso.U == constant_matrix(r, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    if (key(c) == "1,0,0,0,1,0,0,0,1,")
      identity_found = iso.U == constant_matrix(r, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  }
  CHECK(swap_found);
  CHECK(identity_found);

  // a perturbed matrix fails both checks
  auto bad = rep.isomorphisms[0];
  bad.U(1, 2) += Poly(r, Scalar(1));
  CHECK(!verify_isomorphism(f, f, bad));
  CHECK(!matrix_identity_holds(bad));
  VerifyOptions no_forms;
  no_forms.degree_budget = 0;
  CHECK(!verify_isomorphism(f, f, bad, no_forms));
  CHECK(verify_isomorphism(f, f, rep.isomorphisms[0], no_forms));
}

TEST_CASE("canonical scaling") {
  Ring r = Ring::make({"c0", "c1"});
  PolyMatrix u(2, 2);
  u(0, 0) = parse_poly("2*c0*c1", r);
  u(0, 1) = Poly(r);
  u(1, 0) = parse_poly("4*c0^2*c1", r);
  u(1, 1) = parse_poly("6*c1", r);
  auto s = canonical_scaling(u);
  CHECK(s(0, 0).to_string() == "c0");
  CHECK(s(1, 0).to_string() == "2*c0^2");
  CHECK(s(1, 1).to_string() == "3");
  CHECK(canonical_scaling(s) == s);
}

TEST_CASE("octic and bidegree (5,5) map") {
  auto f = classify_map(octic());
  auto g = classify_map(quintic_pair());
  auto rep = projective_isomorphisms(f, g);
  REQUIRE(rep.pipeline.tag == BaseCase::B2);
  REQUIRE(rep.families.size() == 2);
  const auto& s = rep.solutions[0];
  const auto& t = rep.solutions[1];
  CHECK(rep.families[0].label == "s_c");
  // the two families of the degree-reduced index set
  REQUIRE(s.stage2.size() == 2);
  CHECK(s.stage2[0].to_string() == "c0 = 1, c1 = 0, c2 = 0, c4 = 1, c5 = 0, c6 = 0, c3 != 0, c7 != 0");
  CHECK(s.stage2[1].to_string() == "c0 = 0, c1 = 1, c3 = 0, c4 = 0, c5 = 1, c7 = 0, c2 != 0, c6 != 0");
  for (const auto& b : s.stage2) {
    auto h = reduced_composition(g, rep.families[0], b);
    CHECK(h.degree() == f.cdeg());
  }
  REQUIRE(s.branches.size() == 1);
  CHECK(s.branches[0].to_string() == "c0 = 1, c1 = 0, c2 = 0, c4 = 1, c5 = 0, c6 = 0, c7 = 2*c3, c3 != 0");
  CHECK(t.branches.empty());
  REQUIRE(rep.isomorphisms.size() == 1);
  const auto& iso = rep.isomorphisms[0];
  CHECK(iso.provenance == "s_c");
  CHECK(!iso.is_constant());
  const Ring& r = iso.U(0, 0).ring();
  const char* expected[4][4] = {{"1", "0", "0", "0"},
                                {"1", "4*c3^5", "0", "0"},
                                {"0", "0", "32*c3^6", "0"},
                                {"0", "0", "32*c3^6", "4*c3"}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(iso.U(i, j) == parse_poly(expected[i][j], r));
  CHECK(verify_isomorphism(f, g, iso));
  auto bad = iso;
  bad.U(3, 2) = parse_poly("32*c3^6+1", r);
  CHECK(!verify_isomorphism(f, g, bad));
  // a specialization c3 = 1 maps img f into img g at the level of forms
  auto special = iso;
  special.constraints.assignments.emplace_back(r.index("c3"), Poly(r, Scalar(1)));
  std::sort(special.constraints.assignments.begin(), special.constraints.assignments.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  special.constraints.inequations.clear();
  CHECK(verify_isomorphism(f, g, special));
}

namespace {

Parametrization transform(const Parametrization& f, const ScalarMatrix& t) {
  Parametrization g = f;
  for (int i = 0; i < t.rows(); ++i) {
    Poly s(f.ring());
    for (int j = 0; j < t.cols(); ++j) s += f.components[j] * t(i, j);
    g.components[i] = s;
  }
  return g;
}

bool admits(const std::vector<IsoFamily>& isos, const ScalarMatrix& t) {
  for (const auto& iso : isos)
    if (admits_specialization(iso, t)) return true;
  return false;
}

}  // namespace

TEST_CASE("projectivities are recovered") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-2, 2);
  auto random_t = [&] {
    while (true) {
      ScalarMatrix m(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = Scalar(d(rng));
      if (!determinant(m).is_zero()) return m;
    }
  };
  auto segre = param(Domain::P1xP1, {"y0*y2", "y0*y3", "y1*y2", "y1*y3"});
  auto conics = param(Domain::P2, {"x2^2", "x0*x2", "x1*x2", "x0*x1"});
  auto cone = param(Domain::P2, {"x0*x2", "x1^2", "x1*x2", "x2^2"});
  for (const auto& f0 : {roman(), segre, conics, cone}) {
    auto f = classify_map(f0);
    for (int k = 0; k < 2; ++k) {
      auto t = random_t();
      auto g = classify_map(transform(f0, t));
      auto rep = projective_isomorphisms(f, g);
      for (const auto& iso : rep.isomorphisms) CHECK(verify_isomorphism(f, g, iso));
      bool ok = admits(rep.isomorphisms, t);
      CHECK(ok);
      if (!ok)
        for (int i = 0; i < 4; ++i) MESSAGE(t(i, 0).to_string() << " " << t(i, 1).to_string() << " " << t(i, 2).to_string() << " " << t(i, 3).to_string());
    }
  }
}
