#include <doctest.h>

#include "surfiso/applications.hpp"

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

ScalarMatrix matrix(const std::vector<std::vector<int>>& rows) {
  ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = Scalar(rows[i][j]);
  return m;
}

IsoFamily constant_family(const ScalarMatrix& u, const Ring& r) {
  IsoFamily iso;
  iso.U = to_poly_matrix(u, r);
  iso.constraints.ring = r;
  return iso;
}

ScalarMatrix value(const IsoFamily& iso) {
  ScalarMatrix m(iso.U.rows(), iso.U.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = iso.U(i, j).constant_value();
  return m;
}

}  // namespace

TEST_CASE("stereographic projection and lift") {
  AmbientStructure amb{3};
  auto id = compose(amb.projection(), amb.lift());
  REQUIRE(id.components.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(id.components[i] == Poly::variable(id.ring(), i) * Scalar(2));
  std::vector<Scalar> at;
  for (const auto& c : amb.lift().components) at.push_back(c.eval({Scalar(1), Scalar(0), Scalar(0), Scalar(0)}));
  CHECK(at == std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(-1)});
  CHECK(amb.sphere()(0, 0) == Scalar(-1));
  CHECK(amb.sphere()(4, 4) == Scalar(1));

  auto lifted = stereographic_lift(roman());
  REQUIRE(lifted.components.size() == 5);
  Poly q = -(lifted.components[0] * lifted.components[0]);
  for (int i = 1; i < 5; ++i) q += lifted.components[i] * lifted.components[i];
  CHECK(q.is_zero());
  CHECK(lifted.degree().d1 == 4);
}

TEST_CASE("affine and Euclidean filters") {
  auto f = classify_map(roman());
  auto rep = projective_isomorphisms(f, f);
  REQUIRE(rep.isomorphisms.size() == 24);
  auto affine = filter_affine(rep.isomorphisms);
  auto euclid = filter_euclidean(rep.isomorphisms);
  CHECK(affine.size() == 24);
  CHECK(euclid.size() == 24);
  // Euclidean solutions are affine solutions
  for (const auto& e : euclid) CHECK(!filter_affine(e).empty());

  Ring r = Ring::make({"x0", "x1", "x2", "c0"});
  CHECK(filter_affine(constant_family(matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}), r)).size() == 1);
  CHECK(filter_affine(constant_family(matrix({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), r)).empty());
  CHECK(filter_euclidean(constant_family(matrix({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}), r)).size() == 1);
  CHECK(filter_euclidean(constant_family(matrix({{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), r)).empty());

  // a one-parameter family: rotations by (1 - c0^2, 2 c0) / (1 + c0^2) together with a shear
  PolyMatrix u(3, 3);
  Poly c = Poly::variable(r, 3);
  Poly one(r, Scalar(1));
  u(0, 0) = one + c * c;
  u(1, 1) = one - c * c;
  u(1, 2) = -(c * Scalar(2));
  u(2, 1) = c * Scalar(2);
  u(2, 2) = one - c * c;
  u(0, 1) = Poly(r);
  u(0, 2) = Poly(r);
  u(1, 0) = Poly(r);
  u(2, 0) = Poly(r);
  IsoFamily rot;
  rot.U = u;
  rot.constraints.ring = r;
  auto er = filter_euclidean(rot);
  REQUIRE(er.size() == 1);
  CHECK(er[0].constraints.is_explicit());
  CHECK(er[0].constraints.free_variables().size() == 4);
  rot.U(1, 0) = c;
  rot.U(2, 1) = c;
  auto sheared = filter_euclidean(rot);
  for (const auto& s : sheared) CHECK(s.constraints.assigned(3));
}

TEST_CASE("Euclidean symmetries lift to Moebius symmetries") {
  auto f = classify_map(roman());
  auto euclid = filter_euclidean(projective_isomorphisms(f, f).isomorphisms);
  REQUIRE(euclid.size() == 24);
  auto lifted = stereographic_lift(roman());
  Ring r = lifted.ring();
  AmbientStructure amb{3};
  for (const auto& e : euclid) {
    ScalarMatrix l = moebius_lift(value(e));
    auto iso = constant_family(l, r);
    CHECK(filter_sphere(iso).size() == 1);
    CHECK(verify_isomorphism(lifted, lifted, iso));
  }
  // a projectivity that moves the sphere is excluded
  ScalarMatrix bad = identity_matrix(5);
  bad(0, 1) = Scalar(1);
  CHECK(filter_sphere(constant_family(bad, r)).empty());
  CHECK_THROWS_AS(moebius_lift(matrix({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})), InputError);
}

TEST_CASE("Moebius isomorphisms of the plane") {
  auto id = param(Domain::P2, {"x0", "x1", "x2"});
  auto rep = moebius_isomorphisms(id, id);
  CHECK(rep.lifted.pipeline.tag == BaseCase::B2);
  REQUIRE(!rep.isomorphisms.empty());
  bool identity = false;
  for (const auto& m : rep.isomorphisms) {
    if (admits_specialization(m.rho, identity_matrix(4))) identity = true;
    CHECK(m.alpha.components.size() == 3);
    for (const auto& c : m.alpha.components)
      for (const auto& t : c.terms()) CHECK(t.m[0] + t.m[1] + t.m[2] <= 2);
  }
  CHECK(identity);
}
