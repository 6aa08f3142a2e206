#include <doctest.h>

#include <random>

#include "surfiso/algebra/factor.hpp"
#include "surfiso/algebra/field.hpp"

using namespace surfiso;

namespace {

QPoly q(std::initializer_list<long> c) {
  QPoly r;
  for (long v : c) r.emplace_back(v);
  return r;
}

QPoly product_of(const std::vector<std::pair<QPoly, int>>& fs) {
  QPoly r{1};
  for (const auto& [f, m] : fs)
    for (int i = 0; i < m; ++i) r = qpoly_mul(r, f);
  return r;
}

QPoly monic(QPoly p) {
  mpq_class lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

}  // namespace

TEST_CASE("field arithmetic identities in Q(a)") {
  GroundField k = GroundField::extension("a", {mpq_class(-2), mpq_class(0), mpq_class(0), mpq_class(1)});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int it = 0; it < 50; ++it) {
    std::vector<mpq_class> ca, cb;
    for (int i = 0; i < 3; ++i) {
      ca.emplace_back(d(rng), 1 + (d(rng) + 9) % 4);
      cb.emplace_back(d(rng), 1 + (d(rng) + 9) % 5);
    }
    Scalar a = Scalar::from_coefficients(k, ca);
    Scalar b = Scalar::from_coefficients(k, cb);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
  Scalar al = Scalar::generator(k);
  CHECK(al * al * al == Scalar(2));
  CHECK(al.norm() == 2);
}

TEST_CASE("extension rejects reducible minimal polynomials") {
  CHECK_THROWS_AS(GroundField::extension("a", {mpq_class(-1), mpq_class(0), mpq_class(1)}), InputError);
  CHECK_NOTHROW(GroundField::extension("i", {mpq_class(1), mpq_class(0), mpq_class(1)}));
}

TEST_CASE("rational factorization recombines to the input") {
  std::vector<QPoly> cases = {
      q({1, 0, -10, 0, 1}),                 // irreducible quartic with many modular factors
      qpoly_mul(q({-1, 0, 1}), q({2, 0, 1})),
      qpoly_mul(qpoly_mul(q({1, 1}), q({1, 1})), q({-3, 0, 0, 1})),
      qpoly_mul(q({1, 0, 1, 0, 1}), q({5, 1, 0, 0, 0, 0, 1})),
      q({0, 0, 4, -4}),
  };
  for (const auto& c : cases) {
    auto fs = factor_rational(c);
    CHECK(product_of(fs) == monic(c));
    for (const auto& [f, m] : fs) {
      CHECK(f.back() == 1);
      // each factor is irreducible: it has no proper factorization itself
      CHECK(factor_rational(f).size() == 1);
    }
  }
  CHECK(factor_rational(cases[0]).size() == 1);
  CHECK(factor_rational(cases[1]).size() == 3);
  CHECK(factor_rational(cases[3]).size() == 3);  // x^4+x^2+1 = (x^2+x+1)(x^2-x+1)
}

TEST_CASE("factorization over Q(i) and Q(w)") {
  GroundField ki = GroundField::extension("i", {mpq_class(1), mpq_class(0), mpq_class(1)});
  UPoly x2p1(std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(1)});
  auto rs = roots(x2p1, ki);
  REQUIRE(rs.size() == 2);
  for (auto& [r, m] : rs) CHECK(r * r == Scalar(-1));

  // w^4 - w^2 + 1: the 12th cyclotomic field contains i and sqrt(-3)
  GroundField kw = GroundField::extension("w", {mpq_class(1), mpq_class(0), mpq_class(-1), mpq_class(0), mpq_class(1)});
  UPoly x2p3(std::vector<Scalar>{Scalar(3), Scalar(0), Scalar(1)});
  auto rw = roots(x2p3, kw);
  REQUIRE(rw.size() == 2);
  for (auto& [r, m] : rw) CHECK(r * r == Scalar(-3));
  // x^2 - 2 stays irreducible over Q(w)
  UPoly x2m2(std::vector<Scalar>{Scalar(-2), Scalar(0), Scalar(1)});
  std::vector<UPoly> rest;
  CHECK(roots(x2m2, kw, &rest).empty());
  CHECK(rest.size() == 1);
  // product check over K
  Scalar w = Scalar::generator(kw);
  UPoly p = UPoly(std::vector<Scalar>{w, Scalar(1)}) * UPoly(std::vector<Scalar>{w * w, Scalar(0), Scalar(1)}) *
            UPoly(std::vector<Scalar>{w, Scalar(1)});
  auto fs = factor(p, kw);
  UPoly back = UPoly::constant(Scalar(1));
  for (auto& [f, m] : fs)
    for (int i = 0; i < m; ++i) back = back * f;
  CHECK(back == p.monic());
}
