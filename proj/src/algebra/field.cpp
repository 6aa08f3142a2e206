#include "surfiso/algebra/field.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "surfiso/algebra/factor.hpp"

namespace surfiso {

struct FieldData {
  std::string gen;
  QPoly minpoly;                            // monic, degree k
  std::vector<std::vector<mpq_class>> red;  // red[j] = a^(k+j) expressed in the basis 1..a^(k-1)
  int k = 1;
};

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::unique_ptr<FieldData>>& registry() {
  static std::vector<std::unique_ptr<FieldData>> r;
  return r;
}

}  // namespace

void qpoly_trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qpoly_trim(r);
  return r;
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  qpoly_trim(r);
  QPoly bb = b;
  qpoly_trim(bb);
  if (bb.empty()) throw std::domain_error("polynomial division by zero");
  if (r.size() < bb.size()) return {{}, r};
  QPoly q(r.size() - bb.size() + 1);
  const mpq_class lc = bb.back();
  for (std::size_t i = r.size(); i-- >= bb.size();) {
    if (sgn(r[i]) == 0) continue;
    mpq_class f = r[i] / lc;
    q[i - (bb.size() - 1)] = f;
    for (std::size_t j = 0; j < bb.size(); ++j) r[i - (bb.size() - 1) + j] -= f * bb[j];
  }
  qpoly_trim(q);
  qpoly_trim(r);
  return {q, r};
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  qpoly_trim(a);
  qpoly_trim(b);
  while (!b.empty()) {
    auto r = qpoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (sgn(p[i]) == 0) continue;
    mpq_class c = p[i];
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// s with s*a == 1 mod m, by the extended Euclidean algorithm.
QPoly qpoly_invert_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = a;
  QPoly s0, s1{mpq_class(1)};
  qpoly_trim(r1);
  while (!r1.empty() && r1.size() > 1) {
    auto [q, r] = qpoly_divmod(r0, r1);
    QPoly qs = qpoly_mul(q, s1);
    QPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    qpoly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::domain_error("element is not invertible");
  mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return s1;
}

}  // namespace

GroundField GroundField::extension(const std::string& generator, std::vector<mpq_class> minpoly) {
  qpoly_trim(minpoly);
  if (minpoly.size() < 2) throw InputError("minimal polynomial must have positive degree");
  if (generator.empty()) throw InputError("generator name must be nonempty");
  mpq_class lc = minpoly.back();
  for (auto& c : minpoly) c /= lc;
  if (minpoly.size() == 2) return rationals();
  auto factors = factor_rational(minpoly);
  if (factors.size() != 1 || factors[0].second != 1)
    throw InputError("minimal polynomial " + qpoly_to_string(minpoly, generator) + " is reducible over Q");

  std::lock_guard<std::mutex> lock(registry_mutex());
  for (const auto& d : registry())
    if (d->gen == generator && d->minpoly == minpoly) return GroundField(d.get());
  auto d = std::make_unique<FieldData>();
  d->gen = generator;
  d->minpoly = minpoly;
  d->k = static_cast<int>(minpoly.size()) - 1;
  // a^k = -(m_0 + ... + m_{k-1} a^{k-1})
  std::vector<mpq_class> cur(d->k);
  for (int i = 0; i < d->k; ++i) cur[i] = -minpoly[i];
  for (int j = 0; j < d->k - 1; ++j) {
    d->red.push_back(cur);
    // multiply by a
    std::vector<mpq_class> nxt(d->k);
    mpq_class top = cur[d->k - 1];
    for (int i = d->k - 1; i > 0; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    for (int i = 0; i < d->k; ++i) nxt[i] -= top * minpoly[i];
    cur = std::move(nxt);
  }
  registry().push_back(std::move(d));
  return GroundField(registry().back().get());
}

int GroundField::degree() const { return data_ ? data_->k : 1; }

const std::string& GroundField::generator() const {
  static const std::string empty;
  return data_ ? data_->gen : empty;
}

std::span<const mpq_class> GroundField::minimal_polynomial() const {
  if (!data_) return {};
  return data_->minpoly;
}

std::string GroundField::to_string() const {
  if (!data_) return "QQ";
  return "QQ(" + data_->gen + " : " + qpoly_to_string(data_->minpoly, data_->gen) + " = 0)";
}

GroundField GroundField::join(const GroundField& a, const GroundField& b) {
  if (a.data_ == nullptr) return b;
  if (b.data_ == nullptr || a.data_ == b.data_) return a;
  throw InputError("incompatible ground fields " + a.to_string() + " and " + b.to_string());
}

Scalar Scalar::generator(const GroundField& f) {
  if (f.is_rational()) throw InputError("the rationals have no generator");
  Scalar s;
  s.field_ = f.data();
  s.hi_.push_back(mpq_class(1));
  return s;
}

Scalar Scalar::from_coefficients(const GroundField& f, std::vector<mpq_class> c) {
  Scalar s;
  if (c.empty()) return s;
  for (auto& x : c) x.canonicalize();
  if (f.is_rational()) {
    for (std::size_t i = 1; i < c.size(); ++i)
      if (sgn(c[i]) != 0) throw InputError("nonrational coefficients over QQ");
    s.c0_ = c[0];
    return s;
  }
  const FieldData* d = f.data();
  QPoly p = std::move(c);
  qpoly_trim(p);
  if (static_cast<int>(p.size()) > d->k) p = qpoly_divmod(p, d->minpoly).second;
  s.field_ = d;
  if (!p.empty()) s.c0_ = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) s.hi_.push_back(p[i]);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  while (!hi_.empty() && sgn(hi_.back()) == 0) hi_.pop_back();
  if (hi_.empty()) field_ = nullptr;
}

const mpq_class& Scalar::rational() const {
  if (!hi_.empty()) throw std::domain_error("scalar is not rational: " + to_string());
  return c0_;
}

mpq_class Scalar::coefficient(int i) const {
  if (i == 0) return c0_;
  if (i - 1 < static_cast<int>(hi_.size())) return hi_[i - 1];
  return 0;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.c0_ = -r.c0_;
  for (auto& c : r.hi_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  c0_ += o.c0_;
  if (!o.hi_.empty()) {
    if (field_ && o.field_ && field_ != o.field_) throw InputError("mixed ground fields in arithmetic");
    if (!field_) field_ = o.field_;
    if (hi_.size() < o.hi_.size()) hi_.resize(o.hi_.size());
    for (std::size_t i = 0; i < o.hi_.size(); ++i) hi_[i] += o.hi_[i];
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  c0_ -= o.c0_;
  if (!o.hi_.empty()) {
    if (field_ && o.field_ && field_ != o.field_) throw InputError("mixed ground fields in arithmetic");
    if (!field_) field_ = o.field_;
    if (hi_.size() < o.hi_.size()) hi_.resize(o.hi_.size());
    for (std::size_t i = 0; i < o.hi_.size(); ++i) hi_[i] -= o.hi_[i];
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.hi_.empty()) {
    if (sgn(o.c0_) == 0) {
      *this = Scalar();
      return *this;
    }
    c0_ *= o.c0_;
    for (auto& c : hi_) c *= o.c0_;
    return *this;
  }
  if (hi_.empty()) {
    mpq_class s = c0_;
    *this = o;
    if (sgn(s) == 0) {
      *this = Scalar();
      return *this;
    }
    c0_ *= s;
    for (auto& c : hi_) c *= s;
    return *this;
  }
  if (field_ != o.field_) throw InputError("mixed ground fields in arithmetic");
  const FieldData* d = field_;
  const int k = d->k;
  std::vector<mpq_class> prod(2 * k - 1);
  auto at = [](const Scalar& s, int i) -> const mpq_class& {
    static const mpq_class zero(0);
    if (i == 0) return s.c0_;
    return i - 1 < static_cast<int>(s.hi_.size()) ? s.hi_[i - 1] : zero;
  };
  const int na = 1 + static_cast<int>(hi_.size()), nb = 1 + static_cast<int>(o.hi_.size());
  for (int i = 0; i < na; ++i) {
    const mpq_class& ai = at(*this, i);
    if (sgn(ai) == 0) continue;
    for (int j = 0; j < nb; ++j) prod[i + j] += ai * at(o, j);
  }
  for (int j = 2 * k - 2; j >= k; --j) {
    if (sgn(prod[j]) == 0) continue;
    const auto& row = d->red[j - k];
    for (int i = 0; i < k; ++i) prod[i] += prod[j] * row[i];
  }
  c0_ = prod[0];
  hi_.assign(prod.begin() + 1, prod.begin() + k);
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (hi_.empty()) return Scalar(mpq_class(1 / c0_));
  QPoly a;
  a.push_back(c0_);
  for (const auto& c : hi_) a.push_back(c);
  QPoly inv = qpoly_invert_mod(a, field_->minpoly);
  return from_coefficients(GroundField(field_), inv);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.hi_.empty()) {
    if (sgn(o.c0_) == 0) throw std::domain_error("division by zero");
    c0_ /= o.c0_;
    for (auto& c : hi_) c /= o.c0_;
    return *this;
  }
  return *this *= o.inverse();
}

mpq_class Scalar::norm() const {
  if (hi_.empty()) return c0_;
  const int k = field_->k;
  // Columns: this * a^j.
  std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k));
  Scalar cur = *this;
  Scalar gen = generator(GroundField(field_));
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) m[i][j] = cur.coefficient(i);
    cur *= gen;
  }
  mpq_class det = 1;
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && sgn(m[p][c]) == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < k; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

std::string Scalar::to_string() const {
  if (hi_.empty()) return c0_.get_str();
  QPoly p;
  p.push_back(c0_);
  for (const auto& c : hi_) p.push_back(c);
  return qpoly_to_string(p, field_->gen);
}

std::string Scalar::to_factor_string() const {
  if (hi_.empty()) return c0_.get_str();
  int nonzero = sgn(c0_) != 0 ? 1 : 0;
  for (const auto& c : hi_) nonzero += sgn(c) != 0;
  std::string s = to_string();
  return nonzero > 1 ? "(" + s + ")" : s;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  const std::size_t n = std::max(a.hi_.size(), b.hi_.size());
  for (std::size_t i = n; i-- > 0;) {
    mpq_class x = i < a.hi_.size() ? a.hi_[i] : mpq_class(0);
    mpq_class y = i < b.hi_.size() ? b.hi_[i] : mpq_class(0);
    if (x != y) return x < y;
  }
  return a.c0_ < b.c0_;
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<std::string>{}(c0_.get_str());
  for (const auto& c : hi_) h = h * 1000003u ^ std::hash<std::string>{}(c.get_str());
  return h;
}

}  // namespace surfiso
