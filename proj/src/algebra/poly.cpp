#include "surfiso/algebra/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

#include "surfiso/algebra/factor.hpp"

namespace surfiso {

// ---------------------------------------------------------------------------
// Monomial

void Monomial::set(int i, int v) {
  if (v < 0 || v > 255) throw ContractError("exponent out of range");
  deg += v - e[i];
  e[i] = static_cast<std::uint8_t>(v);
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a.e[i] + b.e[i];
    if (s > 255) throw ContractError("exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::min(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  const auto* w = reinterpret_cast<const std::uint64_t*>(e.data());
  for (int i = 0; i < kMaxVars / 8; ++i) {
    h ^= w[i];
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Ring

struct RingData {
  std::vector<std::string> names;
  MonomialOrder order;
  int block;
};

namespace {

std::mutex& ring_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::unique_ptr<RingData>>& ring_registry() {
  static std::vector<std::unique_ptr<RingData>> r;
  return r;
}

}  // namespace

Ring Ring::make(const std::vector<std::string>& names, MonomialOrder order, int block) {
  if (static_cast<int>(names.size()) > kMaxVars) throw ContractError("too many variables");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw InputError("duplicate variable " + names[i]);
  if (order != MonomialOrder::Elim) block = 0;
  std::lock_guard<std::mutex> lock(ring_mutex());
  for (const auto& d : ring_registry())
    if (d->names == names && d->order == order && d->block == block) return Ring(d.get());
  ring_registry().push_back(std::make_unique<RingData>(RingData{names, order, block}));
  return Ring(ring_registry().back().get());
}

int Ring::nvars() const { return d_ ? static_cast<int>(d_->names.size()) : 0; }

const std::vector<std::string>& Ring::names() const {
  static const std::vector<std::string> empty;
  return d_ ? d_->names : empty;
}

const std::string& Ring::name(int i) const { return d_->names[i]; }

int Ring::index(const std::string& name) const {
  if (!d_) return -1;
  for (std::size_t i = 0; i < d_->names.size(); ++i)
    if (d_->names[i] == name) return static_cast<int>(i);
  return -1;
}

MonomialOrder Ring::order() const { return d_ ? d_->order : MonomialOrder::GrLex; }
int Ring::block() const { return d_ ? d_->block : 0; }

Ring Ring::with_order(MonomialOrder order, int block) const { return make(names(), order, block); }

namespace {

// Reverse lexicographic tie-break on [lo, hi): a > b when the last differing exponent of a is smaller.
int revlex(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

}  // namespace

bool Ring::greater(const Monomial& a, const Monomial& b) const {
  const int n = nvars();
  switch (order()) {
    case MonomialOrder::GrLex:
      if (a.deg != b.deg) return a.deg > b.deg;
      for (int i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
      return false;
    case MonomialOrder::GrevLex:
      if (a.deg != b.deg) return a.deg > b.deg;
      return revlex(a, b, 0, n) > 0;
    case MonomialOrder::Lex:
      for (int i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
      return false;
    case MonomialOrder::Elim: {
      const int k = block();
      int da = 0, db = 0;
      for (int i = 0; i < k; ++i) {
        da += a.e[i];
        db += b.e[i];
      }
      if (da != db) return da > db;
      if (int c = revlex(a, b, 0, k)) return c > 0;
      if (a.deg - da != b.deg - db) return a.deg - da > b.deg - db;
      return revlex(a, b, k, n) > 0;
    }
  }
  return false;
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += name(i);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// PolyBuilder

PolyBuilder::PolyBuilder(Ring r) : ring_(r) {}

void PolyBuilder::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyBuilder::add(const Poly& p, const Scalar& c) {
  for (const auto& t : p.terms()) add(t.m, c.is_one() ? t.c : t.c * c);
}

Poly PolyBuilder::take() {
  Poly p(ring_);
  p.t_.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (!c.is_zero()) p.t_.push_back({m, std::move(c)});
  acc_.clear();
  const Ring r = ring_;
  std::sort(p.t_.begin(), p.t_.end(), [&r](const Term& a, const Term& b) { return r.greater(a.m, b.m); });
  return p;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(Ring r, Scalar c) : ring_(r) {
  if (!c.is_zero()) t_.push_back({Monomial{}, std::move(c)});
}

Poly Poly::variable(Ring r, int i) {
  if (i < 0 || i >= r.nvars()) throw ContractError("variable index out of range");
  Monomial m;
  m.set(i, 1);
  return monomial(r, m);
}

Poly Poly::variable(Ring r, const std::string& name) {
  int i = r.index(name);
  if (i < 0) throw InputError("unknown variable " + name);
  return variable(r, i);
}

Poly Poly::monomial(Ring r, const Monomial& m, Scalar c) {
  Poly p(r);
  if (!c.is_zero()) p.t_.push_back({m, std::move(c)});
  return p;
}

Poly Poly::from_terms(Ring r, std::vector<Term> terms) {
  PolyBuilder b(r);
  for (auto& t : terms) b.add(t.m, t.c);
  return b.take();
}

Scalar Poly::constant_value() const {
  if (t_.empty()) return Scalar();
  if (!is_constant()) throw ContractError("polynomial is not constant: " + to_string());
  return t_[0].c;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.deg);
  return d;
}

int Poly::degree(int var) const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m.e[var]));
  return d;
}

int Poly::min_degree(int var) const {
  int d = 256;
  for (const auto& t : t_) d = std::min(d, static_cast<int>(t.m.e[var]));
  return t_.empty() ? -1 : d;
}

std::vector<int> Poly::support() const {
  std::vector<int> out;
  for (int i = 0; i < ring_.nvars(); ++i)
    for (const auto& t : t_)
      if (t.m.e[i]) {
        out.push_back(i);
        break;
      }
  return out;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : t_)
    if (t.m.deg != t_[0].m.deg) return false;
  return true;
}

GroundField Poly::field() const {
  GroundField f;
  for (const auto& t : t_) f = GroundField::join(f, t.c.field());
  return f;
}

Scalar Poly::coefficient(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.m == m) return t.c;
  return Scalar();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

namespace {

void check_same(const Ring& a, const Ring& b) {
  if (a != b && a.valid() && b.valid()) throw ContractError("polynomials from different rings");
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) {
    *this = o;
    return *this;
  }
  check_same(ring_, o.ring_);
  std::vector<Term> r;
  r.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && ring_.greater(t_[i].m, o.t_[j].m))) {
      r.push_back(std::move(t_[i++]));
    } else if (i == t_.size() || ring_.greater(o.t_[j].m, t_[i].m)) {
      r.push_back(o.t_[j++]);
    } else {
      Scalar c = t_[i].c + o.t_[j].c;
      if (!c.is_zero()) r.push_back({t_[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  t_ = std::move(r);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.t_.empty() || b.t_.empty()) return Poly(a.ring_.valid() ? a.ring_ : b.ring_);
  check_same(a.ring_, b.ring_);
  if (a.t_.size() == 1) return b.mul_monomial(a.t_[0].m, a.t_[0].c);
  if (b.t_.size() == 1) return a.mul_monomial(b.t_[0].m, b.t_[0].c);
  PolyBuilder pb(a.ring_);
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) pb.add(x.m * y.m, x.c * y.c);
  return pb.take();
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& t : t_) t.c *= s;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw ContractError("negative power");
  Poly result(ring_, Scalar(1));
  Poly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::mul_monomial(const Monomial& m, const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.m * m, c.is_one() ? t.c : t.c * c});
  return r;
}

Poly Poly::div_monomial(const Monomial& m) const {
  Poly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) {
    if (!m.divides(t.m)) throw ContractError("monomial does not divide polynomial");
    r.t_.push_back({t.m / m, t.c});
  }
  return r;
}

Poly Poly::monic() const {
  if (t_.empty()) return *this;
  return *this * t_[0].c.inverse();
}

Monomial Poly::monomial_content() const {
  if (t_.empty()) return {};
  Monomial g = t_[0].m;
  for (const auto& t : t_) g = gcd(g, t.m);
  return g;
}

Poly Poly::in_ring(const Ring& target, const std::vector<int>& map) const {
  PolyBuilder b(target);
  for (const auto& t : t_) {
    Monomial m;
    for (int i = 0; i < ring_.nvars(); ++i)
      if (t.m.e[i]) {
        if (map[i] < 0) throw ContractError("variable " + ring_.name(i) + " missing in target ring");
        m.set(map[i], m.e[map[i]] + t.m.e[i]);
      }
    b.add(m, t.c);
  }
  return b.take();
}

Poly Poly::in_ring(const Ring& target) const {
  if (target == ring_) return *this;
  std::vector<int> map(ring_.nvars());
  for (int i = 0; i < ring_.nvars(); ++i) map[i] = target.index(ring_.name(i));
  return in_ring(target, map);
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != ring_.nvars()) throw ContractError("substitution arity mismatch");
  Ring target;
  for (const auto& p : images)
    if (p.ring_.valid()) target = p.ring_;
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](int i, int k) -> const Poly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(Poly(target, Scalar(1)));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * images[i]);
    return v[k];
  };
  PolyBuilder b(target);
  for (const auto& t : t_) {
    Poly acc(target, t.c);
    for (int i = 0; i < ring_.nvars() && !acc.is_zero(); ++i)
      if (t.m.e[i]) acc = acc * power(i, t.m.e[i]);
    b.add(acc);
  }
  return b.take();
}

Poly Poly::evaluate(const std::vector<std::pair<int, Scalar>>& values) const {
  std::vector<std::vector<Scalar>> powers(ring_.nvars());
  std::vector<const Scalar*> val(ring_.nvars(), nullptr);
  for (const auto& [i, v] : values) val[i] = &v;
  PolyBuilder b(ring_);
  for (const auto& t : t_) {
    Monomial m = t.m;
    Scalar c = t.c;
    for (int i = 0; i < ring_.nvars(); ++i) {
      if (!val[i] || !m.e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Scalar(1));
      while (static_cast<int>(pw.size()) <= m.e[i]) pw.push_back(pw.back() * *val[i]);
      c *= pw[m.e[i]];
      m.set(i, 0);
    }
    b.add(m, c);
  }
  return b.take();
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  std::vector<std::pair<int, Scalar>> v;
  for (int i = 0; i < ring_.nvars(); ++i) v.push_back({i, point[i]});
  return evaluate(v).constant_value();
}

std::vector<std::pair<Monomial, Poly>> Poly::coefficients_wrt(const std::vector<bool>& vars) const {
  std::vector<std::pair<Monomial, Poly>> out;
  std::unordered_map<Monomial, std::size_t, std::function<std::size_t(const Monomial&)>> idx(
      16, [](const Monomial& m) { return m.hash(); });
  for (const auto& t : t_) {
    Monomial key, rest = t.m;
    for (int i = 0; i < ring_.nvars(); ++i)
      if (vars[i] && t.m.e[i]) {
        key.set(i, t.m.e[i]);
        rest.set(i, 0);
      }
    auto it = idx.find(key);
    if (it == idx.end()) {
      idx.emplace(key, out.size());
      out.push_back({key, Poly(ring_)});
      it = idx.find(key);
    }
    // terms arrive in decreasing order, but the projected rests need not be sorted
    out[it->second].second.t_.push_back({rest, t.c});
  }
  const Ring r = ring_;
  for (auto& [k, p] : out)
    std::sort(p.t_.begin(), p.t_.end(), [&r](const Term& a, const Term& b) { return r.greater(a.m, b.m); });
  std::sort(out.begin(), out.end(), [&r](const auto& a, const auto& b) { return r.greater(a.first, b.first); });
  return out;
}

Poly Poly::derivative(int var) const {
  PolyBuilder b(ring_);
  for (const auto& t : t_) {
    if (!t.m.e[var]) continue;
    Monomial m = t.m;
    m.set(var, m.e[var] - 1);
    b.add(m, t.c * Scalar(static_cast<long>(t.m.e[var])));
  }
  return b.take();
}

std::string Poly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    std::string cs = t.c.to_factor_string();
    bool neg = false;
    if (!cs.empty() && cs[0] == '-') {
      neg = true;
      cs = (-t.c).to_factor_string();
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.m.deg == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << ring_.monomial_string(t.m);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Division and gcd

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const Ring r = a.ring().valid() ? a.ring() : b.ring();
  if (a.is_zero()) return Poly(r);
  if (b.size() == 1) {
    const Monomial& m = b.lead_monomial();
    for (const auto& t : a.terms())
      if (!m.divides(t.m)) return std::nullopt;
    return a.div_monomial(m) * b.lead_coefficient().inverse();
  }
  // quick degree screens
  for (int v = 0; v < r.nvars(); ++v) {
    if (b.degree(v) > a.degree(v)) return std::nullopt;
    if (b.min_degree(v) > a.min_degree(v)) return std::nullopt;
  }
  auto cmp = [&r](const Monomial& x, const Monomial& y) { return r.greater(x, y); };
  std::map<Monomial, Scalar, decltype(cmp)> rem(cmp);
  for (const auto& t : a.terms()) rem.emplace(t.m, t.c);
  const Monomial& lb = b.lead_monomial();
  const Scalar lcinv = b.lead_coefficient().inverse();
  std::vector<Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lb.divides(it->first)) return std::nullopt;
    Monomial qm = it->first / lb;
    Scalar qc = it->second * lcinv;
    rem.erase(it);
    for (std::size_t k = 1; k < b.size(); ++k) {
      const Term& bt = b.terms()[k];
      Monomial m = bt.m * qm;
      auto [jt, ins] = rem.try_emplace(m, -(bt.c * qc));
      if (!ins) {
        jt->second -= bt.c * qc;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
    q.push_back({qm, std::move(qc)});
  }
  return Poly::from_terms(r, std::move(q));
}

namespace {

std::mt19937_64& gcd_rng() {
  static thread_local std::mt19937_64 rng(0xC0FFEEULL);
  return rng;
}

UPoly to_upoly(const Poly& p, int var) {
  std::vector<Scalar> c(p.degree(var) + 1);
  for (const auto& t : p.terms()) {
    if (t.m.deg != t.m.e[var]) throw ContractError("not univariate");
    c[t.m.e[var]] += t.c;
  }
  return UPoly(std::move(c));
}

// True when random specialisation proves that no common factor involves `var`.
bool trivial_in(const std::vector<Poly>& ps, int var) {
  const Ring& r = ps[0].ring();
  std::uniform_int_distribution<long> dist(-997, 997);
  std::vector<std::pair<int, Scalar>> vals;
  for (int i = 0; i < r.nvars(); ++i)
    if (i != var) vals.push_back({i, Scalar(dist(gcd_rng()))});
  UPoly g;
  bool first = true;
  for (const auto& p : ps) {
    if (p.degree(var) <= 0) return true;
    // leading coefficient in var must survive the specialisation
    Poly lc(r);
    {
      PolyBuilder b(r);
      const int d = p.degree(var);
      for (const auto& t : p.terms())
        if (t.m.e[var] == d) b.add(t.m, t.c);
      lc = b.take();
    }
    if (lc.evaluate(vals).is_zero()) return false;
    UPoly u = to_upoly(p.evaluate(vals), var);
    g = first ? u : gcd(g, u);
    first = false;
    if (g.degree() == 0) return true;
  }
  return g.degree() <= 0;
}

Poly gcd_rec(const Poly& a, const Poly& b);

// Gcd of the coefficients of p with respect to var.
Poly content_in(const Poly& p, int var) {
  std::vector<bool> mask(p.ring().nvars(), false);
  mask[var] = true;
  auto cs = p.coefficients_wrt(mask);
  Poly g = cs[0].second;
  for (std::size_t i = 1; i < cs.size() && !g.is_constant(); ++i) g = gcd_rec(g, cs[i].second);
  if (g.is_constant()) return Poly(p.ring(), Scalar(1));
  return g.monic();
}

Poly coeff_of(const Poly& p, int var, int d) {
  PolyBuilder b(p.ring());
  for (const auto& t : p.terms())
    if (t.m.e[var] == d) {
      Monomial m = t.m;
      m.set(var, 0);
      b.add(m, t.c);
    }
  return b.take();
}

Poly primitive_prs(Poly a, Poly b, int var) {
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  const Ring& r = a.ring();
  while (b.degree(var) > 0) {
    // pseudo-remainder of a by b
    Poly rem = a;
    const int db = b.degree(var);
    const Poly lb = coeff_of(b, var, db);
    while (!rem.is_zero() && rem.degree(var) >= db) {
      const int dr = rem.degree(var);
      Poly lr = coeff_of(rem, var, dr);
      Monomial shift;
      shift.set(var, dr - db);
      rem = lb * rem - (lr * b).mul_monomial(shift);
    }
    if (rem.is_zero()) return b;
    if (rem.degree(var) == 0) return Poly(r, Scalar(1));
    Poly c = content_in(rem, var);
    a = std::move(b);
    b = *divide_exact(rem, c);
  }
  return Poly(r, Scalar(1));
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  const Ring& r = a.ring();
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(r, Scalar(1));
  if (auto q = divide_exact(a, b)) return b.monic();
  if (auto q = divide_exact(b, a)) return a.monic();
  auto sa = a.support(), sb = b.support();
  std::vector<int> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  if (common.empty()) return Poly(r, Scalar(1));
  if (std::all_of(common.begin(), common.end(), [&](int v) { return trivial_in({a, b}, v); }))
    return Poly(r, Scalar(1));
  int var = common[0];
  for (int v : common)
    if (std::max(a.degree(v), b.degree(v)) < std::max(a.degree(var), b.degree(var))) var = v;
  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly c = gcd_rec(ca, cb);
  Poly pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
  Poly g = primitive_prs(pa, pb, var);
  if (!g.is_constant()) g = *divide_exact(g, content_in(g, var));
  return (c * g).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd(std::vector<Poly>{a, b}); }

Poly gcd(const std::vector<Poly>& in) {
  std::vector<Poly> ps;
  for (const auto& p : in)
    if (!p.is_zero()) ps.push_back(p);
  if (ps.empty()) return in.empty() ? Poly() : Poly(in[0].ring());
  const Ring r = ps[0].ring();
  Monomial mc = ps[0].monomial_content();
  for (auto& p : ps) mc = gcd(mc, p.monomial_content());
  for (auto& p : ps) p = p.div_monomial(p.monomial_content());
  std::sort(ps.begin(), ps.end(), [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
  Poly g;
  if (ps.size() == 1) {
    g = ps[0].monic();
  } else {
    bool trivial = ps[0].is_constant();
    if (!trivial) {
      trivial = true;
      for (int v : ps[0].support())
        if (!trivial_in(ps, v)) {
          trivial = false;
          break;
        }
    }
    if (trivial) {
      g = Poly(r, Scalar(1));
    } else {
      g = ps[0];
      for (std::size_t i = 1; i < ps.size() && !g.is_constant(); ++i) g = gcd_rec(g, ps[i]);
      g = g.monic();
    }
  }
  return g.mul_monomial(mc);
}

Poly gcd_in(const std::vector<Poly>& in, const std::vector<bool>& coord) {
  std::vector<Poly> ps;
  for (const auto& p : in)
    if (!p.is_zero()) ps.push_back(p);
  if (ps.empty()) return in.empty() ? Poly() : Poly(in[0].ring());
  const Ring r = ps[0].ring();
  // monomial content restricted to coordinate variables
  Monomial mc = ps[0].monomial_content();
  for (auto& p : ps) mc = gcd(mc, p.monomial_content());
  for (int i = 0; i < r.nvars(); ++i)
    if (!coord[i]) mc.set(i, 0);
  for (auto& p : ps) p = p.div_monomial(mc);
  bool trivial = true;
  for (int v = 0; v < r.nvars() && trivial; ++v)
    if (coord[v] && !trivial_in(ps, v)) trivial = false;
  if (trivial) return Poly::monomial(r, mc);
  Poly g = gcd(ps);
  // discard the part that involves no coordinate variable
  auto cs = g.coefficients_wrt(coord);
  Poly c = cs[0].second;
  for (std::size_t i = 1; i < cs.size() && !c.is_constant(); ++i) c = gcd(c, cs[i].second);
  if (!c.is_constant()) g = *divide_exact(g, c);
  return g.mul_monomial(mc).monic();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  const std::string& s;
  const Ring& ring;
  const GroundField& field;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("cannot parse polynomial '" + s + "' at " + std::to_string(pos) + ": " + msg);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool starts_factor() {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }
  Poly expr() {
    Poly r = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r += term();
      } else if (c == '-') {
        ++pos;
        r -= term();
      } else {
        return r;
      }
    }
  }
  Poly term() {
    Poly r = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        r = r * unary();
      } else if (c == '/') {
        ++pos;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        r *= d.constant_value().inverse();
      } else if (starts_factor()) {
        r = r * unary();
      } else {
        return r;
      }
    }
  }
  Poly unary() {
    char c = peek();
    if (c == '-') {
      ++pos;
      return -unary();
    }
    if (c == '+') {
      ++pos;
      return unary();
    }
    return power();
  }
  Poly power() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected exponent");
      base = base.pow(std::stoi(s.substr(start, pos - start)));
    }
    return base;
  }
  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Poly r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Poly(ring, Scalar(mpz_class(s.substr(start, pos - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
      std::string id = s.substr(start, pos - start);
      if (!field.is_rational() && id == field.generator()) return Poly(ring, Scalar::generator(field));
      int v = ring.index(id);
      if (v < 0) fail("unknown symbol '" + id + "'");
      return Poly::variable(ring, v);
    }
    fail(c ? std::string("unexpected '") + c + "'" : "unexpected end");
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const Ring& ring, const GroundField& field) {
  Parser p{text, ring, field};
  Poly r = p.expr();
  if (p.peek() != '\0') p.fail("trailing input");
  return r.ring().valid() ? r : Poly(ring);
}

}  // namespace surfiso
