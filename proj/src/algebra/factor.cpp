#include "surfiso/algebra/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>

namespace surfiso {

// ---------------------------------------------------------------------------
// UPoly

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GroundField UPoly::field() const {
  GroundField f;
  for (const auto& c : c_) f = GroundField::join(f, c.field());
  return f;
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  Scalar inv = c_.back().inverse();
  std::vector<Scalar> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * inv;
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return UPoly(std::move(r));
}

Scalar UPoly::eval(const Scalar& x) const {
  Scalar r;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UPoly UPoly::shift(const Scalar& s) const {
  UPoly r;
  const UPoly lin(std::vector<Scalar>{s, Scalar(1)});
  for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + UPoly::constant(c_[i]);
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const Scalar& s, const UPoly& a) {
  std::vector<Scalar> r(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
  return UPoly(std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i].to_factor_string();
    } else {
      if (!c_[i].is_one()) os << c_[i].to_factor_string() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> r = a.coefficients();
  const auto& bc = b.coefficients();
  if (r.size() < bc.size()) return {UPoly(), a};
  std::vector<Scalar> q(r.size() - bc.size() + 1);
  const Scalar inv = bc.back().inverse();
  for (std::size_t i = r.size(); i-- >= bc.size();) {
    if (r[i].is_zero()) continue;
    Scalar f = r[i] * inv;
    const std::size_t off = i - (bc.size() - 1);
    for (std::size_t j = 0; j < bc.size(); ++j) r[off + j] -= f * bc[j];
    q[off] = std::move(f);
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// Integer and modular helpers

namespace {

using ZPoly = std::vector<mpz_class>;
using ModPoly = std::vector<std::int64_t>;

void ztrim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

// Exact division over Z; returns false when b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  ZPoly r = a;
  if (b.empty()) return false;
  if (r.size() < b.size()) return r.empty();
  quot.assign(r.size() - b.size() + 1, 0);
  const mpz_class& lc = b.back();
  for (std::size_t i = r.size(); i-- >= b.size();) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) return false;
    mpz_class f = r[i] / lc;
    const std::size_t off = i - (b.size() - 1);
    for (std::size_t j = 0; j < b.size(); ++j) r[off + j] -= f * b[j];
    quot[off] = f;
  }
  for (const auto& c : r)
    if (sgn(c) != 0) return false;
  ztrim(quot);
  return true;
}

ZPoly to_primitive_z(const QPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
  ZPoly z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) z[i] = mpz_class(p[i] * den);
  ztrim(z);
  mpz_class g = zcontent(z);
  if (sgn(z.back()) < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

QPoly z_to_monic_q(const ZPoly& z) {
  QPoly q(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) q[i] = mpq_class(z[i], z.back());
  for (auto& c : q) c.canonicalize();
  return q;
}

// Arithmetic in F_p[x], p < 2^31.
struct ModRing {
  std::int64_t p;

  std::int64_t red(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t t = 0, nt = 1, r = p, nr = red(a);
    while (nr) {
      std::int64_t q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return red(t);
  }
  void trim(ModPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ModPoly from_z(const ZPoly& z) const {
    ModPoly r(z.size());
    mpz_class pp = p;
    for (std::size_t i = 0; i < z.size(); ++i) {
      mpz_class t = z[i] % pp;
      if (sgn(t) < 0) t += pp;
      r[i] = t.get_si();
    }
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = red(r[i] - b[i]);
    trim(r);
    return r;
  }
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    ModPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {{}, r};
    ModPoly q(r.size() - b.size() + 1, 0);
    const std::int64_t il = inv(b.back());
    for (std::size_t i = r.size(); i-- >= b.size();) {
      if (!r[i]) continue;
      std::int64_t f = r[i] * il % p;
      const std::size_t off = i - (b.size() - 1);
      for (std::size_t j = 0; j < b.size(); ++j) r[off + j] = red(r[off + j] - f * b[j]);
      q[off] = f;
    }
    trim(q);
    trim(r);
    return {q, r};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    trim(a);
    if (a.empty()) return a;
    std::int64_t il = inv(a.back());
    for (auto& c : a) c = c * il % p;
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ModPoly derivative(const ModPoly& a) const {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<std::int64_t>(i % p) % p);
    trim(r);
    return r;
  }
  ModPoly powmod(ModPoly base, const mpz_class& e, const ModPoly& m) const {
    ModPoly result{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }
  // s*a + t*b = 1 for coprime a, b.
  void extgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is a nonzero constant
    std::int64_t il = inv(r0[0]);
    for (auto& c : s0) c = c * il % p;
    for (auto& c : t0) c = c * il % p;
    s = s0;
    t = t0;
  }
};

struct DegreeGroup {
  ModPoly poly;
  int degree;
};

std::vector<DegreeGroup> distinct_degree(const ModRing& R, ModPoly f) {
  std::vector<DegreeGroup> out;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  mpz_class p = R.p;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = R.powmod(h, p, f);
    ModPoly g = R.gcd(R.sub(h, x), f);
    if (g.size() > 1) {
      out.push_back({g, d});
      f = R.divmod(f, g).first;
      h = R.rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back({R.monic(f), static_cast<int>(f.size()) - 1});
  return out;
}

void equal_degree(const ModRing& R, const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(R.monic(g));
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(R.p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> dist(0, R.p - 1);
  for (;;) {
    ModPoly a(n);
    for (auto& c : a) c = dist(rng);
    R.trim(a);
    if (a.size() < 2) continue;
    ModPoly b = R.powmod(a, e, g);
    b = R.sub(b, ModPoly{1});
    ModPoly h = R.gcd(b, g);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(R, h, d, rng, out);
      equal_degree(R, R.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// Reduce into the symmetric range (-m/2, m/2].
mpz_class symmetric(mpz_class a, const mpz_class& m) {
  a %= m;
  if (sgn(a) < 0) a += m;
  if (a > m / 2) a -= m;
  return a;
}

ZPoly zmod(const ZPoly& a, const mpz_class& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] % m;
    if (sgn(r[i]) < 0) r[i] += m;
  }
  ztrim(r);
  return r;
}

ZPoly mod_to_z(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<long>(a[i]);
  return r;
}

// Lift f == g*h (mod p), g monic, to modulus p^k. f is given modulo p^k.
void hensel_lift(const ModRing& R, const ZPoly& f, ZPoly& g, ZPoly& h, int k) {
  ModPoly s, t;
  R.extgcd(R.from_z(g), R.from_z(h), s, t);
  mpz_class m = R.p;
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(R.p), static_cast<unsigned long>(k));
  for (int j = 1; j < k; ++j) {
    ZPoly gh = zmul(g, h);
    ZPoly diff(std::max(f.size(), gh.size()));
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    for (auto& c : diff) c /= m;  // exact
    ztrim(diff);
    ModPoly e = R.from_z(diff);
    if (!e.empty()) {
      ModPoly gm = R.from_z(g);
      ModPoly hm = R.from_z(h);
      auto [q, r] = R.divmod(R.mul(e, t), gm);
      // dh = e*s + q*h
      ModPoly dh = R.mul(e, s);
      ModPoly qh = R.mul(q, hm);
      ModPoly sum(std::max(dh.size(), qh.size()), 0);
      for (std::size_t i = 0; i < dh.size(); ++i) sum[i] = dh[i];
      for (std::size_t i = 0; i < qh.size(); ++i) sum[i] = (sum[i] + qh[i]) % R.p;
      R.trim(sum);
      ZPoly rz = mod_to_z(r), dz = mod_to_z(sum);
      if (g.size() < rz.size()) g.resize(rz.size());
      for (std::size_t i = 0; i < rz.size(); ++i) g[i] += m * rz[i];
      if (h.size() < dz.size()) h.resize(dz.size());
      for (std::size_t i = 0; i < dz.size(); ++i) h[i] += m * dz[i];
      ztrim(g);
      ztrim(h);
    }
    m *= R.p;
    g = zmod(g, pk);
    h = zmod(h, pk);
  }
}

bool is_prime_small(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors over Z of a primitive squarefree polynomial with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  // Choose a prime with few modular factors.
  std::int64_t best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (std::int64_t p = 11; tried < 6; ++p) {
    if (!is_prime_small(p)) continue;
    ModRing R{p};
    ModPoly fm = R.from_z(f);
    if (static_cast<int>(fm.size()) - 1 != n) continue;
    if (R.gcd(fm, R.derivative(fm)).size() != 1) continue;
    ++tried;
    auto groups = distinct_degree(R, R.monic(fm));
    std::size_t count = 0;
    for (const auto& g : groups) count += (g.poly.size() - 1) / g.degree;
    if (count == 1) return {f};
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
  }
  ModRing R{best_p};
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<ModPoly> modf;
  for (const auto& g : distinct_degree(R, R.monic(R.from_z(f)))) equal_degree(R, g.poly, g.degree, rng, modf);
  std::sort(modf.begin(), modf.end());

  // Bound on coefficients of factors: 2^n * |lc| * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class root = sqrt(norm2) + 1;
  mpz_class bound = root * abs(f.back());
  bound <<= static_cast<unsigned long>(n);
  bound *= 2;
  int k = 1;
  mpz_class pk = best_p;
  while (pk <= bound) {
    pk *= best_p;
    ++k;
  }

  // Multifactor lifting by peeling one factor at a time.
  std::vector<ZPoly> lifted;
  ZPoly cur = zmod(f, pk);
  for (std::size_t i = 0; i + 1 < modf.size(); ++i) {
    ZPoly g = mod_to_z(modf[i]);
    ModPoly hm = R.from_z(ZPoly{f.back()});
    for (std::size_t j = i + 1; j < modf.size(); ++j) hm = R.mul(hm, modf[j]);
    ZPoly h = mod_to_z(hm);
    hensel_lift(R, cur, g, h, k);
    lifted.push_back(g);
    cur = h;
  }
  // The last factor is the monic part of cur.
  {
    mpz_class lc = cur.back();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    ZPoly last(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) last[i] = cur[i] * inv;
    lifted.push_back(zmod(last, pk));
  }

  // Recombination.
  std::vector<ZPoly> result;
  ZPoly rem_f = f;
  std::vector<int> alive(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
  for (std::size_t s = 1; 2 * s <= alive.size();) {
    bool found = false;
    std::vector<int> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
    const int m = static_cast<int>(alive.size());
    while (true) {
      ZPoly cand{symmetric(rem_f.back(), pk)};
      for (int i : idx) cand = zmod(zmul(cand, lifted[alive[i]]), pk);
      for (auto& c : cand) c = symmetric(c, pk);
      ztrim(cand);
      mpz_class cont = zcontent(cand);
      if (sgn(cont) != 0) {
        for (auto& c : cand) c /= cont;
        if (sgn(cand.back()) < 0)
          for (auto& c : cand) c = -c;
        ZPoly q;
        if (zdivides(rem_f, cand, q)) {
          result.push_back(cand);
          rem_f = q;
          std::vector<int> next;
          for (int i = 0; i < m; ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(alive[i]);
          alive = next;
          found = true;
          break;
        }
      }
      // next combination
      int pos = static_cast<int>(s) - 1;
      while (pos >= 0 && idx[pos] == m - static_cast<int>(s) + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t j = pos + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rem_f.size() > 1) result.push_back(rem_f);
  return result;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

QPoly qderivative(const QPoly& p) {
  QPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
  qpoly_trim(r);
  return r;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& p_in) {
  QPoly p = p_in;
  qpoly_trim(p);
  if (p.empty()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<std::pair<QPoly, int>> out;
  // Powers of x.
  int zeros = 0;
  while (p.size() > 1 && sgn(p[0]) == 0) {
    p.erase(p.begin());
    ++zeros;
  }
  if (zeros) out.push_back({QPoly{0, 1}, zeros});
  if (p.size() > 1) {
    // Yun's squarefree decomposition.
    QPoly a = p;
    QPoly b = qderivative(a);
    QPoly c = qpoly_gcd(a, b);
    QPoly w = qpoly_divmod(a, c).first;
    int mult = 1;
    while (w.size() > 1) {
      QPoly y = qpoly_gcd(w, c);
      QPoly z = qpoly_divmod(w, y).first;
      if (z.size() > 1) {
        for (const auto& zf : zassenhaus(to_primitive_z(z))) out.push_back({z_to_monic_q(zf), mult});
      }
      w = y;
      c = qpoly_divmod(c, y).first;
      ++mult;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (qpoly_less(x.first, y.first)) return true;
    if (qpoly_less(y.first, x.first)) return false;
    return x.second < y.second;
  });
  return out;
}

namespace {

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return canonical_less(a[i], b[i]);
  }
  return false;
}

UPoly from_q(const QPoly& q) {
  std::vector<Scalar> c;
  for (const auto& x : q) c.emplace_back(x);
  return UPoly(std::move(c));
}

// Newton interpolation over Q through (i, ys[i]) for i = 0..n.
QPoly interpolate(const std::vector<mpq_class>& ys) {
  const std::size_t n = ys.size();
  std::vector<mpq_class> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / mpq_class(static_cast<long>(j));
  QPoly r{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // r = r * (x - i) + dd[i]
    QPoly nr(r.size() + 1);
    for (std::size_t k = 0; k < r.size(); ++k) {
      nr[k + 1] += r[k];
      nr[k] -= r[k] * mpq_class(static_cast<long>(i));
    }
    nr[0] += dd[i];
    r = std::move(nr);
  }
  qpoly_trim(r);
  return r;
}

// Irreducible factors over K of a monic squarefree q (Trager).
std::vector<UPoly> trager(const UPoly& q, const GroundField& k) {
  const int n = q.degree();
  if (n <= 1) return {q};
  const Scalar alpha = Scalar::generator(k);
  const int kd = k.degree();
  for (long s = 0;; s = s > 0 ? -s : -s + 1) {
    UPoly qs = q.shift(Scalar(-s) * alpha);  // q(x - s a)
    std::vector<mpq_class> values;
    for (int i = 0; i <= n * kd; ++i) {
      Scalar v = qs.eval(Scalar(i));
      if (v.is_rational()) {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v.rational().get_num_mpz_t(), kd);
        mpz_pow_ui(r.get_den_mpz_t(), v.rational().get_den_mpz_t(), kd);
        values.push_back(r);
      } else {
        values.push_back(v.norm());
      }
    }
    QPoly norm = interpolate(values);
    if (qpoly_gcd(norm, qderivative(norm)).size() != 1) continue;
    std::vector<UPoly> out;
    for (const auto& [nf, mult] : factor_rational(norm)) {
      UPoly h = gcd(qs, from_q(nf));
      if (h.degree() <= 0) continue;
      out.push_back(h.shift(Scalar(s) * alpha).monic());
    }
    return out;
  }
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor(const UPoly& p, const GroundField& k) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() == 0) return out;
  if (k.is_rational()) {
    QPoly q;
    for (const auto& c : p.coefficients()) q.push_back(c.rational());
    for (auto& [f, m] : factor_rational(q)) out.push_back({from_q(f), m});
    return out;
  }
  UPoly a = p.monic();
  UPoly c = gcd(a, a.derivative());
  UPoly w = divmod(a, c).first;
  int mult = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly z = divmod(w, y).first;
    if (z.degree() > 0)
      for (auto& f : trager(z.monic(), k)) out.push_back({f, mult});
    w = y;
    c = divmod(c, y).first;
    ++mult;
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (upoly_less(x.first, y.first)) return true;
    if (upoly_less(y.first, x.first)) return false;
    return x.second < y.second;
  });
  return out;
}

std::vector<std::pair<Scalar, int>> roots(const UPoly& p, const GroundField& k, std::vector<UPoly>* rest) {
  std::vector<std::pair<Scalar, int>> out;
  for (auto& [f, m] : factor(p, k)) {
    if (f.degree() == 1) {
      out.push_back({-f[0] / f[1], m});
    } else if (rest) {
      rest->push_back(f);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

}  // namespace surfiso
