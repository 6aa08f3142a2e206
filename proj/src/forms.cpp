#include "surfiso/forms.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>

namespace surfiso {

std::string to_string(Domain d) { return d == Domain::P2 ? "P2" : "P1xP1"; }

Domain parse_domain(const std::string& s) {
  if (s == "P2") return Domain::P2;
  if (s == "P1xP1") return Domain::P1xP1;
  throw InputError("unknown domain '" + s + "' (expected P2 or P1xP1)");
}

int coordinate_count(Domain d) { return d == Domain::P2 ? 3 : 4; }

std::vector<std::string> coordinate_names(Domain d) {
  if (d == Domain::P2) return {"x0", "x1", "x2"};
  return {"y0", "y1", "y2", "y3"};
}

Ring domain_ring(Domain d) { return Ring::make(coordinate_names(d)); }

Ring param_ring(Domain d, const std::vector<std::string>& params) {
  auto names = coordinate_names(d);
  names.insert(names.end(), params.begin(), params.end());
  return Ring::make(names);
}

std::string to_string(Domain d, const Degree& deg) {
  if (d == Domain::P2) return std::to_string(deg.d1);
  return "(" + std::to_string(deg.d1) + "," + std::to_string(deg.d2) + ")";
}

Degree form_degree(const Poly& p, Domain d) {
  if (p.is_zero()) throw InputError("the zero polynomial has no degree");
  Degree deg{-1, -1};
  for (const auto& t : p.terms()) {
    Degree cur;
    if (d == Domain::P2) {
      cur.d1 = t.m[0] + t.m[1] + t.m[2];
    } else {
      cur.d1 = t.m[0] + t.m[1];
      cur.d2 = t.m[2] + t.m[3];
    }
    if (deg.d1 < 0) deg = cur;
    else if (cur != deg) throw InputError("form is not homogeneous: " + p.to_string());
  }
  return deg;
}

std::vector<Monomial> monomial_basis(Domain d, const Degree& deg) {
  std::vector<Monomial> out;
  if (d == Domain::P2) {
    for (int a = deg.d1; a >= 0; --a)
      for (int b = deg.d1 - a; b >= 0; --b) {
        Monomial m;
        m.set(0, a);
        m.set(1, b);
        m.set(2, deg.d1 - a - b);
        out.push_back(m);
      }
  } else {
    for (int a = deg.d1; a >= 0; --a)
      for (int c = deg.d2; c >= 0; --c) {
        Monomial m;
        m.set(0, a);
        m.set(1, deg.d1 - a);
        m.set(2, c);
        m.set(3, deg.d2 - c);
        out.push_back(m);
      }
  }
  return out;
}

int monomial_count(Domain d, const Degree& deg) {
  if (deg.d1 < 0 || deg.d2 < 0) return 0;
  if (d == Domain::P2) return (deg.d1 + 1) * (deg.d1 + 2) / 2;
  return (deg.d1 + 1) * (deg.d2 + 1);
}

Poly form_gcd(const std::vector<Poly>& forms) {
  if (forms.empty()) throw InputError("gcd of an empty list");
  for (const auto& f : forms) {
    if (f.ring() != forms[0].ring() && f.ring().valid() && forms[0].ring().valid())
      throw InputError("forms live in different rings");
    GroundField::join(forms[0].field(), f.field());
  }
  return gcd(forms);
}

Poly form_gcd(const std::vector<Poly>& forms, Domain d) {
  if (forms.empty()) throw InputError("gcd of an empty list");
  const Ring& r = forms[0].ring();
  for (const auto& f : forms)
    if (f.ring() != r && f.ring().valid()) throw InputError("forms live in different rings");
  std::vector<bool> coord(r.nvars(), false);
  for (int i = 0; i < coordinate_count(d); ++i) coord[i] = true;
  return gcd_in(forms, coord);
}

Degree Parametrization::degree() const {
  for (const auto& c : components)
    if (!c.is_zero()) return form_degree(c, domain);
  throw InputError("parametrization has only zero components");
}

GroundField Parametrization::field() const {
  GroundField f;
  for (const auto& c : components) f = GroundField::join(f, c.field());
  return f;
}

void Parametrization::validate() const {
  if (components.size() < 2) throw InputError("a parametrization needs at least two components");
  const Ring& r = components[0].ring();
  auto names = coordinate_names(domain);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (r.nvars() <= static_cast<int>(i) || r.name(static_cast<int>(i)) != names[i])
      throw InputError("ring does not start with the coordinates of " + surfiso::to_string(domain));
  Degree deg = degree();
  bool nonzero = false;
  for (const auto& c : components) {
    if (c.ring() != r && c.ring().valid()) throw InputError("components live in different rings");
    if (c.is_zero()) continue;
    nonzero = true;
    if (form_degree(c, domain) != deg) throw InputError("components have different degrees");
  }
  if (!nonzero) throw InputError("all components are zero");
  if (!form_gcd(components, domain).is_constant())
    throw InputError("components have a common factor " + form_gcd(components, domain).to_string());
}

std::string Parametrization::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) os << " : ";
    os << components[i].to_string();
  }
  os << ")";
  return os.str();
}

Parametrization strip_gcd(const Parametrization& f) {
  Poly g = form_gcd(f.components, f.domain);
  if (g.is_constant()) return f;
  Parametrization out{f.domain, {}};
  for (const auto& c : f.components) out.components.push_back(c.is_zero() ? c : *divide_exact(c, g));
  return out;
}

std::vector<Poly> coefficient_vector(const Poly& form, Domain d, const Degree& deg) {
  const auto basis = monomial_basis(d, deg);
  const Ring& r = form.ring();
  const int nc = coordinate_count(d);
  std::vector<bool> mask(r.nvars(), false);
  for (int i = 0; i < nc; ++i) mask[i] = true;
  std::vector<Poly> out(basis.size(), Poly(r));
  auto coeffs = form.coefficients_wrt(mask);
  for (auto& [m, c] : coeffs) {
    bool found = false;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (basis[j] == m) {
        out[j] = c;
        found = true;
        break;
      }
    if (!found) throw InputError("form has a monomial outside degree " + to_string(d, deg));
  }
  return out;
}

PolyMatrix coefficient_matrix_poly(const Parametrization& f) {
  const Degree deg = f.degree();
  const int m = monomial_count(f.domain, deg);
  PolyMatrix M(static_cast<int>(f.components.size()), m, Poly(f.ring()));
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    auto v = coefficient_vector(f.components[i], f.domain, deg);
    for (int j = 0; j < m; ++j) M(static_cast<int>(i), j) = v[j];
  }
  return M;
}

ScalarMatrix coefficient_matrix(const Parametrization& f) {
  PolyMatrix p = coefficient_matrix_poly(f);
  ScalarMatrix m(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) m(i, j) = p(i, j).constant_value();
  return m;
}

std::vector<Poly> forms_from_rows(const ScalarMatrix& rows, Domain d, const Degree& deg, const Ring& ring) {
  const auto basis = monomial_basis(d, deg);
  std::vector<Poly> out;
  for (int i = 0; i < rows.rows(); ++i) {
    std::vector<Term> t;
    for (int j = 0; j < rows.cols(); ++j)
      if (!rows(i, j).is_zero()) t.push_back({basis[j], rows(i, j)});
    out.push_back(Poly::from_terms(ring, std::move(t)));
  }
  return out;
}

Ring ambient_ring(int n) {
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("z" + std::to_string(i));
  return Ring::make(names);
}

std::vector<Monomial> homogeneous_monomials(int nvars, int deg) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      cur.set(var, left);
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur.set(var, a);
      rec(var + 1, left - a);
    }
  };
  if (nvars > 0 && deg >= 0) rec(0, deg);
  return out;
}

std::vector<Poly> implicit_forms(const Parametrization& f, int d) {
  if (d < 1) throw InputError("implicit forms need a positive degree");
  const int n = static_cast<int>(f.components.size()) - 1;
  const Degree fd = f.degree();
  const Degree pd{fd.d1 * d, fd.d2 * d};
  const auto zmon = homogeneous_monomials(n + 1, d);
  const auto basis = monomial_basis(f.domain, pd);
  std::unordered_map<Monomial, int, MonomialHash> column;
  for (std::size_t j = 0; j < basis.size(); ++j) column[basis[j]] = static_cast<int>(j);
  std::vector<std::vector<Poly>> powers(n + 1);
  auto power = [&](int i, int k) -> const Poly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(Poly(f.ring(), Scalar(1)));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * f.components[i]);
    return v[k];
  };
  ScalarMatrix a(static_cast<int>(basis.size()), static_cast<int>(zmon.size()));
  for (std::size_t k = 0; k < zmon.size(); ++k) {
    Poly p(f.ring(), Scalar(1));
    for (int i = 0; i <= n; ++i)
      if (zmon[k][i]) p = p * power(i, zmon[k][i]);
    for (const auto& t : p.terms()) a(column.at(t.m), static_cast<int>(k)) = t.c;
  }
  ScalarMatrix ker = kernel_basis(a);
  Ring z = ambient_ring(n);
  std::vector<Poly> out;
  for (int c = 0; c < ker.cols(); ++c) {
    std::vector<Term> terms;
    for (int k = 0; k < ker.rows(); ++k)
      if (!ker(k, c).is_zero()) terms.push_back({zmon[k], ker(k, c)});
    out.push_back(Poly::from_terms(z, terms));
  }
  return out;
}

}  // namespace surfiso
