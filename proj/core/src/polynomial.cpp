#include "liederiv/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace liederiv {

Polynomial Polynomial::constant(Vars vars, const Rational& c) {
  Polynomial p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(Vars vars, std::size_t index) {
  Polynomial p(std::move(vars));
  if (index >= p.vars_.size()) throw InvalidInput("variable index out of range");
  Monomial m(p.vars_.size(), 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(Vars vars, Monomial m, const Rational& c) {
  Polynomial p(std::move(vars));
  if (m.size() != p.vars_.size()) throw InvalidInput("exponent vector length mismatch");
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree() == 0;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 && total_degree() == 0;
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<int> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  const Monomial& m = terms_.begin()->first; // grlex leading term has max degree
  int d = 0;
  for (auto e : m) d += static_cast<int>(e);
  return d;
}

std::optional<int> Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return static_cast<int>(d);
}

const Monomial& Polynomial::leading_monomial() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_vars(vars_, o.vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_vars(vars_, o.vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_vars(a.vars(), b.vars());
  Polynomial r(a.vars());
  const std::size_t n = a.vars().size();
  Monomial m(n, 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = Polynomial::constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * Rational(m[var]));
  }
  return r;
}

Polynomial Polynomial::truncated(int n) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    if (d <= n) r.terms_.emplace(m, c);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw InvalidInput("evaluation point arity mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] == 0) continue;
      if (point[i].is_zero()) {
        t = 0;
        break;
      }
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(0);
  BigInt g(0), l(1);
  for (const auto& [m, c] : terms_) {
    g = mp::gcd(g, mp::abs(rat_num(c)));
    l = mp::lcm(l, rat_den(c));
  }
  return Rational(g) / Rational(l);
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  const Rational c = content();
  Polynomial r(vars_);
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k / c);
  return r;
}

namespace {

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::uint32_t deg_v(const Polynomial& p, std::size_t v) {
  std::uint32_t d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m[v]);
  return d;
}

// Coefficient of v^e as a polynomial with zero v-exponent.
Polynomial coeff_of(const Polynomial& p, std::size_t v, std::uint32_t e) {
  Polynomial r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (m[v] != e) continue;
    Monomial q = m;
    q[v] = 0;
    r.add_term(q, c);
  }
  return r;
}

Polynomial mul_by_var_power(const Polynomial& p, std::size_t v, std::uint32_t e) {
  Polynomial r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    Monomial q = m;
    q[v] += e;
    r.add_term(q, c);
  }
  return r;
}

// Pseudo-remainder of A by B with respect to v:
// lc_v(B)^(deg_v(A)-deg_v(B)+1) * A = Q*B + prem(A,B).
Polynomial prem(const Polynomial& A, const Polynomial& B, std::size_t v) {
  const std::uint32_t db = deg_v(B, v);
  const Polynomial lb = coeff_of(B, v, db);
  Polynomial R = A;
  int e = static_cast<int>(deg_v(A, v)) - static_cast<int>(db) + 1;
  while (!R.is_zero() && deg_v(R, v) >= db) {
    const std::uint32_t dr = deg_v(R, v);
    const Polynomial t = mul_by_var_power(coeff_of(R, v, dr), v, dr - db);
    R = lb * R - t * B;
    --e;
  }
  for (; e > 0; --e) R = lb * R;
  return R;
}

// gcd over Z[vars] (inputs must have integer coefficients), including the
// integer content; result sign is not normalized.
Polynomial gcd_z(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  // Main variable: first one appearing in either operand.
  std::size_t v = Vars::npos;
  for (std::size_t i = 0; i < a.vars().size(); ++i) {
    if (deg_v(a, i) > 0 || deg_v(b, i) > 0) {
      v = i;
      break;
    }
  }
  if (v == Vars::npos) {
    // Both are integer constants.
    const BigInt g = mp::gcd(mp::abs(rat_num(*a.as_constant())), mp::abs(rat_num(*b.as_constant())));
    return Polynomial::constant(a.vars(), Rational(g));
  }

  auto content_v = [&](const Polynomial& p) {
    Polynomial c = Polynomial::zero(p.vars());
    for (std::uint32_t e = 0; e <= deg_v(p, v); ++e) {
      const Polynomial ce = coeff_of(p, v, e);
      if (!ce.is_zero()) c = gcd_z(c, ce);
    }
    return c;
  };

  const Polynomial ca = content_v(a);
  const Polynomial cb = content_v(b);
  Polynomial G1 = Polynomial::div_exact(a, ca);
  Polynomial G2 = Polynomial::div_exact(b, cb);
  const Polynomial c = gcd_z(ca, cb);

  if (deg_v(G1, v) < deg_v(G2, v)) std::swap(G1, G2);
  if (deg_v(G2, v) == 0) return c; // v-primitive parts are coprime in v

  // Subresultant PRS on the v-primitive parts (Knuth 4.6.1, Algorithm C).
  Polynomial g = Polynomial::constant(a.vars(), Rational(1));
  Polynomial h = g;
  while (true) {
    const std::uint32_t delta = deg_v(G1, v) - deg_v(G2, v);
    const Polynomial R = prem(G1, G2, v);
    if (R.is_zero()) break;
    if (deg_v(R, v) == 0) return c; // non-zero v-constant remainder: coprime in v
    Polynomial divisor = g;
    for (std::uint32_t i = 0; i < delta; ++i) divisor = divisor * h;
    G1 = G2;
    G2 = Polynomial::div_exact(R, divisor);
    g = coeff_of(G1, v, deg_v(G1, v));
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Polynomial num = g;
      for (std::uint32_t i = 1; i < delta; ++i) num = num * g;
      Polynomial den = h;
      for (std::uint32_t i = 2; i < delta; ++i) den = den * h;
      h = Polynomial::div_exact(num, den);
    }
  }

  // Primitive part of the last non-zero remainder, times the content gcd.
  Polynomial cg = Polynomial::zero(a.vars());
  for (std::uint32_t e = 0; e <= deg_v(G2, v); ++e) {
    const Polynomial ce = coeff_of(G2, v, e);
    if (!ce.is_zero()) cg = gcd_z(cg, ce);
  }
  return c * Polynomial::div_exact(G2, cg);
}

} // namespace

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b) {
  require_same_vars(a.vars(), b.vars());
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial r = a;
  Polynomial q(a.vars());
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  const std::size_t n = a.vars().size();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!monomial_divides(lb, lr)) throw InvalidInput("polynomial division is not exact");
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = lr[i] - lb[i];
    const Rational c = r.leading_coefficient() / cb;
    q.add_term(m, c);
    r -= Polynomial::monomial(a.vars(), m, c) * b;
  }
  return q;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  require_same_vars(a.vars(), b.vars());
  auto normalize = [](Polynomial p) {
    if (p.is_zero()) return p;
    p = p.primitive_part();
    if (p.leading_coefficient() < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  return normalize(gcd_z(a.primitive_part(), b.primitive_part()));
}

namespace {

std::string monomial_text(const Vars& vars, const Monomial& m, bool latex) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty() && !latex) out += "*";
    if (latex) {
      const std::string& n = vars.name(i);
      std::size_t split = n.size();
      while (split > 0 && std::isdigit(static_cast<unsigned char>(n[split - 1]))) --split;
      if (split > 0 && split < n.size())
        out += n.substr(0, split) + "_" + (n.size() - split > 1 ? "{" + n.substr(split) + "}" : n.substr(split));
      else
        out += n;
    } else {
      out += vars.name(i);
    }
    if (m[i] > 1) {
      if (latex && m[i] > 9)
        out += "^{" + std::to_string(m[i]) + "}";
      else
        out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

std::string polynomial_text(const Polynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mono = monomial_text(p.vars(), m, latex);
    if (mono.empty()) {
      out += latex ? rational_to_latex(a) : rational_to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += (latex ? rational_to_latex(a) : rational_to_string(a) + "*") + mono;
    }
  }
  return out;
}

} // namespace

std::string Polynomial::to_string() const { return polynomial_text(*this, false); }
std::string Polynomial::to_latex() const { return polynomial_text(*this, true); }

std::size_t complexity(const Polynomial& p) {
  std::size_t s = 1;
  for (const auto& [m, c] : p.terms()) s += complexity(c) + 1;
  return s;
}

} // namespace liederiv
