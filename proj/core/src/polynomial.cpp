#include "pencilrank/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "pencilrank/errors.hpp"

namespace pencilrank {

PolyQ::PolyQ(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

PolyQ::PolyQ(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

void PolyQ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::linear(const Rational& c0, const Rational& c1) { return PolyQ({c0, c1}); }

PolyQ PolyQ::from_roots(const std::vector<Rational>& roots) {
  PolyQ p = constant(1);
  for (const auto& r : roots) p *= linear(-r, 1);
  return p;
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rational& PolyQ::leading() const {
  if (c_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational PolyQ::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double PolyQ::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
  if (c_.empty()) return {};
  const Rational inv = c_.back().inverse();
  PolyQ out = *this;
  for (auto& x : out.c_) x *= inv;
  return out;
}

std::vector<Integer> PolyQ::primitive_integer() const {
  Integer den_lcm = 1;
  for (const auto& x : c_) {
    Integer d = x.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(c_.size());
  Integer content = 0;
  for (const auto& x : c_) {
    Integer v = x.numerator() * (den_lcm / x.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content == 0) return out;
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

PolyQ PolyQ::reversed(int as_degree) const {
  if (as_degree < degree()) throw InternalError("reversal degree below polynomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(as_degree) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(as_degree) - i] = c_[i];
  return PolyQ(std::move(v));
}

PolyQ PolyQ::shifted(const Rational& shift) const {
  PolyQ acc;
  const PolyQ x = linear(shift, 1);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + constant(*it);
  return acc;
}

PolyQ PolyQ::mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                    int degree_hint) const {
  if (degree_hint < degree()) throw InternalError("mobius degree hint below polynomial degree");
  const PolyQ num = linear(b, a);
  const PolyQ den = linear(d, c);
  PolyQ out;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
    out += c_[static_cast<std::size_t>(i)] * poly_pow(num, static_cast<unsigned>(i)) *
           poly_pow(den, static_cast<unsigned>(degree_hint - i));
  }
  return out;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

PolyQ operator-(const PolyQ& a) { return a * Rational(-1); }

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = b.leading().inverse();
  const auto& bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + b.degree())] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ operator/(const PolyQ& a, const PolyQ& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).second; }

bool divides(const PolyQ& d, const PolyQ& p) {
  if (d.is_zero()) return p.is_zero();
  return (p % d).is_zero();
}

PolyQ poly_gcd(const PolyQ& p, const PolyQ& q) {
  PolyQ a = p, b = q;
  while (!b.is_zero()) {
    PolyQ r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

PolyQ poly_lcm(const PolyQ& p, const PolyQ& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return (p * q / poly_gcd(p, q)).monic();
}

ExtendedGcd poly_extended_gcd(const PolyQ& p, const PolyQ& q) {
  PolyQ r0 = p, r1 = q;
  PolyQ s0 = PolyQ::constant(1), s1;
  PolyQ t0, t1 = PolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    PolyQ s2 = s0 - quot * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    PolyQ t2 = t0 - quot * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {PolyQ(), PolyQ(), PolyQ()};
  const Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

PolyQ poly_pow(const PolyQ& p, unsigned exponent) {
  PolyQ result = PolyQ::constant(1);
  PolyQ base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

PolyQ squarefree_part(const PolyQ& p) {
  if (p.is_zero()) return {};
  if (p.degree() == 0) return PolyQ::constant(1);
  return (p / poly_gcd(p, p.derivative())).monic();
}

std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p) {
  std::vector<std::pair<PolyQ, int>> out;
  if (p.degree() <= 0) return out;
  const PolyQ f = p.monic();
  const PolyQ fp = f.derivative();
  PolyQ a = poly_gcd(f, fp);
  PolyQ b = f / a;
  PolyQ c = fp / a;
  PolyQ d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    PolyQ g = poly_gcd(b, d);
    b = b / g;
    c = d / g;
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

int multiplicity(const PolyQ& f, const PolyQ& p) {
  if (f.degree() <= 0 || p.is_zero()) throw InputError("multiplicity needs nonconstant f and nonzero p");
  int e = 0;
  PolyQ rest = p;
  while (true) {
    auto [q, r] = divmod(rest, f);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++e;
  }
  return e;
}

std::string PolyQ::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      if (!mag.is_integer() && i > 0) os << "(" << mag << ")";
      else os << mag;
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace pencilrank
