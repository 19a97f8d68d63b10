#include "pencilrank/rational.hpp"

#include <cmath>
#include <ostream>

#include "pencilrank/errors.hpp"

namespace pencilrank {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Integer num, den;
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den) ||
        text[slash + 1] == '-' || text[slash + 1] == '+') {
      throw InputError("malformed rational literal '" + std::string(text) + "'");
    }
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  Integer whole;
  if (parse_integer(text, whole)) return Rational(whole);

  // Decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  const auto e = body.find_first_of("eE");
  if (e != std::string_view::npos) {
    Integer exp_value;
    if (!parse_integer(body.substr(e + 1), exp_value) || !exp_value.fits_slong_p()) {
      throw InputError("malformed number '" + std::string(text) + "'");
    }
    exponent = exp_value.get_si();
    body = body.substr(0, e);
  }
  std::string mantissa;
  bool seen_dot = false;
  bool any_digit = false;
  for (char c : body) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      mantissa.push_back(c);
      any_digit = true;
      if (seen_dot) --exponent;
    } else {
      throw InputError("malformed number '" + std::string(text) + "'");
    }
  }
  if (!any_digit) throw InputError("malformed number '" + std::string(text) + "'");
  if (exponent > 4096 || exponent < -4096) throw InputError("exponent out of range in '" + std::string(text) + "'");
  Integer m(mantissa, 10);
  if (negative) m = -m;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? Rational(Integer(m * scale)) : Rational(m, scale);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw InputError("non-finite double");
  return Rational(mpq_class(value));
}

Rational Rational::inverse() const {
  if (is_zero()) throw InputError("inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const { return q_.get_str(10); }

std::string Rational::to_decimal(int digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = (q_.get_num() * scale);
  Integer quotient;
  mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), q_.get_den_mpz_t());
  const bool negative = sign() < 0;
  std::string text = Integer(::abs(quotient)).get_str(10);
  if (static_cast<int>(text.size()) <= digits) text.insert(0, digits + 1 - text.size(), '0');
  if (digits > 0) text.insert(text.size() - digits, ".");
  return negative ? "-" + text : text;
}

std::size_t Rational::hash() const {
  const std::string text = to_string();
  return std::hash<std::string>{}(text);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

bool rational_reconstruction(double value, double tolerance, long max_denominator, Rational& out) {
  if (!std::isfinite(value)) return false;
  // Continued-fraction convergents h/k.
  long double x = value;
  Integer h_prev = 1, h = static_cast<long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  long double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::fabs(static_cast<double>(Rational(h, k).to_double() - value)) <= tolerance) {
      out = Rational(h, k);
      return true;
    }
    if (frac < 1e-18L) break;
    const long double inv = 1.0L / frac;
    const long a = static_cast<long>(std::floor(inv));
    frac = inv - a;
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h; h = h_next;
    k_prev = k; k = k_next;
  }
  if (std::fabs(Rational(h, k).to_double() - value) <= tolerance) {
    out = Rational(h, k);
    return true;
  }
  return false;
}

}  // namespace pencilrank
