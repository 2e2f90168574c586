#include "neflab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace neflab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational");

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    out = Rational(Integer(std::string(num), 10), d);
    out.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    out = Rational(digits, scale);
    out.canonicalize();
  } else {
    if (!all_digits(body))
      throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    out = Rational(Integer(std::string(body), 10));
  }
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational sqrt_ceil(const Rational& value, const Integer& denominator) {
  if (value < 0) throw std::domain_error("sqrt_ceil of a negative value");
  if (denominator <= 0) throw std::domain_error("sqrt_ceil needs a positive denominator");
  // ceil(sqrt(v) * D) = ceil(sqrt(v * D^2)); bracket with the integer square root.
  Rational scaled = value * Rational(denominator * denominator);
  Integer target = ceil(scaled);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), target.get_mpz_t());
  // root = floor(sqrt(target)); nudge up until root^2 >= scaled
  while (Rational(root * root) < scaled) ++root;
  while (root > 0 && Rational((root - 1) * (root - 1)) >= scaled) --root;
  Rational out(root, denominator);
  out.canonicalize();
  return out;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace neflab
