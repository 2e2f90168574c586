#include "neflab/slopes.hpp"

#include <stdexcept>

namespace neflab {

Rational slope(const TwistedBundleData& b) {
  if (b.rank < 1) throw std::invalid_argument("slope needs rank >= 1");
  return b.degree / Rational(b.rank);
}

TwistedBundleData twist(const TwistedBundleData& b, const Rational& lambda) {
  TwistedBundleData out = b;
  out.degree += Rational(b.rank) * lambda;
  if (out.mu_min) *out.mu_min += lambda;
  return out;
}

TwistedBundleData tensor(const TwistedBundleData& b, const TwistedBundleData& c) {
  if (b.rank < 1 || c.rank < 1) throw std::invalid_argument("tensor needs rank >= 1");
  TwistedBundleData out;
  out.rank = b.rank * c.rank;
  out.degree = b.degree * Rational(c.rank) + c.degree * Rational(b.rank);
  if (b.mu_min && c.mu_min) out.mu_min = *b.mu_min + *c.mu_min;
  return out;
}

TwistedBundleData kernel_bundle_data(int g, int d, int h1, bool semistable) {
  if (d < 1) throw std::invalid_argument("kernel bundle needs d >= 1");
  const int rank = d - g + h1;
  if (rank < 1) throw std::invalid_argument("kernel bundle rank d - g + h1 must be positive");
  TwistedBundleData out{rank, Rational(-d), std::nullopt};
  if (semistable) out.mu_min = slope(out);
  return out;
}

namespace {

Rational conormal_rank(int g, const Rational& a, int n) {
  if (n < 1) throw std::invalid_argument("higher conormal bundle needs n >= 1");
  Rational rank = n * a + 1 - g - n;
  if (rank <= 0) throw std::invalid_argument("higher conormal rank n a + 1 - g - n must be positive");
  return rank;
}

}  // namespace

Rational higher_conormal_slope(int g, const Rational& a, int n) {
  const Rational rank = conormal_rank(g, a, n);
  return -n * (1 + Rational(n * g) / rank);
}

TwistedBundleData higher_conormal_data(int g, const Rational& a, int n) {
  const Rational rank = conormal_rank(g, a, n);
  if (rank.get_den() != 1) throw std::invalid_argument("higher conormal data needs integral rank");
  const Rational degree = -(Rational(n) * n * a + Rational(n) * (n - 1) * (g - 1));
  return {rank.get_num(), degree, std::nullopt};
}

TwistedBundleData principal_parts_data(int g, const Rational& degL, int n) {
  if (n < 1) throw std::invalid_argument("principal parts need n >= 1");
  return {n, n * degL + Rational(binomial(n, 2)) * (2 * g - 2), std::nullopt};
}

Rational t_bundle_normalized_slope(int g, const Rational& a, int n) {
  if (n < 1) throw std::invalid_argument("T-bundle slope needs n >= 1");
  const Rational den = Rational(n) * n * (1 - a) + n * (1 - g);
  if (den <= 0) throw std::invalid_argument("T-bundle slope denominator must be positive");
  const Rational num = -Rational(n) * n * a - Rational(binomial(n + 1, 2)) * (2 * g - 2);
  return num / den;
}

Rational conormal_limit(int g, const Rational& a) {
  if (a == 1) throw std::invalid_argument("conormal limit needs a != 1");
  return -(1 + g / (a - 1));
}

Rational t_bundle_limit(int g, const Rational& a) {
  if (a == 1) throw std::invalid_argument("T-bundle limit needs a != 1");
  return -(g / (1 - a) - 1);
}

bool projective_bundle_nef(const TwistedBundleData& b, const Rational& coeff_xi,
                           const Rational& coeff_f) {
  if (!b.mu_min) throw std::invalid_argument("projective_bundle_nef needs mu_min");
  return coeff_xi >= 0 && coeff_f >= -coeff_xi * *b.mu_min;
}

Rational exterior_power_slope(const TwistedBundleData& b, int k) {
  if (k < 1 || b.rank < k) throw std::invalid_argument("exterior power index out of range");
  return k * slope(b);
}

TwistedBundleData exterior_power_data(const TwistedBundleData& b, int k) {
  const Rational s = exterior_power_slope(b, k);
  const Integer rank = binomial(static_cast<int>(b.rank.get_si()), k);
  TwistedBundleData out{rank, s * Rational(rank), std::nullopt};
  if (b.mu_min) out.mu_min = k * *b.mu_min;
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::string to_string(CnClause c) {
  switch (c) {
    case CnClause::Clause_i: return "clause-i";
    case CnClause::Clause_ii: return "clause-ii";
    case CnClause::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

std::vector<CnClause> mainCn_applicable_clauses(int g, int n, int d) {
  if (g < 1 || n < 2) throw std::invalid_argument("mainCn_condition needs g >= 1 and n >= 2");
  std::vector<CnClause> out;
  if (d >= 2 * g + n || d >= std::max(2 * n + g, 2 * g)) out.push_back(CnClause::Clause_i);
  if (n >= 2 * g && d >= g + n - 1) out.push_back(CnClause::Clause_ii);
  return out;
}

CnClause mainCn_condition(int g, int n, int d) {
  auto all = mainCn_applicable_clauses(g, n, d);
  return all.empty() ? CnClause::NotApplicable : all.front();
}

CnClass mainCn_class(int g, int n, const Rational& d) {
  if (d <= g) throw std::invalid_argument("mainCn class needs d > g");
  MixedClass m{(n - 1) * d / (d - g), d, -1, -1};
  return lift_to_Cn(m, n);
}

std::vector<Rational> normalized_terms(const std::function<Rational(int)>& seq,
                                       const std::vector<int>& indices) {
  std::vector<Rational> out;
  for (int n : indices) {
    if (n < 1) throw std::invalid_argument("sequence indices start at 1");
    out.push_back(seq(n) / n);
  }
  return out;
}

bool strictly_decreasing(const std::vector<Rational>& values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] < values[i - 1])) return false;
  return true;
}

std::vector<Rational> distances_to(const std::vector<Rational>& values, const Rational& limit) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(abs(v - limit));
  return out;
}

}  // namespace neflab
