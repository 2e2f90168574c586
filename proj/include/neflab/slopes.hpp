#pragma once

#include "neflab/neron_severi.hpp"
#include "neflab/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace neflab {

// Numerical data of a (possibly twisted) vector bundle on a curve. mu_min is
// asserted by the caller; it is never computed here.
struct TwistedBundleData {
  Integer rank = 1;
  Rational degree = 0;
  std::optional<Rational> mu_min;
};

Rational slope(const TwistedBundleData& b);

// Twist by an R-divisor class of degree lambda.
TwistedBundleData twist(const TwistedBundleData& b, const Rational& lambda);
TwistedBundleData tensor(const TwistedBundleData& b, const TwistedBundleData& c);

// Kernel of the evaluation map of a line bundle of degree d with h^1 = h1.
TwistedBundleData kernel_bundle_data(int g, int d, int h1, bool semistable = true);

// -n (1 + n g / (n a + 1 - g - n)); needs n a + 1 - g - n > 0.
Rational higher_conormal_slope(int g, const Rational& a, int n);
TwistedBundleData higher_conormal_data(int g, const Rational& a, int n);

TwistedBundleData principal_parts_data(int g, const Rational& degL, int n);

// (-n^2 a - C(n+1,2)(2g-2)) / (n^2 (1-a) + n (1-g)); needs a positive denominator.
Rational t_bundle_normalized_slope(int g, const Rational& a, int n);

// Limits as n grows of higher_conormal_slope / n and of the T-bundle sequence.
Rational conormal_limit(int g, const Rational& a);
Rational t_bundle_limit(int g, const Rational& a);

// alpha xi + beta f on P(V) is nef iff alpha >= 0 and beta >= -alpha mu_min.
bool projective_bundle_nef(const TwistedBundleData& b, const Rational& coeff_xi,
                           const Rational& coeff_f);

Rational exterior_power_slope(const TwistedBundleData& b, int k);
TwistedBundleData exterior_power_data(const TwistedBundleData& b, int k);

Integer binomial(int n, int k);

enum class CnClause { Clause_i, Clause_ii, NotApplicable };
std::string to_string(CnClause c);

CnClause mainCn_condition(int g, int n, int d);
std::vector<CnClause> mainCn_applicable_clauses(int g, int n, int d);

// The class certified when mainCn_condition applies, built by lifting the
// mixed class ((n-1)d/(d-g), d, -1, -1).
CnClass mainCn_class(int g, int n, const Rational& d);

// Superadditive-sequence helper: for a_n with a_{m+n} >= a_m + a_n the ratios
// a_n / n increase toward sup a_n / n.
std::vector<Rational> normalized_terms(const std::function<Rational(int)>& seq,
                                       const std::vector<int>& indices);
bool strictly_decreasing(const std::vector<Rational>& values);
std::vector<Rational> distances_to(const std::vector<Rational>& values, const Rational& limit);

}  // namespace neflab
