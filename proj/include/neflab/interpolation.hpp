#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace neflab {

// Linear systems of bidegree (1, n) on P1 x P1 through m symmetric pairs
// {(p, q), (q, p)} and r further points. Dimensions are projective; -1 means
// the system is empty.
struct InterpolationQuery {
  int n = 0;
  int m = 0;
  int r = 0;
  std::uint64_t field = 32003;  // prime modulus, or 0 for the rationals
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultPrime = 32003;
inline constexpr int kMaxResamples = 32;

int expected_dim(int n, int m, int r);
bool is_exceptional(int n, int m, int r);

struct SampleResult {
  int dim = 0;
  int rank = 0;
  std::uint64_t seed_used = 0;  // seed after any resampling
};

SampleResult sample(const InterpolationQuery& q);

// The affine points behind sample(q): pairs first (each followed by its
// swap), then the r single points. Coordinates lie in [0, p) or, over the
// rationals, in [0, 10^6).
std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_points(const InterpolationQuery& q);
int sample_dim(const InterpolationQuery& q);

struct CellReport {
  int n = 0, m = 0, r = 0;
  int expected = 0;
  std::vector<int> samples;
  int matches = 0;
  bool exceptional = false;
  bool lower_bound_ok = true;
  bool pass = true;
  std::string note;
};

struct LemmaReport {
  std::uint64_t field = kDefaultPrime;
  int trials = 0;
  std::vector<CellReport> cells;
  std::vector<std::string> failures;
  bool all_pass() const { return failures.empty(); }
};

struct VerifyOptions {
  int n_max = 5;
  int m_slack = 2;
  int r_max = 2;
  int trials = 10;
  std::uint64_t field = kDefaultPrime;
  std::uint64_t seed = 1;
  // a generic cell passes when matches * den >= trials * num
  int pass_num = 9;
  int pass_den = 10;
};

LemmaReport verify_lemma(const VerifyOptions& opts);

}  // namespace neflab
