#include "neflab/interpolation.hpp"

#include "neflab/rational.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace neflab {

int expected_dim(int n, int m, int r) {
  if (n < 0 || m < 0 || r < 0) throw std::invalid_argument("expected_dim needs n, m, r >= 0");
  if (is_exceptional(n, m, r)) return 0;
  return std::max(2 * n + 1 - 2 * m - r, -1);
}

bool is_exceptional(int n, int m, int r) { return n == 1 && m == 2 && r == 0; }

namespace {

using Point = std::pair<std::uint64_t, std::uint64_t>;

constexpr std::uint64_t kRationalRange = 1'000'000;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t out = 1 % p;
  while (e) {
    if (e & 1) out = mulmod(out, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return out;
}

// Points of the affine chart; false if two coincide or a pair lies on the diagonal.
bool draw_points(const InterpolationQuery& q, std::uint64_t seed, std::vector<Point>& pts) {
  std::mt19937_64 rng(seed);
  const std::uint64_t range = q.field == 0 ? kRationalRange : q.field;
  std::uniform_int_distribution<std::uint64_t> coord(0, range - 1);
  pts.clear();
  for (int i = 0; i < q.m; ++i) {
    std::uint64_t x = coord(rng), y = coord(rng);
    if (x == y) return false;
    pts.emplace_back(x, y);
    pts.emplace_back(y, x);
  }
  for (int i = 0; i < q.r; ++i) {
    std::uint64_t x = coord(rng), y = coord(rng);
    pts.emplace_back(x, y);
  }
  std::set<Point> seen(pts.begin(), pts.end());
  return seen.size() == pts.size();
}

// Columns: x^alpha y^i with alpha in {0,1}, i in 0..n.
int rank_mod_p(const std::vector<Point>& pts, int n, std::uint64_t p) {
  const std::size_t cols = 2 * static_cast<std::size_t>(n + 1);
  std::vector<std::vector<std::uint64_t>> mat;
  for (const auto& [x, y] : pts) {
    std::vector<std::uint64_t> row(cols);
    std::uint64_t yp = 1;
    for (int i = 0; i <= n; ++i) {
      row[i] = yp;
      row[n + 1 + i] = mulmod(x % p, yp, p);
      yp = mulmod(yp, y % p, p);
    }
    mat.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(mat.size()); ++c) {
    std::size_t piv = rank;
    while (piv < mat.size() && mat[piv][c] == 0) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[piv], mat[rank]);
    const std::uint64_t inv = powmod(mat[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < mat.size(); ++r) {
      if (mat[r][c] == 0) continue;
      const std::uint64_t f = mulmod(mat[r][c], inv, p);
      for (std::size_t k = c; k < cols; ++k)
        mat[r][k] = (mat[r][k] + p - mulmod(f, mat[rank][k], p)) % p;
    }
    ++rank;
  }
  return rank;
}

int rank_rational(const std::vector<Point>& pts, int n) {
  const std::size_t cols = 2 * static_cast<std::size_t>(n + 1);
  std::vector<std::vector<Rational>> mat;
  for (const auto& [x, y] : pts) {
    std::vector<Rational> row(cols);
    Rational yp = 1;
    for (int i = 0; i <= n; ++i) {
      row[i] = yp;
      row[n + 1 + i] = Rational(static_cast<unsigned long>(x)) * yp;
      yp *= Rational(static_cast<unsigned long>(y));
    }
    mat.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(mat.size()); ++c) {
    std::size_t piv = rank;
    while (piv < mat.size() && mat[piv][c] == 0) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[piv], mat[rank]);
    for (std::size_t r = rank + 1; r < mat.size(); ++r) {
      if (mat[r][c] == 0) continue;
      const Rational f = mat[r][c] / mat[rank][c];
      for (std::size_t k = c; k < cols; ++k) mat[r][k] -= f * mat[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

SampleResult sample(const InterpolationQuery& q) {
  if (q.n < 0 || q.m < 0 || q.r < 0) throw std::invalid_argument("sample_dim needs n, m, r >= 0");
  if (q.field != 0 && (q.field <= 1000 || !is_prime(q.field)))
    throw std::invalid_argument("field must be 0 (rationals) or a prime above 1000");

  std::vector<Point> pts;
  std::uint64_t seed = q.seed;
  for (int attempt = 0; attempt <= kMaxResamples; ++attempt, ++seed) {
    if (!draw_points(q, seed, pts)) continue;
    const int rank = q.field == 0 ? rank_rational(pts, q.n) : rank_mod_p(pts, q.n, q.field);
    return {2 * (q.n + 1) - 1 - rank, rank, seed};
  }
  throw std::runtime_error("interpolation sample stayed degenerate after " +
                           std::to_string(kMaxResamples) + " resamples");
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_points(const InterpolationQuery& q) {
  std::vector<Point> pts;
  draw_points(q, sample(q).seed_used, pts);
  return pts;
}

int sample_dim(const InterpolationQuery& q) { return sample(q).dim; }

LemmaReport verify_lemma(const VerifyOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("verify_lemma needs trials >= 1");
  if (opts.n_max < 0 || opts.m_slack < 0 || opts.r_max < 0)
    throw std::invalid_argument("verify_lemma needs nonnegative bounds");

  LemmaReport report;
  report.field = opts.field;
  report.trials = opts.trials;
  std::uint64_t cell_index = 0;
  for (int n = 0; n <= opts.n_max; ++n)
    for (int m = 0; m <= n + opts.m_slack; ++m)
      for (int r = 0; r <= opts.r_max; ++r, ++cell_index) {
        CellReport cell;
        cell.n = n;
        cell.m = m;
        cell.r = r;
        cell.expected = expected_dim(n, m, r);
        cell.exceptional = is_exceptional(n, m, r);
        for (int t = 0; t < opts.trials; ++t) {
          InterpolationQuery q{n, m, r, opts.field, opts.seed * 1'000'003ULL + cell_index * 4096 + t};
          const int d = sample_dim(q);
          cell.samples.push_back(d);
          if (d == cell.expected) ++cell.matches;
          if (d < cell.expected) cell.lower_bound_ok = false;
        }
        const std::string where =
            "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r) + ")";
        if (!cell.lower_bound_ok) {
          cell.pass = false;
          report.failures.push_back(where + ": sample below expected dimension");
        }
        if (cell.exceptional) {
          cell.note = cell.matches == opts.trials ? "exceptional, matched" : "exceptional, mismatch";
          if (cell.matches != opts.trials) {
            cell.pass = false;
            report.failures.push_back(where + ": exceptional cell not matched in every trial");
          }
        } else if (static_cast<long>(cell.matches) * opts.pass_den <
                   static_cast<long>(opts.trials) * opts.pass_num) {
          cell.pass = false;
          report.failures.push_back(where + ": expected dimension matched in " +
                                    std::to_string(cell.matches) + "/" +
                                    std::to_string(opts.trials) + " trials");
        }
        report.cells.push_back(std::move(cell));
      }
  return report;
}

}  // namespace neflab
