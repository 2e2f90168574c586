#pragma once

// Seeded generators and independent oracles shared by the unit and
// acceptance tests. Nothing here calls the code under test.

#include "neflab/neron_severi.hpp"
#include "neflab/rational.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace testing_support {

using neflab::Integer;
using neflab::Rational;
using neflab::SurfaceClass;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // num / den with |num| <= num_max, 1 <= den <= den_max, in lowest terms.
  Rational rational(long num_max, long den_max) {
    Rational q(integer(-num_max, num_max), integer(1, den_max));
    q.canonicalize();
    return q;
  }

  Rational nonneg_rational(long num_max, long den_max) {
    Rational q(integer(0, num_max), integer(1, den_max));
    q.canonicalize();
    return q;
  }

  SurfaceClass surface(long num_max, long den_max) {
    return {rational(num_max, den_max), rational(num_max, den_max), rational(num_max, den_max)};
  }

  bool coin() { return integer(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

namespace oracle {

// Gram matrix of (f1, f2, delta).
inline Rational gram_pair(const SurfaceClass& d, const SurfaceClass& e, int g) {
  const std::array<Rational, 3> x{d.a, d.b, d.c}, y{e.a, e.b, e.c};
  const Rational m[3][3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, Rational(2 - 2 * g)}};
  Rational out = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out += x[i] * m[i][j] * y[j];
  return out;
}

// g = 0: delta = f1 + f2 on P1 x P1, whose effective cone is spanned by f1, f2;
// test against every i f1 + j f2 with 0 <= i, j <= 3.
inline bool nef_genus0(const SurfaceClass& d) {
  const Rational x = d.a + d.c, y = d.b + d.c;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      if (x * j + y * i < 0) return false;
  return true;
}

// g = 1: on an abelian surface nef = closure of the positive cone, i.e.
// D^2 >= 0 and D.H >= 0 for the ample H = f1 + f2.
inline bool nef_genus1(const SurfaceClass& d) {
  const SurfaceClass h{1, 1, 0};
  return gram_pair(d, d, 1) >= 0 && gram_pair(d, h, 1) >= 0;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int bareiss_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        m[r][k] = (m[r][k] * m[rank][c] - m[rank][k] * m[r][c]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

// Evaluation matrix of x^alpha y^i (alpha in {0,1}, i <= n), integer entries.
inline std::vector<std::vector<Integer>> evaluation_matrix(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pts, int n) {
  std::vector<std::vector<Integer>> m;
  for (const auto& [x, y] : pts) {
    std::vector<Integer> row;
    for (int alpha = 0; alpha <= 1; ++alpha) {
      for (int i = 0; i <= n; ++i) {
        Integer v = 1;
        for (int k = 0; k < i; ++k) v *= static_cast<unsigned long>(y);
        if (alpha) v *= static_cast<unsigned long>(x);
        row.push_back(v);
      }
    }
    m.push_back(std::move(row));
  }
  return m;
}

// Degree of the principal parts bundle from its filtration L, L(K), ..., L((n-1)K).
inline Rational principal_parts_degree(int g, const Rational& degL, int n) {
  Rational out = 0;
  for (int k = 0; k < n; ++k) out += degL + k * (2 * g - 2);
  return out;
}

}  // namespace oracle
}  // namespace testing_support
