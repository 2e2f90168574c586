#include "neflab/interpolation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace neflab;
namespace oracle = testing_support::oracle;

TEST_SUITE("interpolation") {
  TEST_CASE("expected dimensions") {
    CHECK(expected_dim(1, 1, 0) == 1);
    CHECK(expected_dim(1, 2, 0) == 0);
    CHECK(expected_dim(3, 2, 0) == 3);
    CHECK(expected_dim(4, 5, 0) == -1);
    CHECK(expected_dim(0, 1, 0) == -1);
    CHECK(expected_dim(0, 0, 0) == 1);
    CHECK(expected_dim(2, 0, 5) == 0);
    CHECK(is_exceptional(1, 2, 0));
    CHECK_FALSE(is_exceptional(1, 2, 1));
    CHECK_THROWS(expected_dim(-1, 0, 0));
  }

  TEST_CASE("sample examples") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      CHECK(sample_dim({1, 2, 0, kDefaultPrime, seed}) == 0);
      CHECK(sample_dim({1, 2, 0, 0, seed}) == 0);
    }
    CHECK(sample_dim({2, 2, 0, kDefaultPrime, 7}) == 1);
    CHECK(sample_dim({2, 2, 0, 0, 7}) == 1);
    CHECK(sample_dim({4, 5, 0, kDefaultPrime, 3}) == -1);
    CHECK(sample_dim({0, 1, 0, kDefaultPrime, 3}) == -1);
  }

  TEST_CASE("field validation") {
    CHECK_THROWS(sample_dim({1, 1, 0, 997, 1}));
    CHECK_THROWS(sample_dim({1, 1, 0, 32004, 1}));
    CHECK_NOTHROW(sample_dim({1, 1, 0, 1009, 1}));
  }

  TEST_CASE("determinism, rank bound and semicontinuity") {
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= n + 2; ++m)
        for (int r = 0; r <= 2; ++r)
          for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
            const InterpolationQuery q{n, m, r, kDefaultPrime, seed};
            const auto a = sample(q), b = sample(q);
            CHECK(a.dim == b.dim);
            CHECK(a.seed_used == b.seed_used);
            CHECK(a.rank <= std::min(2 * (n + 1), 2 * m + r));
            CHECK(a.dim >= expected_dim(n, m, r));
          }
  }

  TEST_CASE("ranks agree with a fraction-free oracle") {
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= n + 2; ++m)
        for (int r = 0; r <= 2; ++r) {
          const InterpolationQuery rat{n, m, r, 0, 5};
          const auto pts = sample_points(rat);
          REQUIRE(pts.size() == static_cast<std::size_t>(2 * m + r));
          for (int i = 0; i < m; ++i) {
            CHECK(pts[2 * i].first == pts[2 * i + 1].second);
            CHECK(pts[2 * i].second == pts[2 * i + 1].first);
          }
          CHECK(sample(rat).rank == oracle::bareiss_rank(oracle::evaluation_matrix(pts, n)));

          // reduction mod p can only lose rank
          const InterpolationQuery modp{n, m, r, kDefaultPrime, 5};
          const auto ppts = sample_points(modp);
          CHECK(sample(modp).rank <= oracle::bareiss_rank(oracle::evaluation_matrix(ppts, n)));
        }
  }

  TEST_CASE("lemma report") {
    VerifyOptions opts;
    opts.n_max = 3;
    opts.trials = 5;
    const LemmaReport rep = verify_lemma(opts);
    CHECK(rep.all_pass());
    bool saw_exceptional = false;
    for (const auto& c : rep.cells) {
      CHECK(c.samples.size() == 5);
      if (c.exceptional) {
        saw_exceptional = true;
        CHECK(c.note == "exceptional, matched");
      }
    }
    CHECK(saw_exceptional);
    opts.trials = 0;
    CHECK_THROWS(verify_lemma(opts));
  }
}
