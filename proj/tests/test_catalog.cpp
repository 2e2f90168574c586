#include "neflab/catalog.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace neflab;
using testing_support::Gen;
namespace oracle = testing_support::oracle;

namespace {

bool has_sample(const Catalog& cat, const SurfaceClass& d) {
  for (const auto& s : cat.samples())
    if (s.cls == d) return true;
  return false;
}

std::set<std::pair<std::string, bool>> ids(const Catalog& cat) {
  std::set<std::pair<std::string, bool>> out;
  for (const auto& gen : cat.generators()) out.insert({gen.id, gen.mirrored});
  return out;
}

// pairings with f1, f2, delta and the square
bool passes_universal(const SurfaceClass& d, int g) {
  return oracle::gram_pair(d, SurfaceClass::f1(), g) >= 0 &&
         oracle::gram_pair(d, SurfaceClass::f2(), g) >= 0 &&
         oracle::gram_pair(d, SurfaceClass::diagonal(), g) >= 0 && oracle::gram_pair(d, d, g) >= 0;
}

std::vector<GenusContext> contexts_for(int g) {
  std::vector<GenusContext> out{GenusContext::arbitrary(g), GenusContext::general(g),
                                GenusContext::very_general(g)};
  for (int d = 2; d <= 5; ++d) out.push_back(GenusContext::simple_cover(g, d));
  return out;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("generator examples") {
    const Catalog vg(GenusContext::very_general(10));
    CHECK(has_sample(vg, {2, 11, -1}));
    CHECK(vg.find("very-general-a2", false) != nullptr);

    const Catalog arb(GenusContext::arbitrary(10));
    auto v = arb.instantiate("vojta", false, 2);
    REQUIRE(v);
    CHECK(*v == SurfaceClass{2, 20, -1});
    auto vm = arb.instantiate("vojta", true, 2);
    REQUIRE(vm);
    CHECK(*vm == SurfaceClass{20, 2, -1});
    auto j = arb.instantiate("jacobian", false, 2);
    REQUIRE(j);
    CHECK(*j == SurfaceClass{2, 101, -1});

    const Catalog vg2(GenusContext::very_general(2));
    CHECK(vg2.find("very-general-a2", false) == nullptr);
    CHECK_FALSE(has_sample(vg2, {2, 3, -1}));
  }

  TEST_CASE("general-curve families are encoded literally") {
    const Catalog gen(GenusContext::general(10));
    auto i16 = gen.instantiate("general-i", false, 16);
    REQUIRE(i16);
    CHECK(*i16 == SurfaceClass{16, frac(8, 3), -1});
    CHECK_FALSE(gen.instantiate("general-i", false, 15));
    CHECK_FALSE(gen.instantiate("general-i", false, frac(33, 2)));
    auto ii18 = gen.instantiate("general-ii", false, 18);
    REQUIRE(ii18);
    CHECK(*ii18 == SurfaceClass{18, 2, -1});
    CHECK(gen.instantiate("general-ii", false, 15));
    CHECK_FALSE(gen.instantiate("general-ii", false, 14));
    CHECK_FALSE(gen.instantiate("general-ii", false, 19));
    auto iii = gen.instantiate("general-iii", false, 0);
    REQUIRE(iii);
    CHECK(*iii == SurfaceClass{12, 3, -1});
    CHECK(has_sample(gen, {16, frac(8, 3), -1}));
    CHECK(has_sample(gen, {18, 2, -1}));
    CHECK(has_sample(gen, {12, 3, -1}));

    CHECK(Catalog(GenusContext::general(9)).find("general-iii", false) == nullptr);
    CHECK(Catalog(GenusContext::general(2)).find("general-ii", false) == nullptr);
    CHECK(Catalog(GenusContext::general(2)).find("general-i", false) != nullptr);
    CHECK(Catalog(GenusContext::arbitrary(10)).find("general-i", false) == nullptr);
  }

  TEST_CASE("family domains") {
    const Catalog arb(GenusContext::arbitrary(5));
    CHECK_FALSE(arb.instantiate("vojta", false, 1));
    CHECK(arb.instantiate("vojta", false, frac(101, 100)));
    CHECK(arb.instantiate("vojta-mixed", false, 0));
    CHECK_FALSE(arb.instantiate("vojta-mixed", false, 1));
    CHECK_FALSE(arb.instantiate("vojta-mixed", false, -1));
    CHECK(arb.instantiate("diagonal-segment", false, 8));
    CHECK_FALSE(arb.instantiate("diagonal-segment", false, 9));
    CHECK_FALSE(arb.instantiate("theta", false, 1));
    CHECK_FALSE(arb.instantiate("nope", false, 0));
  }

  TEST_CASE("obstruction examples") {
    auto has_cover = [](const GenusContext& ctx, int d) {
      for (const auto& o : obstructions(ctx))
        if (o.kind == Obstruction::Kind::CoverCurve && o.d == d) {
          CHECK(o.cls == SurfaceClass{d, d, -1});
          return true;
        }
      return false;
    };
    CHECK(has_cover(GenusContext::arbitrary(2), 2));
    CHECK(has_cover(GenusContext::very_general(2), 2));
    CHECK(has_cover(GenusContext::simple_cover(10, 3), 3));
    CHECK_FALSE(has_cover(GenusContext::simple_cover(10, 5), 5));
    CHECK(obstructions(GenusContext::very_general(10)).size() == 4);
    CHECK(obstructions(GenusContext::general(10)).size() == 4);
  }

  TEST_CASE("cover degree bounds and the Ross coefficient") {
    CHECK(max_cover_degree(0) == 1);
    CHECK(max_cover_degree(1) == 2);
    CHECK(max_cover_degree(2) == 2);
    CHECK(max_cover_degree(9) == 4);
    CHECK(max_cover_degree(10) == 4);
    CHECK(region_sum_bound(10, 3) == 12);
    CHECK(region_sum_bound(10, 4) == frac(26, 3));
    for (int g = 1; g <= 40; ++g) {
      const Integer den = 1000000;
      const Rational r = ross_coefficient(g, den);
      CHECK((r - 1) * (r - 1) >= g + 1);
      const Rational below = r - 1 - Rational(1) / Rational(den);
      CHECK(below * below < g + 1);
    }
    const Catalog sc(GenusContext::simple_cover(10, 5));
    CHECK_FALSE(sc.notes().empty());
    CHECK(sc.find("region-5", false) == nullptr);
  }

  TEST_CASE("parse_context") {
    CHECK(parse_context(3, "arbitrary") == GenusContext::arbitrary(3));
    CHECK(parse_context(3, "general") == GenusContext::general(3));
    CHECK(parse_context(3, "very-general") == GenusContext::very_general(3));
    CHECK(parse_context(3, "simple-cover:3") == GenusContext::simple_cover(3, 3));
    CHECK(parse_context(3, "hyperelliptic") == GenusContext::simple_cover(3, 2));
    for (const char* bad : {"", "generic", "simple-cover:", "simple-cover:1", "simple-cover:x"})
      CHECK_THROWS(parse_context(3, bad));
    CHECK_THROWS(parse_context(-1, "arbitrary"));
  }

  TEST_CASE("context monotonicity of generators") {
    for (int g = 0; g <= 20; ++g) {
      const Catalog a(GenusContext::arbitrary(g)), ge(GenusContext::general(g)),
          vg(GenusContext::very_general(g));
      const auto ia = ids(a), ig = ids(ge), iv = ids(vg);
      CHECK(std::includes(ig.begin(), ig.end(), ia.begin(), ia.end()));
      CHECK(std::includes(iv.begin(), iv.end(), ig.begin(), ig.end()));
      for (const auto& s : a.samples()) CHECK(has_sample(ge, s.cls));
      for (const auto& s : ge.samples()) CHECK(has_sample(vg, s.cls));
    }
  }

  TEST_CASE("samples are closed under swap") {
    for (int g : {2, 5, 10}) {
      const Catalog vg(GenusContext::very_general(g));
      for (const auto& s : vg.samples()) CHECK(has_sample(vg, swap(s.cls)));
    }
  }

  TEST_CASE("every instance passes the universal and context obstructions") {
    for (int g = 2; g <= 30; ++g)
      for (const auto& ctx : contexts_for(g)) {
        const Catalog cat(ctx, {1000000, 2});
        for (const auto& s : cat.samples()) {
          CHECK(passes_universal(s.cls, g));
          for (const auto& o : cat.obstructions())
            if (o.cls) CHECK(oracle::gram_pair(s.cls, *o.cls, g) >= 0);
        }
      }
  }

  TEST_CASE("instances pair nonnegatively with each other") {
    for (int g : {2, 3, 4, 9, 10, 16}) {
      const Catalog cat(GenusContext::very_general(g), {1000000, 2});
      const auto& s = cat.samples();
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i; j < s.size(); ++j) CHECK(oracle::gram_pair(s[i].cls, s[j].cls, g) >= 0);
    }
  }

  TEST_CASE("region boundary is orthogonal to the cover curve") {
    Gen gen(21);
    for (int t = 0; t < 300; ++t) {
      const int g = static_cast<int>(gen.integer(1, 60));
      const int d = static_cast<int>(gen.integer(2, max_cover_degree(g)));
      const SurfaceClass td{d, d, -1};
      const Rational a = gen.rational(50, 7);
      const Rational b = region_sum_bound(g, d) - a;
      CHECK(oracle::gram_pair({a, b, -1}, td, g) == 0);
      const Rational eps = gen.nonneg_rational(10, 9) + Rational(1) / 100;
      CHECK(oracle::gram_pair({a, b + eps, -1}, td, g) > 0);
      CHECK(oracle::gram_pair({a, b - eps, -1}, td, g) < 0);
    }
  }

  TEST_CASE("perfect squares touch the conjectural boundary") {
    for (int k = 1; k <= 7; ++k) {
      const int g = k * k;
      const Catalog vg(GenusContext::very_general(g));
      const Rational a = 1 + k;
      CHECK(vg.find("region-" + std::to_string(k + 1), false) != nullptr);
      CHECK(a >= k + 1);
      CHECK(2 * a >= region_sum_bound(g, k + 1));
      CHECK((a - 1) * (a - 1) == g);
    }
  }

  TEST_CASE("boundary examples") {
    auto at = [](const GenusContext& ctx, const Rational& a) {
      auto s = boundary_samples(ctx, a, a, 1);
      REQUIRE(s.size() == 1);
      return s[0].b_min;
    };
    CHECK(at(GenusContext::very_general(10), 2) == 11);
    CHECK(at(GenusContext::very_general(10), 3) == 9);
    CHECK(at(GenusContext::very_general(10), 4) == frac(14, 3));
    CHECK(at(GenusContext::arbitrary(10), 4) == frac(94, 3));
    CHECK(at(GenusContext::arbitrary(10), 2) == 20);
    CHECK_THROWS(boundary_samples(GenusContext::arbitrary(10), 1, 3, 1));
    CHECK_THROWS(boundary_samples(GenusContext::arbitrary(10), 2, 3, 0));
    CHECK(boundary_samples(GenusContext::arbitrary(0), 2, 3, 1).empty());
  }

  TEST_CASE("boundary values are attained by instances or regions") {
    for (int g : {2, 5, 10}) {
      const Catalog vg(GenusContext::very_general(g));
      for (const auto& s : boundary_samples(vg, frac(3, 2), 2 * g, frac(1, 2))) {
        // the least b never undercuts the universal necessary conditions
        CHECK(passes_universal({s.a, s.b_min, -1}, g));
      }
    }
  }

  TEST_CASE("lower chain is a convex staircase of instances") {
    for (int g : {2, 4, 10}) {
      const Catalog vg(GenusContext::very_general(g));
      for (int sign : {-1, 1}) {
        const auto chain = lower_chain(vg, sign);
        for (std::size_t i = 1; i < chain.size(); ++i) {
          CHECK(chain[i].a > chain[i - 1].a);
          CHECK(chain[i].b < chain[i - 1].b);
        }
        for (std::size_t i = 2; i < chain.size(); ++i) {
          const Rational cross = (chain[i - 1].a - chain[i - 2].a) * (chain[i].b - chain[i - 2].b) -
                                 (chain[i - 1].b - chain[i - 2].b) * (chain[i].a - chain[i - 2].a);
          CHECK(cross > 0);
        }
        for (const auto& p : chain) {
          const auto& c = p.source.cls;
          CHECK(c.a / abs(c.c) == p.a);
          CHECK(c.b / abs(c.c) == p.b);
        }
      }
    }
  }
}
