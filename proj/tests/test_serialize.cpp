#include "neflab/serialize.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace neflab;
using testing_support::Gen;

TEST_SUITE("serialize") {
  TEST_CASE("surface classes") {
    const SurfaceClass d = parse_surface_class(R"({"a":"2","b":"11","c":"-1"})");
    CHECK(d == SurfaceClass{2, 11, -1});
    CHECK(to_json(SurfaceClass{frac(1, 2), 3, -1}).dump() == R"({"a":"1/2","b":"3","c":"-1"})");
    CHECK(parse_surface_class(R"({"a":2,"b":"0.5","c":-1})") == SurfaceClass{2, frac(1, 2), -1});
    CHECK_THROWS(parse_surface_class(R"({"a":"2","b":"11"})"));
    CHECK_THROWS(parse_surface_class(R"({"a":"2","b":"x","c":"1"})"));
    CHECK_THROWS(parse_surface_class(R"({"a":2.5,"b":"1","c":"1"})"));
    CHECK_THROWS(parse_surface_class("not json"));
  }

  TEST_CASE("Cn classes round-trip") {
    Gen gen(71);
    for (int t = 0; t < 50; ++t) {
      const int n = static_cast<int>(gen.integer(2, 6));
      CnClass c(n);
      for (int i = 1; i <= n; ++i) c.f(i) = gen.rational(20, 6);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) c.delta(i, j) = gen.rational(20, 6);
      CHECK(cn_class_from_json(to_json(c)) == c);
    }
    CnClass c(3);
    c.delta(1, 2) = -1;
    const Json j = to_json(c);
    CHECK(j["n"] == 3);
    CHECK(j["delta"]["1,2"] == "-1");
    CHECK(j["delta"].size() == 3);
  }

  TEST_CASE("certificates round-trip and still replay") {
    Gen gen(72);
    int conic = 0;
    for (int g : {2, 5, 10}) {
      const Certifier cert(GenusContext::very_general(g));
      for (int t = 0; t < 150; ++t) {
        SurfaceClass d{gen.rational(3 * g, 2), gen.rational(3 * g, 2), gen.coin() ? -1 : 1};
        // midpoint of the degree 3 and 4 region corners needs a combination
        if (g == 10 && t == 0) d = {frac(7, 2), frac(41, 6), -1};
        const Verdict v = cert.certify(d);
        const auto* nef = std::get_if<CertifiedNef>(&v);
        if (!nef) continue;
        const Json j = to_json(nef->cert);
        const Certificate back = certificate_from_json(Json::parse(j.dump()));
        CHECK(to_json(back) == j);
        CHECK(cert.replay(d, back));
        if (std::holds_alternative<ConicCombination>(back)) ++conic;
      }
    }
    CHECK(conic > 0);
    CHECK_THROWS(certificate_from_json(Json{{"kind", "magic"}}));
  }

  TEST_CASE("verdict json") {
    const Json nef = to_json(certify({2, 11, -1}, GenusContext::very_general(10)));
    CHECK(nef["outcome"] == "certified-nef");
    CHECK(nef["certificate"]["kind"] == "dominance");
    const Json bad = to_json(certify({2, 3, -1}, GenusContext::arbitrary(2)));
    CHECK(bad["outcome"] == "certified-not-nef");
    CHECK(bad["witness"]["value"] == "-1");
    CHECK(bad["witness"]["kind"] == "cover-curve");
    const Json unk = to_json(certify({3, 6, -1}, GenusContext::very_general(10)));
    CHECK(unk["outcome"] == "unknown");
    for (auto k : {Obstruction::Kind::PairF1, Obstruction::Kind::CoverCurve, Obstruction::Kind::NegativeSquare})
      CHECK(obstruction_kind_from_string(to_string(k)) == k);
  }

  TEST_CASE("catalog dumps") {
    const Catalog cat(GenusContext::very_general(10));
    const Json j = catalog_json(cat);
    CHECK(j["context"]["level"] == "very-general");
    CHECK(j["generators"].size() == cat.generators().size());
    for (const auto& gen : j["generators"]) CHECK_FALSE(gen["provenance"].get<std::string>().empty());
    const std::string csv = catalog_csv(cat);
    CHECK(csv.rfind("id,mirrored,kind,a,b,c,param\n", 0) == 0);
    CHECK(csv.find("very-general-a2,false,ray,2,11,-1,0\n") != std::string::npos);
    CHECK(csv.find("region-3,false,region,3,9,-1,0\n") != std::string::npos);
  }

  TEST_CASE("reduction traces") {
    const Json j = to_json(reduce_symmetric_class(3, Base::P1xP1));
    CHECK(j["steps"].size() == 3);
    CHECK(j["final"]["text"] == "f1");
    CHECK(j["steps"][0]["operation"] == "cremona_p1p1(1,2)");
    for (const auto& s : j["steps"]) {
      CHECK(s["checksum"]["self_pairing"] == "0");
      CHECK(s["checksum"]["canonical_pairing"] == "-2");
    }
    CHECK(j["pairing_preserved"] == true);
  }
}
