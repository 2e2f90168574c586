#pragma once

#include "neflab/catalog.hpp"
#include "neflab/certifier.hpp"
#include "neflab/cremona.hpp"
#include "neflab/interpolation.hpp"
#include "neflab/neron_severi.hpp"
#include "neflab/slopes.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace neflab {

using Json = nlohmann::ordered_json;

// Rationals are written as strings ("-7/3"); numbers are accepted on input.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const SurfaceClass& d);
SurfaceClass surface_class_from_json(const Json& j);
SurfaceClass parse_surface_class(const std::string& text);

// {"n":3,"f":[...],"delta":{"1,2":...,...}}
Json to_json(const CnClass& d);
CnClass cn_class_from_json(const Json& j);

Json to_json(const MixedClass& m);
MixedClass mixed_class_from_json(const Json& j);

std::string level_name(const GenusContext& ctx);
Json to_json(const GenusContext& ctx);

std::string to_string(Obstruction::Kind kind);
Obstruction::Kind obstruction_kind_from_string(const std::string& text);

Json to_json(const GeneratorInstance& inst);
GeneratorInstance generator_instance_from_json(const Json& j);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const NotNefWitness& w);
Json to_json(const Verdict& v);

Json to_json(const NefGenerator& gen);
Json to_json(const Obstruction& obs);
Json catalog_json(const Catalog& catalog);
// id, mirrored, kind, a, b, c, param, provenance; one row per ray/region corner/sample
std::string catalog_csv(const Catalog& catalog);

Json to_json(const std::vector<BoundarySample>& samples);
std::string boundary_csv(const std::vector<BoundarySample>& samples);

Json to_json(const BlowupClass& d);
Json to_json(const ReductionTrace& trace);

Json to_json(const LemmaReport& report);

Json to_json(const TwistedBundleData& b);

}  // namespace neflab
