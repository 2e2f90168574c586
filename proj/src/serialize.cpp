#include "neflab/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace neflab {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(static_cast<unsigned long>(j.get<unsigned long long>()));
  throw std::invalid_argument("expected a rational string or an integer, got " + j.dump());
}

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

}  // namespace

Json to_json(const SurfaceClass& d) {
  return Json{{"a", rational_json(d.a)}, {"b", rational_json(d.b)}, {"c", rational_json(d.c)}};
}

SurfaceClass surface_class_from_json(const Json& j) {
  return {rational_from_json(member(j, "a")), rational_from_json(member(j, "b")),
          rational_from_json(member(j, "c"))};
}

SurfaceClass parse_surface_class(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("class is not valid JSON: ") + e.what());
  }
  return surface_class_from_json(j);
}

Json to_json(const CnClass& d) {
  Json delta = Json::object();
  const int n = d.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      delta[std::to_string(i) + "," + std::to_string(j)] = rational_json(d.delta(i, j));
  return Json{{"n", n}, {"f", rationals_json(d.f_coeffs())}, {"delta", delta}};
}

CnClass cn_class_from_json(const Json& j) {
  const int n = member(j, "n").get<int>();
  CnClass out(n);
  const auto f = rationals_from_json(member(j, "f"));
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("CnClass f has wrong length");
  for (int i = 1; i <= n; ++i) out.f(i) = f[i - 1];
  const Json& delta = member(j, "delta");
  if (!delta.is_object()) throw std::invalid_argument("CnClass delta must be an object");
  for (const auto& [key, value] : delta.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad delta key '" + key + "'");
    const int i = std::stoi(key.substr(0, comma));
    const int k = std::stoi(key.substr(comma + 1));
    out.delta(i, k) = rational_from_json(value);
  }
  return out;
}

Json to_json(const MixedClass& m) {
  return Json{{"f", rational_json(m.coeff_f)},
              {"qx", rational_json(m.coeff_qx)},
              {"qdelta_half", rational_json(m.coeff_qdelta_half)},
              {"z", rational_json(m.coeff_z)}};
}

MixedClass mixed_class_from_json(const Json& j) {
  return {rational_from_json(member(j, "f")), rational_from_json(member(j, "qx")),
          rational_from_json(member(j, "qdelta_half")), rational_from_json(member(j, "z"))};
}

std::string level_name(const GenusContext& ctx) {
  switch (ctx.level) {
    case Level::Arbitrary: return "arbitrary";
    case Level::General: return "general";
    case Level::VeryGeneral: return "very-general";
    case Level::SimpleCover: return "simple-cover:" + std::to_string(ctx.cover_degree);
  }
  return "arbitrary";
}

Json to_json(const GenusContext& ctx) { return Json{{"g", ctx.g}, {"level", level_name(ctx)}}; }

std::string to_string(Obstruction::Kind kind) {
  switch (kind) {
    case Obstruction::Kind::PairF1: return "pair-f1";
    case Obstruction::Kind::PairF2: return "pair-f2";
    case Obstruction::Kind::PairDiagonal: return "pair-diagonal";
    case Obstruction::Kind::NegativeSquare: return "negative-square";
    case Obstruction::Kind::CoverCurve: return "cover-curve";
  }
  return "pair-f1";
}

Obstruction::Kind obstruction_kind_from_string(const std::string& text) {
  for (auto k : {Obstruction::Kind::PairF1, Obstruction::Kind::PairF2, Obstruction::Kind::PairDiagonal,
                 Obstruction::Kind::NegativeSquare, Obstruction::Kind::CoverCurve})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown obstruction kind '" + text + "'");
}

Json to_json(const GeneratorInstance& inst) {
  return Json{{"id", inst.id},
              {"mirrored", inst.mirrored},
              {"param", rational_json(inst.param)},
              {"class", to_json(inst.cls)}};
}

GeneratorInstance generator_instance_from_json(const Json& j) {
  return {member(j, "id").get<std::string>(), member(j, "mirrored").get<bool>(),
          rational_from_json(member(j, "param")), surface_class_from_json(member(j, "class"))};
}

Json to_json(const Certificate& cert) {
  Json out{{"kind", certificate_kind(cert)}};
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ConicCombination>) {
          Json terms = Json::array();
          for (const auto& t : c.terms)
            terms.push_back(Json{{"instance", to_json(t.instance)}, {"coeff", rational_json(t.coeff)}});
          out["terms"] = terms;
          out["f1"] = rational_json(c.f1_coeff);
          out["f2"] = rational_json(c.f2_coeff);
        } else if constexpr (std::is_same_v<T, Dominance>) {
          out["instance"] = to_json(c.instance);
        } else if constexpr (std::is_same_v<T, RegionMembership>) {
          out["d"] = c.d;
        }
      },
      cert);
  return out;
}

Certificate certificate_from_json(const Json& j) {
  const std::string kind = member(j, "kind").get<std::string>();
  if (kind == "conic-combination") {
    ConicCombination c;
    for (const auto& t : member(j, "terms"))
      c.terms.push_back({generator_instance_from_json(member(t, "instance")),
                         rational_from_json(member(t, "coeff"))});
    c.f1_coeff = rational_from_json(member(j, "f1"));
    c.f2_coeff = rational_from_json(member(j, "f2"));
    return c;
  }
  if (kind == "dominance") return Dominance{generator_instance_from_json(member(j, "instance"))};
  if (kind == "region-membership") return RegionMembership{member(j, "d").get<int>()};
  if (kind == "low-genus-complete") return LowGenusComplete{};
  throw std::invalid_argument("unknown certificate kind '" + kind + "'");
}

Json to_json(const NotNefWitness& w) {
  Json out{{"kind", to_string(w.kind)}};
  out["curve"] = w.curve ? to_json(*w.curve) : Json(nullptr);
  out["value"] = rational_json(w.value);
  out["justification"] = w.justification;
  return out;
}

Json to_json(const Verdict& v) {
  Json out{{"outcome", to_string(outcome(v))}};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CertifiedNef>) out["certificate"] = to_json(x.cert);
        else if constexpr (std::is_same_v<T, CertifiedNotNef>) out["witness"] = to_json(x.witness);
        else out["diagnostics"] = x.diagnostics;
      },
      v);
  return out;
}

namespace {

std::string family_domain(const Family& fam) {
  std::string out = fam.lo_open ? "(" : "[";
  out += to_string(fam.lo) + ", ";
  out += fam.hi ? to_string(*fam.hi) : "inf";
  out += (fam.hi && !fam.hi_open) ? "]" : ")";
  if (fam.integral) out += " integral";
  return out;
}

}  // namespace

Json to_json(const NefGenerator& gen) {
  Json out{{"id", gen.id}, {"mirrored", gen.mirrored}};
  if (const auto* ray = std::get_if<Ray>(&gen.kind)) {
    out["kind"] = "ray";
    out["class"] = to_json(gen.mirrored ? swap(ray->cls) : ray->cls);
  } else if (const auto* fam = std::get_if<Family>(&gen.kind)) {
    out["kind"] = "family";
    out["form"] = to_string(fam->form);
    out["domain"] = family_domain(*fam);
    out["c_sign"] = fam->c_sign;
  } else if (const auto* region = std::get_if<Region>(&gen.kind)) {
    out["kind"] = "region";
    out["d"] = region->d;
  }
  out["provenance"] = gen.provenance;
  return out;
}

Json to_json(const Obstruction& obs) {
  Json out{{"kind", to_string(obs.kind)}};
  out["curve"] = obs.cls ? to_json(*obs.cls) : Json(nullptr);
  if (obs.kind == Obstruction::Kind::CoverCurve) out["d"] = obs.d;
  out["justification"] = obs.justification;
  return out;
}

Json catalog_json(const Catalog& catalog) {
  Json gens = Json::array();
  for (const auto& gen : catalog.generators()) gens.push_back(to_json(gen));
  Json obs = Json::array();
  for (const auto& o : catalog.obstructions()) obs.push_back(to_json(o));
  Json samples = Json::array();
  for (const auto& s : catalog.samples()) samples.push_back(to_json(s));
  return Json{{"context", to_json(catalog.context())},
              {"generators", gens},
              {"obstructions", obs},
              {"notes", catalog.notes()},
              {"samples", samples}};
}

std::string catalog_csv(const Catalog& catalog) {
  std::ostringstream os;
  os << "id,mirrored,kind,a,b,c,param\n";
  for (const auto& s : catalog.samples()) {
    const NefGenerator* gen = catalog.find(s.id, s.mirrored);
    std::string kind = "ray";
    if (gen && std::holds_alternative<Family>(gen->kind)) kind = "family";
    if (gen && std::holds_alternative<Region>(gen->kind)) kind = "region";
    os << s.id << ',' << (s.mirrored ? "true" : "false") << ',' << kind << ',' << to_string(s.cls.a)
       << ',' << to_string(s.cls.b) << ',' << to_string(s.cls.c) << ',' << to_string(s.param) << '\n';
  }
  return os.str();
}

Json to_json(const std::vector<BoundarySample>& samples) {
  Json out = Json::array();
  for (const auto& s : samples)
    out.push_back(Json{{"a", rational_json(s.a)}, {"b", rational_json(s.b_min)}, {"source", s.source}});
  return out;
}

std::string boundary_csv(const std::vector<BoundarySample>& samples) {
  std::ostringstream os;
  os << "a,b,source\n";
  for (const auto& s : samples) os << to_string(s.a) << ',' << to_string(s.b_min) << ',' << s.source << '\n';
  return os.str();
}

Json to_json(const BlowupClass& d) {
  return Json{{"base", to_string(d.base)},
              {"base_coeffs", rationals_json(d.base_coeffs)},
              {"exc", rationals_json(d.exc)},
              {"text", to_string(d)}};
}

Json to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    steps.push_back(Json{{"step", i + 1},
                         {"operation", s.operation},
                         {"class", to_json(s.result)},
                         {"checksum", Json{{"self_pairing", rational_json(s.self_pairing)},
                                           {"canonical_pairing", rational_json(s.canonical_pairing)}}}});
  }
  return Json{{"base", to_string(trace.base)},
              {"g", trace.g},
              {"start", to_json(trace.start)},
              {"steps", steps},
              {"final", to_json(trace.final_class())},
              {"pairing_preserved", trace.pairing_preserved},
              {"annotations", trace.annotations}};
}

Json to_json(const LemmaReport& report) {
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    Json cell{{"n", c.n},      {"m", c.m},         {"r", c.r},
              {"expected", c.expected}, {"samples", c.samples}, {"matches", c.matches},
              {"exceptional", c.exceptional}, {"pass", c.pass}};
    if (!c.note.empty()) cell["note"] = c.note;
    cells.push_back(cell);
  }
  return Json{{"field", report.field},
              {"trials", report.trials},
              {"all_pass", report.all_pass()},
              {"failures", report.failures},
              {"cells", cells}};
}

Json to_json(const TwistedBundleData& b) {
  Json out{{"rank", b.rank.get_str()}, {"degree", rational_json(b.degree)}, {"slope", rational_json(slope(b))}};
  out["mu_min"] = b.mu_min ? rational_json(*b.mu_min) : Json(nullptr);
  return out;
}

}  // namespace neflab
