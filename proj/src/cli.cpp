#include "neflab/cli.hpp"

#include "neflab/catalog.hpp"
#include "neflab/certifier.hpp"
#include "neflab/cremona.hpp"
#include "neflab/interpolation.hpp"
#include "neflab/plot.hpp"
#include "neflab/serialize.hpp"
#include "neflab/slopes.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace neflab::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precedence: defaults < --config file < NEFLAB_PRECISION.
CatalogOptions load_options(const std::string& config_path) {
  CatalogOptions opts;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw IoError("cannot read config file '" + config_path + "'");
    Json cfg;
    try {
      cfg = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument("config file is not valid JSON: " + std::string(e.what()));
    }
    if (cfg.contains("family_density")) opts.family_density = cfg.at("family_density").get<int>();
    if (cfg.contains("ross_denominator"))
      opts.ross_denominator = Integer(cfg.at("ross_denominator").is_string()
                                          ? cfg.at("ross_denominator").get<std::string>()
                                          : std::to_string(cfg.at("ross_denominator").get<long long>()),
                                      10);
  }
  if (const char* env = std::getenv("NEFLAB_PRECISION"); env && *env) {
    Integer den;
    if (den.set_str(env, 10) != 0) throw std::invalid_argument("NEFLAB_PRECISION must be a positive integer");
    opts.ross_denominator = den;
  }
  if (opts.family_density < 1) throw std::invalid_argument("family_density must be >= 1");
  if (opts.ross_denominator < 1) throw std::invalid_argument("ross_denominator must be >= 1");
  return opts;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << body;
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string describe(const GeneratorInstance& inst) {
  return inst.id + (inst.mirrored ? "~" : "") + "(" + to_string(inst.param) + ") = " + to_string(inst.cls);
}

std::string describe(const Certificate& cert) {
  std::ostringstream os;
  os << certificate_kind(cert);
  if (const auto* dom = std::get_if<Dominance>(&cert)) {
    os << " by " << describe(dom->instance);
  } else if (const auto* reg = std::get_if<RegionMembership>(&cert)) {
    os << " for cover degree " << reg->d;
  } else if (const auto* cc = std::get_if<ConicCombination>(&cert)) {
    for (const auto& t : cc->terms) os << "\n  " << to_string(t.coeff) << " * " << describe(t.instance);
    os << "\n  + " << to_string(cc->f1_coeff) << " f1 + " << to_string(cc->f2_coeff) << " f2";
  }
  return os.str();
}

struct Common {
  bool json = false;
  std::string config;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact nef-cone certification for divisor classes on C x C", "neflab"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--config", common.config, "JSON file with family_density and ross_denominator");

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", common.json, "emit JSON"); };

  // certify
  int g = 0;
  std::string level = "arbitrary";
  std::string class_text;
  auto* certify = app.add_subcommand("certify", "certify nefness of a f1 + b f2 + c delta");
  certify->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
  certify->add_option("--level", level, "arbitrary | general | very-general | simple-cover:<d>");
  certify->add_option("--class", class_text, R"(class as JSON, e.g. {"a":"2","b":"11","c":"-1"})")->required();
  std::string cert_path;
  certify->add_option("--emit-cert", cert_path, "write the certificate or witness JSON here");
  add_json(certify);

  // catalog dump
  std::string format = "csv";
  auto* catalog = app.add_subcommand("catalog", "nef generators and obstructions");
  catalog->require_subcommand(1);
  auto* dump = catalog->add_subcommand("dump", "list the catalog for one context");
  dump->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
  dump->add_option("--level", level, "generality level");
  dump->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  add_json(dump);

  // boundary
  std::string a_min = "2", a_max, step = "1";
  auto* boundary = app.add_subcommand("boundary", "least certified b on the slice c = -1");
  boundary->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
  boundary->add_option("--level", level, "generality level");
  boundary->add_option("--a-min", a_min, "smallest a (> 1)");
  boundary->add_option("--a-max", a_max, "largest a (default 2g)");
  boundary->add_option("--step", step, "grid step");
  add_json(boundary);

  // plot
  std::vector<std::string> levels;
  std::string out_path;
  std::string plot_step = "1/2";
  bool no_conj = false, no_vojta = false, no_jac = false, no_tangent = false, no_catalog = false,
       no_boundary = false;
  auto* plot = app.add_subcommand("plot", "region figure as CSV or SVG");
  plot->add_option("--g", g, "genus")->required()->check(CLI::PositiveNumber);
  plot->add_option("--level", levels, "contexts for catalog points and boundaries (repeatable)");
  plot->add_option("--a-min", a_min, "smallest a (> 1)");
  plot->add_option("--a-max", a_max, "largest a (default 2g)");
  plot->add_option("--step", plot_step, "grid step");
  plot->add_option("--format", format, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
  plot->add_option("--out", out_path, "output file (default stdout)");
  plot->add_flag("--no-conjectural", no_conj, "omit the conjectural boundary");
  plot->add_flag("--no-vojta", no_vojta, "omit the Vojta curve");
  plot->add_flag("--no-jacobian", no_jac, "omit the Jacobian curve");
  plot->add_flag("--no-tangent", no_tangent, "omit the tangent segment");
  plot->add_flag("--no-catalog", no_catalog, "omit catalog points");
  plot->add_flag("--no-boundary", no_boundary, "omit boundaries");
  add_json(plot);

  // cremona reduce
  std::string base = "p1xp1";
  std::string trace_path;
  auto* cremona = app.add_subcommand("cremona", "Cremona reductions on blown-up rational surfaces");
  cremona->require_subcommand(1);
  auto* reduce = cremona->add_subcommand("reduce", "reduce the symmetric class to a fiber or line class");
  reduce->add_option("--g", g, "genus")->required()->check(CLI::PositiveNumber);
  reduce->add_option("--base", base, "p1xp1 | p2")->check(CLI::IsMember({"p1xp1", "p2"}));
  reduce->add_option("--trace", trace_path, "write the trace JSON here");
  add_json(reduce);

  // interp
  VerifyOptions vopts;
  std::string report_path;
  InterpolationQuery query;
  auto* interp = app.add_subcommand("interp", "interpolation through symmetric pairs");
  interp->require_subcommand(1);
  auto* verify = interp->add_subcommand("verify", "sample the whole (n, m, r) grid");
  verify->add_option("--n-max", vopts.n_max, "largest n")->check(CLI::NonNegativeNumber);
  verify->add_option("--m-slack", vopts.m_slack, "m ranges over 0..n + slack")->check(CLI::NonNegativeNumber);
  verify->add_option("--r-max", vopts.r_max, "largest r")->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", vopts.trials, "trials per cell")->check(CLI::PositiveNumber);
  verify->add_option("--field", vopts.field, "prime modulus, 0 for the rationals");
  verify->add_option("--seed", vopts.seed, "base seed");
  verify->add_option("--report", report_path, "write the report JSON here");
  add_json(verify);
  auto* isample = interp->add_subcommand("sample", "one sampled dimension");
  isample->add_option("--n", query.n, "second bidegree")->required()->check(CLI::NonNegativeNumber);
  isample->add_option("--m", query.m, "symmetric pairs")->required()->check(CLI::NonNegativeNumber);
  isample->add_option("--r", query.r, "extra points")->check(CLI::NonNegativeNumber);
  isample->add_option("--field", query.field, "prime modulus, 0 for the rationals");
  isample->add_option("--seed", query.seed, "seed");
  add_json(isample);

  // slope
  std::string a_text;
  int n = 1;
  std::string rank_text = "1", degree_text = "0", mu_min_text, xi_text = "1", f_text = "0";
  auto* slope_cmd = app.add_subcommand("slope", "closed-form slopes of bundles on a curve");
  slope_cmd->require_subcommand(1);
  auto* conormal = slope_cmd->add_subcommand("conormal", "slope of the higher conormal bundle");
  auto* tbundle = slope_cmd->add_subcommand("tbundle", "normalized T-bundle slope");
  auto* limit = slope_cmd->add_subcommand("limit", "limits of both normalized sequences");
  for (auto* sub : {conormal, tbundle, limit}) {
    sub->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--a", a_text, "degree parameter a")->required();
    add_json(sub);
  }
  for (auto* sub : {conormal, tbundle}) sub->add_option("--n", n, "order n")->check(CLI::PositiveNumber);
  auto* pbundle = slope_cmd->add_subcommand("pbundle", "nefness of alpha xi + beta f on P(V)");
  pbundle->add_option("--rank", rank_text, "rank of V");
  pbundle->add_option("--degree", degree_text, "degree of V (twist included)");
  pbundle->add_option("--mu-min", mu_min_text, "minimal slope (default: V semistable)");
  pbundle->add_option("--xi", xi_text, "coefficient of xi");
  pbundle->add_option("--f", f_text, "coefficient of f");
  add_json(pbundle);

  // lift
  std::string d_text, mixed_text;
  auto* lift = app.add_subcommand("lift", "the symmetric-product class on C^n");
  lift->add_option("--g", g, "genus")->required()->check(CLI::PositiveNumber);
  lift->add_option("--n", n, "number of factors")->required()->check(CLI::Range(2, 64));
  lift->add_option("--d", d_text, "degree d > g");
  lift->add_option("--mixed", mixed_text, R"(mixed class JSON {"f","qx","qdelta_half","z"})");
  add_json(lift);

  std::vector<const char*> argv{"neflab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  try {
    const CatalogOptions opts = load_options(common.config);
    auto range_max = [&](const std::string& text) {
      return text.empty() ? Rational(2 * g) : parse_rational(text);
    };

    if (certify->parsed()) {
      const GenusContext ctx = parse_context(g, level);
      const SurfaceClass d = parse_surface_class(class_text);
      const Verdict v = Certifier(ctx, opts).certify(d);
      if (!cert_path.empty()) {
        Json j{{"class", to_json(d)}, {"context", to_json(ctx)}};
        j.update(to_json(v));
        write_file(cert_path, j.dump(2) + "\n");
      }
      if (common.json) {
        Json j{{"class", to_json(d)}, {"context", to_json(ctx)}};
        j.update(to_json(v));
        out << j.dump(2) << '\n';
      } else {
        out << to_string(outcome(v)) << ": " << to_string(d) << " (" << to_string(ctx) << ")\n";
        if (const auto* nef = std::get_if<CertifiedNef>(&v)) out << describe(nef->cert) << '\n';
        if (const auto* bad = std::get_if<CertifiedNotNef>(&v)) {
          out << neflab::to_string(bad->witness.kind) << " value " << to_string(bad->witness.value);
          if (bad->witness.curve) out << " against " << to_string(*bad->witness.curve);
          out << "\n" << bad->witness.justification << '\n';
        }
        if (const auto* unk = std::get_if<Unknown>(&v)) out << unk->diagnostics << '\n';
      }
      switch (outcome(v)) {
        case Outcome::Nef: return kNef;
        case Outcome::NotNef: return kNotNef;
        case Outcome::Unknown: return kUnknown;
      }
    }

    if (dump->parsed()) {
      const Catalog cat(parse_context(g, level), opts);
      if (common.json || format == "json") out << catalog_json(cat).dump(2) << '\n';
      else out << catalog_csv(cat);
      return kOk;
    }

    if (boundary->parsed()) {
      const Catalog cat(parse_context(g, level), opts);
      const auto samples =
          boundary_samples(cat, parse_rational(a_min), range_max(a_max), parse_rational(step));
      if (common.json) out << to_json(samples).dump(2) << '\n';
      else out << boundary_csv(samples);
      return kOk;
    }

    if (plot->parsed()) {
      PlotSpec spec;
      spec.g = g;
      for (const auto& l : levels) spec.contexts.push_back(parse_context(g, l));
      spec.a_min = parse_rational(a_min);
      spec.a_max = range_max(a_max);
      spec.step = parse_rational(plot_step);
      spec.overlays = {!no_conj, !no_vojta, !no_jac, !no_tangent, !no_catalog, !no_boundary};
      spec.format = format == "svg" ? PlotFormat::Svg : PlotFormat::Csv;
      spec.catalog_options = opts;
      const auto rows = plot_rows(spec);
      const std::string body = spec.format == PlotFormat::Csv ? plot_csv(rows) : plot_svg(spec, rows);
      if (!out_path.empty()) write_file(out_path, body);
      if (common.json) {
        Json jrows = Json::array();
        for (const auto& r : rows)
          jrows.push_back(Json{{"family", r.family},
                               {"a", rational_json(r.a)},
                               {"b", rational_json(r.b)},
                               {"status", r.certified ? "certified" : "conjectural"}});
        Json j{{"g", g}, {"rows", jrows}};
        if (!out_path.empty()) j["out"] = out_path;
        out << j.dump(2) << '\n';
      } else if (out_path.empty()) {
        out << body;
      }
      return kOk;
    }

    if (reduce->parsed()) {
      const ReductionTrace trace = reduce_symmetric_class(g, parse_base(base));
      const Json j = to_json(trace);
      if (!trace_path.empty()) write_file(trace_path, j.dump(2) + "\n");
      if (common.json) {
        out << j.dump(2) << '\n';
      } else {
        out << to_string(trace.start) << '\n';
        for (const auto& s : trace.steps)
          out << "  " << s.operation << " -> " << to_string(s.result) << "  [D^2 = "
              << to_string(s.self_pairing) << ", D.K = " << to_string(s.canonical_pairing) << "]\n";
        for (const auto& a : trace.annotations) out << "note: " << a << '\n';
      }
      return trace.pairing_preserved ? kOk : kCheckFailed;
    }

    if (verify->parsed()) {
      const LemmaReport report = verify_lemma(vopts);
      const Json j = to_json(report);
      if (!report_path.empty()) write_file(report_path, j.dump(2) + "\n");
      if (common.json) {
        out << j.dump(2) << '\n';
      } else {
        out << report.cells.size() << " cells, " << report.trials << " trials each, field "
            << (report.field == 0 ? std::string("Q") : "F_" + std::to_string(report.field)) << '\n';
        for (const auto& c : report.cells)
          if (!c.note.empty()) out << "(" << c.n << "," << c.m << "," << c.r << "): " << c.note << '\n';
        for (const auto& f : report.failures) out << "FAIL " << f << '\n';
        out << (report.all_pass() ? "all cells pass" : "some cells fail") << '\n';
      }
      return report.all_pass() ? kOk : kCheckFailed;
    }

    if (isample->parsed()) {
      const SampleResult res = sample(query);
      const int expected = expected_dim(query.n, query.m, query.r);
      const bool exceptional = is_exceptional(query.n, query.m, query.r);
      std::string note;
      if (exceptional) note = res.dim == expected ? "exceptional, matched" : "exceptional, mismatch";
      if (common.json) {
        Json j{{"n", query.n},      {"m", query.m},           {"r", query.r},
               {"field", query.field}, {"seed", res.seed_used}, {"rank", res.rank},
               {"sample_dim", res.dim}, {"expected_dim", expected}, {"exceptional", exceptional}};
        if (!note.empty()) j["note"] = note;
        out << j.dump(2) << '\n';
      } else {
        out << "sample " << res.dim << ", expected " << expected << (note.empty() ? "" : " (" + note + ")")
            << '\n';
      }
      return kOk;
    }

    if (conormal->parsed() || tbundle->parsed() || limit->parsed()) {
      const Rational a = parse_rational(a_text);
      Json j{{"g", g}, {"a", rational_json(a)}};
      if (conormal->parsed()) {
        const Rational s = higher_conormal_slope(g, a, n);
        j["n"] = n;
        j["slope"] = rational_json(s);
        j["normalized"] = rational_json(s / n);
        j["limit"] = rational_json(conormal_limit(g, a));
      } else if (tbundle->parsed()) {
        j["n"] = n;
        j["normalized_slope"] = rational_json(t_bundle_normalized_slope(g, a, n));
        j["limit"] = rational_json(t_bundle_limit(g, a));
      } else {
        j["conormal_limit"] = rational_json(conormal_limit(g, a));
        j["t_bundle_limit"] = rational_json(t_bundle_limit(g, a));
      }
      if (common.json) {
        out << j.dump(2) << '\n';
      } else {
        for (const auto& [key, value] : j.items())
          out << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
      return kOk;
    }

    if (pbundle->parsed()) {
      TwistedBundleData b;
      if (b.rank.set_str(rank_text, 10) != 0 || b.rank < 1)
        throw std::invalid_argument("--rank must be a positive integer");
      b.degree = parse_rational(degree_text);
      b.mu_min = mu_min_text.empty() ? slope(b) : parse_rational(mu_min_text);
      const Rational xi = parse_rational(xi_text), f = parse_rational(f_text);
      const bool nef = projective_bundle_nef(b, xi, f);
      if (common.json) {
        Json j{{"bundle", to_json(b)}, {"xi", rational_json(xi)}, {"f", rational_json(f)}, {"nef", nef}};
        out << j.dump(2) << '\n';
      } else {
        out << (nef ? "nef" : "not nef") << ": " << to_string(xi) << " xi + " << to_string(f)
            << " f, mu_min = " << to_string(*b.mu_min) << '\n';
      }
      return nef ? kNef : kNotNef;
    }

    if (lift->parsed()) {
      Json j{{"g", g}, {"n", n}};
      CnClass cls(n);
      if (!mixed_text.empty()) {
        const MixedClass m = mixed_class_from_json(Json::parse(mixed_text));
        cls = lift_to_Cn(m, n);
        j["mixed"] = to_json(m);
      } else {
        if (d_text.empty()) throw std::invalid_argument("lift needs --d or --mixed");
        const Rational d = parse_rational(d_text);
        cls = mainCn_class(g, n, d);
        j["d"] = rational_json(d);
        CnClause clause = CnClause::NotApplicable;
        if (d.get_den() == 1 && d.get_num().fits_sint_p())
          clause = mainCn_condition(g, n, static_cast<int>(d.get_num().get_si()));
        j["clause"] = to_string(clause);
        j["certified_nef"] = clause != CnClause::NotApplicable;
      }
      j["class"] = to_json(cls);
      if (common.json) {
        out << j.dump(2) << '\n';
      } else {
        out << to_string(cls) << '\n';
        if (j.contains("clause")) out << "clause: " << j["clause"].get<std::string>() << '\n';
      }
      return kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << app.help();
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace neflab::cli
