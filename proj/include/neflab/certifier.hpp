#pragma once

#include "neflab/catalog.hpp"
#include "neflab/neron_severi.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace neflab {

// D = sum coeff_i * instance_i + f1_coeff * f1 + f2_coeff * f2.
struct ConicCombination {
  struct Term {
    GeneratorInstance instance;
    Rational coeff;
  };
  std::vector<Term> terms;
  Rational f1_coeff;
  Rational f2_coeff;
};

// D / |c| = instance + (nonneg) f1 + (nonneg) f2, same c.
struct Dominance {
  GeneratorInstance instance;
};

// D / |c| = a f1 + b f2 - delta with a, b >= d and a + b >= 2 + 2g/(d-1).
struct RegionMembership {
  int d;
};

// g in {0, 1}: the elementary necessary conditions are sufficient.
struct LowGenusComplete {};

using Certificate = std::variant<ConicCombination, Dominance, RegionMembership, LowGenusComplete>;

std::string certificate_kind(const Certificate& cert);

struct NotNefWitness {
  Obstruction::Kind kind;
  std::optional<SurfaceClass> curve;  // absent for a negative square
  Rational value;                     // the strictly negative pairing or D^2
  std::string justification;
};

struct CertifiedNef {
  Certificate cert;
};
struct CertifiedNotNef {
  NotNefWitness witness;
};
struct Unknown {
  std::string diagnostics;
};

using Verdict = std::variant<CertifiedNef, CertifiedNotNef, Unknown>;

enum class Outcome { Nef, NotNef, Unknown };
Outcome outcome(const Verdict& v);
std::string to_string(Outcome o);

struct ReplayResult {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

enum class LowGenusDecision { Nef, NotNef };

// Complete decision for g = 0 (C = P1) and g = 1.
LowGenusDecision decide_low_genus(const SurfaceClass& d, int g);

// Sound, incomplete nefness test. Holds a catalog for one context so that
// repeated queries reuse the sampled instances and chains.
class Certifier {
 public:
  explicit Certifier(GenusContext ctx, CatalogOptions opts = {});

  const Catalog& catalog() const { return catalog_; }

  Verdict certify(const SurfaceClass& d) const;
  ReplayResult replay(const SurfaceClass& d, const Certificate& cert) const;

 private:
  std::optional<NotNefWitness> find_witness(const SurfaceClass& d) const;
  std::optional<Dominance> try_dominance(const SurfaceClass& normalized) const;
  std::optional<RegionMembership> try_region(const SurfaceClass& normalized) const;
  std::optional<ConicCombination> try_chain(const SurfaceClass& d) const;
  ReplayResult replay_instance(const GeneratorInstance& inst) const;

  Catalog catalog_;
  std::vector<ChainPoint> chain_neg_;
  std::vector<ChainPoint> chain_pos_;
};

Verdict certify(const SurfaceClass& d, const GenusContext& ctx);
ReplayResult replay_certificate(const SurfaceClass& d, const GenusContext& ctx,
                                const Certificate& cert);

}  // namespace neflab
