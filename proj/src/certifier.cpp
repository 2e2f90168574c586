#include "neflab/certifier.hpp"

#include <stdexcept>

namespace neflab {

std::string certificate_kind(const Certificate& cert) {
  switch (cert.index()) {
    case 0: return "conic-combination";
    case 1: return "dominance";
    case 2: return "region-membership";
    default: return "low-genus-complete";
  }
}

Outcome outcome(const Verdict& v) {
  if (std::holds_alternative<CertifiedNef>(v)) return Outcome::Nef;
  if (std::holds_alternative<CertifiedNotNef>(v)) return Outcome::NotNef;
  return Outcome::Unknown;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Nef: return "certified-nef";
    case Outcome::NotNef: return "certified-not-nef";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

LowGenusDecision decide_low_genus(const SurfaceClass& d, int g) {
  if (g == 0) {
    // delta = f1 + f2 on P1 x P1
    return (d.a + d.c >= 0 && d.b + d.c >= 0) ? LowGenusDecision::Nef : LowGenusDecision::NotNef;
  }
  if (g == 1) {
    bool ok = d.b + d.c >= 0 && d.a + d.c >= 0 && d.a + d.b >= 0 && self_intersection(d, 1) >= 0;
    return ok ? LowGenusDecision::Nef : LowGenusDecision::NotNef;
  }
  throw std::invalid_argument("decide_low_genus only covers g in {0, 1}");
}

Certifier::Certifier(GenusContext ctx, CatalogOptions opts)
    : catalog_(ctx, std::move(opts)),
      chain_neg_(lower_chain(catalog_, -1)),
      chain_pos_(lower_chain(catalog_, 1)) {}

std::optional<NotNefWitness> Certifier::find_witness(const SurfaceClass& d) const {
  const int g = catalog_.context().g;
  for (const auto& ob : catalog_.obstructions()) {
    Rational value = ob.cls ? pair(d, *ob.cls, g) : self_intersection(d, g);
    if (value < 0) return NotNefWitness{ob.kind, ob.cls, value, ob.justification};
  }
  return std::nullopt;
}

std::optional<Dominance> Certifier::try_dominance(const SurfaceClass& n) const {
  const int g = catalog_.context().g;
  auto dominated = [&](const SurfaceClass& inst) {
    if (sgn(inst.c) != sgn(n.c)) return false;
    Rational s = abs(inst.c);
    return inst.a / s <= n.a && inst.b / s <= n.b;
  };
  auto attempt = [&](const NefGenerator& gen, const Rational& p) -> std::optional<Dominance> {
    auto cls = catalog_.instantiate(gen, p);
    if (cls && dominated(*cls)) return Dominance{{gen.id, gen.mirrored, p, *cls}};
    return std::nullopt;
  };

  for (const auto& gen : catalog_.generators()) {
    if (std::holds_alternative<Region>(gen.kind)) continue;
    if (std::holds_alternative<Ray>(gen.kind)) {
      if (auto dom = attempt(gen, 0)) return dom;
      continue;
    }
    const auto& fam = std::get<Family>(gen.kind);
    if (fam.c_sign != sgn(n.c)) continue;
    const SurfaceClass q = gen.mirrored ? swap(n) : n;

    if (auto form = reciprocal_form(fam, g)) {
      Rational cap = q.a - form->shift;
      if (form->xmax && cap > *form->xmax) cap = *form->xmax;
      if (cap <= 0) continue;
      if (auto dom = attempt(gen, form->param_of(cap))) return dom;
      // the sublevel set {x : b(x) <= q.b} is an interval around this point
      if (form->gamma > 0) {
        Rational mid = (q.b - form->alpha) / (2 * form->gamma);
        if (mid > 0 && mid <= cap)
          if (auto dom = attempt(gen, form->param_of(mid))) return dom;
      }
    } else if (fam.form == FamilyForm::DiagonalSegment) {
      Rational x = q.a;
      if (fam.hi && x > *fam.hi) x = *fam.hi;
      if (x >= fam.lo)
        if (auto dom = attempt(gen, x)) return dom;
    } else if (fam.integral) {
      // both integral families decrease in the parameter
      Rational d = Rational(floor(q.a));
      if (fam.hi && d > *fam.hi) d = *fam.hi;
      if (auto dom = attempt(gen, d)) return dom;
    }
  }
  return std::nullopt;
}

std::optional<RegionMembership> Certifier::try_region(const SurfaceClass& n) const {
  if (n.c != -1) return std::nullopt;
  const int g = catalog_.context().g;
  for (const auto& gen : catalog_.generators()) {
    const auto* region = std::get_if<Region>(&gen.kind);
    if (!region) continue;
    if (n.a >= region->d && n.b >= region->d && n.a + n.b >= region_sum_bound(g, region->d))
      return RegionMembership{region->d};
  }
  return std::nullopt;
}

std::optional<ConicCombination> Certifier::try_chain(const SurfaceClass& d) const {
  if (d.c == 0) return std::nullopt;
  const auto& chain = d.c < 0 ? chain_neg_ : chain_pos_;
  const Rational s = abs(d.c);
  const Rational a = d.a / s;
  const Rational b = d.b / s;
  if (chain.empty() || a < chain.front().a) return std::nullopt;

  std::size_t i = 0;
  while (i + 1 < chain.size() && chain[i + 1].a <= a) ++i;

  ConicCombination out;
  out.f1_coeff = 0;
  if (i + 1 == chain.size() || chain[i].a == a) {
    const auto& p = chain[i];
    if (b < p.b) return std::nullopt;
    out.terms.push_back({p.source, s / abs(p.source.cls.c)});
    out.f1_coeff = (a - p.a) * s;
    out.f2_coeff = (b - p.b) * s;
    return out;
  }
  const auto& p = chain[i];
  const auto& q = chain[i + 1];
  Rational lambda = (q.a - a) / (q.a - p.a);
  Rational boundary = lambda * p.b + (1 - lambda) * q.b;
  if (b < boundary) return std::nullopt;
  out.terms.push_back({p.source, lambda * s / abs(p.source.cls.c)});
  out.terms.push_back({q.source, (1 - lambda) * s / abs(q.source.cls.c)});
  out.f2_coeff = (b - boundary) * s;
  return out;
}

Verdict Certifier::certify(const SurfaceClass& d) const {
  const int g = catalog_.context().g;
  if (g <= 1) {
    if (decide_low_genus(d, g) == LowGenusDecision::Nef) return CertifiedNef{LowGenusComplete{}};
    if (auto w = find_witness(d)) return CertifiedNotNef{*w};
    throw std::logic_error("low-genus NotNef decision without a violated condition");
  }

  if (auto w = find_witness(d)) return CertifiedNotNef{*w};

  if (d.c == 0) {
    ConicCombination cc;
    cc.f1_coeff = d.a;
    cc.f2_coeff = d.b;
    return CertifiedNef{cc};
  }

  const SurfaceClass n = d * (1 / abs(d.c));
  if (auto dom = try_dominance(n)) return CertifiedNef{*dom};
  if (auto reg = try_region(n)) return CertifiedNef{*reg};
  if (auto cc = try_chain(d)) return CertifiedNef{*cc};
  return Unknown{"no catalog route for " + to_string(n) + " in " +
                 to_string(catalog_.context()) +
                 "; passes all necessary conditions and context obstructions"};
}

ReplayResult Certifier::replay_instance(const GeneratorInstance& inst) const {
  const NefGenerator* gen = catalog_.find(inst.id, inst.mirrored);
  if (!gen) return {false, "generator inapplicable: " + inst.id + " in " + to_string(catalog_.context())};
  auto cls = catalog_.instantiate(*gen, inst.param);
  if (!cls) return {false, "parameter outside the domain of " + inst.id};
  if (*cls != inst.cls) return {false, "instance mismatch for " + inst.id};
  return {true, {}};
}

ReplayResult Certifier::replay(const SurfaceClass& d, const Certificate& cert) const {
  const int g = catalog_.context().g;

  if (std::holds_alternative<LowGenusComplete>(cert)) {
    if (g > 1) return {false, "low-genus certificate used with g >= 2"};
    if (decide_low_genus(d, g) != LowGenusDecision::Nef) return {false, "low-genus decision is not nef"};
    return {true, {}};
  }

  if (const auto* dom = std::get_if<Dominance>(&cert)) {
    if (auto r = replay_instance(dom->instance); !r) return r;
    const auto& inst = dom->instance.cls;
    if (d.c == 0 || sgn(d.c) != sgn(inst.c)) return {false, "sign of delta coefficient differs"};
    Rational sd = abs(d.c), si = abs(inst.c);
    if (inst.a / si > d.a / sd || inst.b / si > d.b / sd) return {false, "dominance violated"};
    return {true, {}};
  }

  if (const auto* reg = std::get_if<RegionMembership>(&cert)) {
    if (!catalog_.find("region-" + std::to_string(reg->d), false))
      return {false, "generator inapplicable: region-" + std::to_string(reg->d)};
    if (d.c >= 0) return {false, "region certificates need a negative delta coefficient"};
    SurfaceClass n = d * (1 / abs(d.c));
    if (n.a < reg->d || n.b < reg->d || n.a + n.b < region_sum_bound(g, reg->d))
      return {false, "region inequality violated"};
    return {true, {}};
  }

  const auto& cc = std::get<ConicCombination>(cert);
  if (cc.f1_coeff < 0 || cc.f2_coeff < 0) return {false, "coefficient negative"};
  SurfaceClass sum{cc.f1_coeff, cc.f2_coeff, 0};
  for (const auto& term : cc.terms) {
    if (term.coeff < 0) return {false, "coefficient negative"};
    if (auto r = replay_instance(term.instance); !r) return r;
    sum = sum + term.instance.cls * term.coeff;
  }
  if (sum != d) return {false, "sum mismatch"};
  return {true, {}};
}

Verdict certify(const SurfaceClass& d, const GenusContext& ctx) { return Certifier(ctx).certify(d); }

ReplayResult replay_certificate(const SurfaceClass& d, const GenusContext& ctx,
                                const Certificate& cert) {
  return Certifier(ctx).replay(d, cert);
}

}  // namespace neflab
