#include "neflab/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace neflab {

namespace {

Rational floor_div(int num, int den) { return Rational(floor(Rational(num) / den)); }

SurfaceClass family_class(FamilyForm form, int g, const Rational& p) {
  const Rational G(g);
  switch (form) {
    case FamilyForm::Vojta:
      return {p, 1 + G / (p - 1) + (G - 1) * (p - 1), -1};
    case FamilyForm::VojtaMixed:
      return {-p, -1 + G / (1 - p) + (G - 1) * (1 - p), 1};
    case FamilyForm::Jacobian:
      return {p, 1 + G * G / (p - 1), -1};
    case FamilyForm::DiagonalSegment:
      return {p, 2 * G - 2 - p, 1};
    case FamilyForm::KernelBundle:
      return {p, 1 + G / (p - G), -1};
    case FamilyForm::SpecialKernel:
      return {p, p / (p - G + 1), -1};
  }
  throw std::logic_error("unhandled family form");
}

}  // namespace

std::string to_string(const GenusContext& ctx) {
  std::string level;
  switch (ctx.level) {
    case Level::Arbitrary: level = "arbitrary"; break;
    case Level::General: level = "general"; break;
    case Level::VeryGeneral: level = "very-general"; break;
    case Level::SimpleCover: level = "simple-cover:" + std::to_string(ctx.cover_degree); break;
  }
  return "g=" + std::to_string(ctx.g) + " " + level;
}

GenusContext parse_context(int g, const std::string& level) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  if (level == "arbitrary") return GenusContext::arbitrary(g);
  if (level == "general") return GenusContext::general(g);
  if (level == "very-general") return GenusContext::very_general(g);
  if (level == "hyperelliptic") return GenusContext::simple_cover(g, 2);
  const std::string prefix = "simple-cover:";
  if (level.rfind(prefix, 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(level.substr(prefix.size()));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad cover degree in '" + level + "'");
    }
    if (d < 2) throw std::invalid_argument("simple cover degree must be >= 2");
    return GenusContext::simple_cover(g, d);
  }
  throw std::invalid_argument("unknown generality level '" + level + "'");
}

std::string to_string(FamilyForm form) {
  switch (form) {
    case FamilyForm::Vojta: return "vojta";
    case FamilyForm::VojtaMixed: return "vojta-mixed";
    case FamilyForm::Jacobian: return "jacobian";
    case FamilyForm::DiagonalSegment: return "diagonal-segment";
    case FamilyForm::KernelBundle: return "kernel-bundle";
    case FamilyForm::SpecialKernel: return "special-kernel";
  }
  return "?";
}

bool Family::contains(const Rational& p) const {
  if (lo_open ? !(p > lo) : !(p >= lo)) return false;
  if (hi && (hi_open ? !(p < *hi) : !(p <= *hi))) return false;
  if (integral && p.get_den() != 1) return false;
  return true;
}

Rational ReciprocalForm::param_of(const Rational& x) const {
  // VojtaMixed is parametrized by s = 1 - x; the others by a = x + 1.
  return c_sign > 0 ? Rational(1 - x) : Rational(x + shift);
}

std::optional<ReciprocalForm> reciprocal_form(const Family& fam, int g) {
  const Rational G(g);
  switch (fam.form) {
    case FamilyForm::Vojta: return ReciprocalForm{1, 1, G, G - 1, std::nullopt, -1};
    case FamilyForm::Jacobian: return ReciprocalForm{1, 1, G * G, 0, std::nullopt, -1};
    case FamilyForm::VojtaMixed: return ReciprocalForm{-1, -1, G, G - 1, Rational(1), 1};
    default: return std::nullopt;
  }
}

int max_cover_degree(int g) {
  int d = 1;
  while ((d) * (d) <= g) ++d;  // (d+1-1)^2 <= g
  return d;
}

Rational region_sum_bound(int g, int d) {
  if (d < 2) throw std::domain_error("cover degree must be >= 2");
  return 2 + Rational(2 * g) / (d - 1);
}

Rational ross_coefficient(int g, const Integer& denominator) {
  return 1 + sqrt_ceil(Rational(g + 1), denominator);
}

Catalog::Catalog(GenusContext ctx, CatalogOptions opts) : ctx_(ctx), opts_(std::move(opts)) {
  if (ctx_.g < 0) throw std::invalid_argument("genus must be nonnegative");
  if (ctx_.level == Level::SimpleCover && ctx_.cover_degree < 2)
    throw std::invalid_argument("simple cover degree must be >= 2");
  if (opts_.family_density < 1) throw std::invalid_argument("family density must be >= 1");
  build_generators();
  build_obstructions();
  build_samples();
}

void Catalog::add(NefGenerator gen, bool with_mirror) {
  if (with_mirror) {
    NefGenerator m = gen;
    m.mirrored = true;
    generators_.push_back(std::move(gen));
    generators_.push_back(std::move(m));
  } else {
    generators_.push_back(std::move(gen));
  }
}

void Catalog::build_generators() {
  const int g = ctx_.g;
  const Rational G(g);
  const bool general = ctx_.level == Level::General || ctx_.level == Level::VeryGeneral;
  const bool very_general = ctx_.level == Level::VeryGeneral;

  if (g >= 1) {
    add({"theta", Ray{{G - 1, G - 1, 1}}, false,
         "pullback of the theta polarization by the difference map C x C -> Jac(C)"},
        false);
    add({"diagonal-segment",
         Family{FamilyForm::DiagonalSegment, 0, false, Rational(2 * g - 2), false, false, 1}, false,
         "a f1 + b f2 + delta with a, b >= 0 is nef iff a + b >= 2g - 2"},
        false);
    add({"vojta", Family{FamilyForm::Vojta, 1, true, std::nullopt, false, false, -1}, false,
         "Rabindranath after Vojta: a f1 + (1 + g/(a-1) + (g-1)(a-1)) f2 - delta, a > 1"},
        true);
    add({"vojta-mixed",
         Family{FamilyForm::VojtaMixed, 0, false, Rational(1), true, false, 1}, false,
         "Vojta: -a f1 + (-1 + g/(1-a) + (g-1)(1-a)) f2 + delta, 0 <= a < 1"},
        true);
    add({"jacobian", Family{FamilyForm::Jacobian, 1, true, std::nullopt, false, false, -1}, false,
         "restriction from Jac(C) x Jac(C): d f1 + (1 + g^2/(d-1)) f2 - delta, d > 1"},
        true);
  }

  if (general && g >= 2) {
    add({"general-i",
         Family{FamilyForm::KernelBundle, floor_div(3 * g, 2) + 1, false, std::nullopt, false,
                true, -1},
         false,
         "general curve, kernel bundle M_L semistable: d f1 + (1 + g/(d-g)) f2 - delta, "
         "integral d >= floor(3g/2)+1"},
        true);
  }
  if (general && g >= 3) {
    add({"general-ii",
         Family{FamilyForm::SpecialKernel, floor_div(3 * g, 2), false, Rational(2 * g - 2),
                false, true, -1},
         false,
         "general curve, h^1(L) = 1: d f1 + d/(d-g+1) f2 - delta, "
         "integral floor(3g/2) <= d <= 2g-2"},
        true);
  }
  if (general && g >= 10) {
    Rational d = floor_div(3 * g, 2) - 3;
    Rational e = floor_div(g, 2) - 1;
    add({"general-iii", Ray{{d, d / e, -1}}, false,
         "general curve, L computing the Clifford index: (floor(3g/2)-3) f1 + "
         "(floor(3g/2)-3)/(floor(g/2)-1) f2 - delta"},
        true);
  }
  if (very_general && g >= 3) {
    add({"very-general-a2", Ray{{2, G + 1, -1}}, false,
         "very general curve, degeneration to a g-nodal rational curve: 2 f1 + (1+g) f2 - delta"},
        true);
    Rational r = ross_coefficient(g, opts_.ross_denominator);
    add({"ross", Ray{{r, r, -1}}, false,
         "Ross: (1 + sqrt(g+1))(f1 + f2) - delta, stored rounded up to denominator " +
             opts_.ross_denominator.get_str()},
        false);
  }

  const int dmax = max_cover_degree(g);
  if (very_general && g >= 1) {
    for (int d = 2; d <= dmax; ++d)
      add({"region-" + std::to_string(d), Region{d}, false,
           "very general curve via simple covers of degree " + std::to_string(d) +
               ": a, b >= d and a + b >= 2 + 2g/(d-1)"},
          false);
  }
  if (ctx_.level == Level::SimpleCover && g >= 1) {
    const int d = ctx_.cover_degree;
    if (d <= dmax) {
      add({"region-" + std::to_string(d), Region{d}, false,
           "simple branched cover of degree " + std::to_string(d) +
               ": a, b >= d and a + b >= 2 + 2g/(d-1)"},
          false);
    } else {
      notes_.push_back("cover degree " + std::to_string(d) + " exceeds floor(sqrt g)+1: a f1 + b f2 - "
                       "delta with a, b >= d is ample (recorded only, not used for certification)");
    }
  }
}

void Catalog::build_obstructions() {
  obstructions_.push_back({Obstruction::Kind::PairF1, SurfaceClass::f1(), 0,
                           "f1 is nef, so D.f1 >= 0 is necessary"});
  obstructions_.push_back({Obstruction::Kind::PairF2, SurfaceClass::f2(), 0,
                           "f2 is nef, so D.f2 >= 0 is necessary"});
  obstructions_.push_back({Obstruction::Kind::PairDiagonal, SurfaceClass::diagonal(), 0,
                           "the diagonal is an irreducible curve, so D.delta >= 0 is necessary"});
  obstructions_.push_back({Obstruction::Kind::NegativeSquare, std::nullopt, 0,
                           "nef classes on a surface have nonnegative self-intersection"});

  const int g = ctx_.g;
  auto cover_curve = [&](int d, std::string why) {
    obstructions_.push_back(
        {Obstruction::Kind::CoverCurve, SurfaceClass{d, d, -1}, d, std::move(why)});
  };
  if (g == 2) {
    cover_curve(2, "every genus 2 curve is hyperelliptic; T_2 = 2f1 + 2f2 - delta is the graph of "
                   "the hyperelliptic involution");
  } else if (ctx_.level == Level::SimpleCover && g >= 1) {
    const int d = ctx_.cover_degree;
    if ((d - 1) * (d - 1) <= g)
      cover_curve(d, "closure of the complement of the diagonal in C x_P1 C, irreducible of class "
                     "d f1 + d f2 - delta");
  }
}

void Catalog::build_samples() {
  const int q = opts_.family_density;
  const int g = ctx_.g;
  for (const auto& gen : generators_) {
    auto push = [&](const Rational& p) {
      if (auto cls = instantiate(gen, p)) samples_.push_back({gen.id, gen.mirrored, p, *cls});
    };
    if (std::holds_alternative<Ray>(gen.kind)) {
      push(0);
    } else if (std::holds_alternative<Region>(gen.kind)) {
      push(0);
      push(1);
    } else {
      const auto& fam = std::get<Family>(gen.kind);
      switch (fam.form) {
        case FamilyForm::Vojta:
        case FamilyForm::Jacobian:
          for (int j = 1; j <= q * 2 * g; ++j) push(1 + Rational(j) / q);
          break;
        case FamilyForm::VojtaMixed:
          for (int j = 0; j < 4 * q; ++j) push(Rational(j) / (4 * q));
          break;
        case FamilyForm::DiagonalSegment:
          push(0);
          if (g != 1) push(Rational(2 * g - 2));
          break;
        case FamilyForm::KernelBundle: {
          Integer lo = fam.lo.get_num();
          for (Integer d = lo; d <= lo + 2 * g; ++d) push(Rational(d));
          break;
        }
        case FamilyForm::SpecialKernel: {
          for (Integer d = fam.lo.get_num(); d <= fam.hi->get_num(); ++d) push(Rational(d));
          break;
        }
      }
    }
  }
}

const NefGenerator* Catalog::find(const std::string& id, bool mirrored) const {
  for (const auto& gen : generators_)
    if (gen.id == id && gen.mirrored == mirrored) return &gen;
  return nullptr;
}

std::optional<SurfaceClass> Catalog::instantiate(const NefGenerator& gen,
                                                 const Rational& param) const {
  std::optional<SurfaceClass> out;
  if (const auto* ray = std::get_if<Ray>(&gen.kind)) {
    if (param != 0) return std::nullopt;
    out = ray->cls;
  } else if (const auto* region = std::get_if<Region>(&gen.kind)) {
    Rational other = region_sum_bound(ctx_.g, region->d) - region->d;
    if (param == 0) out = SurfaceClass{region->d, other, -1};
    else if (param == 1) out = SurfaceClass{other, region->d, -1};
    else return std::nullopt;
  } else {
    const auto& fam = std::get<Family>(gen.kind);
    if (!fam.contains(param)) return std::nullopt;
    out = family_class(fam.form, ctx_.g, param);
  }
  if (gen.mirrored) out = swap(*out);
  return out;
}

std::optional<SurfaceClass> Catalog::instantiate(const std::string& id, bool mirrored,
                                                 const Rational& param) const {
  const NefGenerator* gen = find(id, mirrored);
  if (!gen) return std::nullopt;
  return instantiate(*gen, param);
}

std::vector<NefGenerator> generators(const GenusContext& ctx, const CatalogOptions& opts) {
  return Catalog(ctx, opts).generators();
}

std::vector<Obstruction> obstructions(const GenusContext& ctx) {
  return Catalog(ctx).obstructions();
}

std::vector<BoundarySample> boundary_samples(const Catalog& catalog, const Rational& a_min,
                                             const Rational& a_max, const Rational& step) {
  if (!(a_min > 1)) throw std::invalid_argument("boundary sampling needs a_min > 1");
  if (!(step > 0)) throw std::invalid_argument("boundary sampling needs step > 0");
  const int g = catalog.context().g;

  std::vector<BoundarySample> out;
  for (Rational a = a_min; a <= a_max; a += step) {
    std::optional<Rational> best;
    std::string source;
    auto offer = [&](const Rational& b, const std::string& id, bool mirrored) {
      if (!best || b < *best) {
        best = b;
        source = mirrored ? id + "~" : id;
      }
    };
    for (const auto& gen : catalog.generators()) {
      if (const auto* ray = std::get_if<Ray>(&gen.kind)) {
        if (ray->cls.c >= 0) continue;
        SurfaceClass r = gen.mirrored ? swap(ray->cls) : ray->cls;
        Rational s = -r.c;
        if (r.a / s <= a) offer(r.b / s, gen.id, gen.mirrored);
      } else if (const auto* region = std::get_if<Region>(&gen.kind)) {
        if (a >= region->d) {
          Rational b = region_sum_bound(g, region->d) - a;
          offer(b < region->d ? Rational(region->d) : b, gen.id, false);
        }
      } else {
        const auto& fam = std::get<Family>(gen.kind);
        if (fam.c_sign > 0) continue;
        if (fam.integral && !gen.mirrored) {
          Rational d = Rational(floor(a));
          if (fam.hi && d > *fam.hi) d = *fam.hi;
          if (auto cls = catalog.instantiate(gen, d)) offer(cls->b, gen.id, false);
        } else if (!gen.mirrored) {
          if (auto cls = catalog.instantiate(gen, a)) offer(cls->b, gen.id, false);
        }
      }
    }
    // mirrored families are not graphs over a; their samples act as corners
    for (const auto& inst : catalog.samples()) {
      if (!inst.mirrored || inst.cls.c >= 0) continue;
      const auto* gen = catalog.find(inst.id, true);
      if (!gen || !std::holds_alternative<Family>(gen->kind)) continue;
      Rational s = -inst.cls.c;
      if (inst.cls.a / s <= a) offer(inst.cls.b / s, inst.id, true);
    }
    if (best) out.push_back({a, *best, source});
  }
  return out;
}

std::vector<BoundarySample> boundary_samples(const GenusContext& ctx, const Rational& a_min,
                                             const Rational& a_max, const Rational& step) {
  return boundary_samples(Catalog(ctx), a_min, a_max, step);
}

std::vector<ChainPoint> lower_chain(const Catalog& catalog, int c_sign) {
  // keep the lowest b per a
  std::map<Rational, ChainPoint> by_a;
  for (const auto& inst : catalog.samples()) {
    if (sgn(inst.cls.c) != c_sign || c_sign == 0) continue;
    Rational s = abs(inst.cls.c);
    ChainPoint p{inst.cls.a / s, inst.cls.b / s, inst};
    auto it = by_a.find(p.a);
    if (it == by_a.end()) by_a.emplace(p.a, p);
    else if (p.b < it->second.b) it->second = p;
  }
  std::vector<ChainPoint> hull;
  for (auto& [a, p] : by_a) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& m = hull.back();
      Rational cross = (m.a - o.a) * (p.b - o.b) - (m.b - o.b) * (p.a - o.a);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  // the certified region extends in +f1, +f2; stop at the lowest point
  std::size_t lowest = 0;
  for (std::size_t k = 1; k < hull.size(); ++k)
    if (hull[k].b < hull[lowest].b) lowest = k;
  if (!hull.empty()) hull.resize(lowest + 1);
  return hull;
}

}  // namespace neflab
