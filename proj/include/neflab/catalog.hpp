#pragma once

#include "neflab/neron_severi.hpp"
#include "neflab/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace neflab {

enum class Level { Arbitrary, General, VeryGeneral, SimpleCover };

struct GenusContext {
  int g = 0;
  Level level = Level::Arbitrary;
  int cover_degree = 0;  // only meaningful for SimpleCover

  static GenusContext arbitrary(int g) { return {g, Level::Arbitrary, 0}; }
  static GenusContext general(int g) { return {g, Level::General, 0}; }
  static GenusContext very_general(int g) { return {g, Level::VeryGeneral, 0}; }
  static GenusContext simple_cover(int g, int d) { return {g, Level::SimpleCover, d}; }

  bool operator==(const GenusContext&) const = default;
};

std::string to_string(const GenusContext& ctx);
// "arbitrary", "general", "very-general", "simple-cover:<d>" (also "hyperelliptic").
GenusContext parse_context(int g, const std::string& level);

// Closed forms of the one-parameter families. The parameter is the f1
// coefficient except for VojtaMixed, whose class is -s f1 + B(s) f2 + delta.
enum class FamilyForm {
  Vojta,            // a f1 + (1 + g/(a-1) + (g-1)(a-1)) f2 - delta, a > 1
  VojtaMixed,       // -s f1 + (-1 + g/(1-s) + (g-1)(1-s)) f2 + delta, 0 <= s < 1
  Jacobian,         // a f1 + (1 + g^2/(a-1)) f2 - delta, a > 1
  DiagonalSegment,  // x f1 + (2g-2-x) f2 + delta, 0 <= x <= 2g-2
  KernelBundle,     // d f1 + (1 + g/(d-g)) f2 - delta, integral d >= floor(3g/2)+1
  SpecialKernel,    // d f1 + d/(d-g+1) f2 - delta, integral floor(3g/2) <= d <= 2g-2
};

std::string to_string(FamilyForm form);

struct Ray {
  SurfaceClass cls;
};

struct Family {
  FamilyForm form;
  Rational lo;
  bool lo_open = false;
  std::optional<Rational> hi;  // unbounded when empty
  bool hi_open = false;
  bool integral = false;
  int c_sign = -1;

  bool contains(const Rational& param) const;
};

// a, b >= d and a + b >= 2 + 2g/(d-1) on the slice c = -1.
struct Region {
  int d;
};

struct NefGenerator {
  std::string id;
  std::variant<Ray, Family, Region> kind;
  bool mirrored = false;  // f1 <-> f2 image of the underlying statement
  std::string provenance;
};

struct Obstruction {
  enum class Kind { PairF1, PairF2, PairDiagonal, NegativeSquare, CoverCurve };
  Kind kind;
  std::optional<SurfaceClass> cls;  // absent for NegativeSquare
  int d = 0;                        // cover degree for CoverCurve
  std::string justification;
};

// One concrete nef class drawn from a generator.
struct GeneratorInstance {
  std::string id;
  bool mirrored = false;
  Rational param;  // family parameter, region corner index, 0 for rays
  SurfaceClass cls;

  bool operator==(const GeneratorInstance&) const = default;
};

// a*x + beta/x + gamma*x style closed forms: for x in (0, xmax] the family
// instance is (x + shift, alpha + beta/x + gamma*x, c_sign).
struct ReciprocalForm {
  Rational shift;
  Rational alpha;
  Rational beta;
  Rational gamma;
  std::optional<Rational> xmax;
  int c_sign;
  // maps x back to the family parameter
  Rational param_of(const Rational& x) const;
};

std::optional<ReciprocalForm> reciprocal_form(const Family& fam, int g);

struct CatalogOptions {
  Integer ross_denominator = 1000000;
  int family_density = 4;  // samples per unit of family parameter
};

class Catalog {
 public:
  explicit Catalog(GenusContext ctx, CatalogOptions opts = {});

  const GenusContext& context() const { return ctx_; }
  const CatalogOptions& options() const { return opts_; }
  const std::vector<NefGenerator>& generators() const { return generators_; }
  const std::vector<Obstruction>& obstructions() const { return obstructions_; }
  const std::vector<std::string>& notes() const { return notes_; }

  const NefGenerator* find(const std::string& id, bool mirrored) const;

  // nullopt when param lies outside the generator's domain.
  std::optional<SurfaceClass> instantiate(const NefGenerator& gen, const Rational& param) const;
  std::optional<SurfaceClass> instantiate(const std::string& id, bool mirrored,
                                          const Rational& param) const;

  // Finite set of instances (rays, region corners, family samples); closed
  // under swap. Used for conic-combination certificates.
  const std::vector<GeneratorInstance>& samples() const { return samples_; }

 private:
  void build_generators();
  void build_obstructions();
  void build_samples();
  void add(NefGenerator gen, bool with_mirror);

  GenusContext ctx_;
  CatalogOptions opts_;
  std::vector<NefGenerator> generators_;
  std::vector<Obstruction> obstructions_;
  std::vector<std::string> notes_;
  std::vector<GeneratorInstance> samples_;
};

std::vector<NefGenerator> generators(const GenusContext& ctx, const CatalogOptions& opts = {});
std::vector<Obstruction> obstructions(const GenusContext& ctx);

// Largest cover degree d with (d-1)^2 <= g.
int max_cover_degree(int g);
Rational region_sum_bound(int g, int d);  // 2 + 2g/(d-1)

// Ross's symmetric class, rounded up: (r, r, -1) with r >= 1 + sqrt(g+1).
Rational ross_coefficient(int g, const Integer& denominator);

struct BoundarySample {
  Rational a;
  Rational b_min;
  std::string source;
};

// For each sampled a, the least b over the per-generator boundaries of the
// slice c = -1: families evaluated at a, rays and sampled instances by
// dominance, regions by their inequalities. Values of a where nothing applies
// are skipped.
std::vector<BoundarySample> boundary_samples(const Catalog& catalog, const Rational& a_min,
                                             const Rational& a_max, const Rational& step);
std::vector<BoundarySample> boundary_samples(const GenusContext& ctx, const Rational& a_min,
                                             const Rational& a_max, const Rational& step);

// Lower-left convex chain of the sampled instances with the given sign of c,
// normalized to |c| = 1, as points (a, b). The certified region of that slice
// is conv(chain) + R>=0 f1 + R>=0 f2. Ordered by increasing a, strictly
// decreasing b.
struct ChainPoint {
  Rational a;
  Rational b;
  GeneratorInstance source;
};
std::vector<ChainPoint> lower_chain(const Catalog& catalog, int c_sign);

}  // namespace neflab
