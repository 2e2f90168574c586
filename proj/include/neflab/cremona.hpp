#pragma once

#include "neflab/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace neflab {

enum class Base { P1xP1, P2 };

std::string to_string(Base base);
Base parse_base(const std::string& text);

// Class on a blow-up of P1 x P1 (base = (f1, f2)) or P2 (base = (H)) at k
// points; exc[i] is the coefficient of E_{i+1}, so f1 + f2 - E1 - E2 has
// exc = {-1, -1}.
struct BlowupClass {
  Base base = Base::P1xP1;
  std::vector<Rational> base_coeffs;
  std::vector<Rational> exc;

  static BlowupClass p1xp1(Rational f1, Rational f2, std::vector<Rational> exc);
  static BlowupClass p2(Rational h, std::vector<Rational> exc);
  static BlowupClass exceptional(Base base, std::size_t k, std::size_t index);  // E_index, 1-based
  static BlowupClass canonical(Base base, std::size_t k);

  std::size_t k() const { return exc.size(); }
  bool operator==(const BlowupClass&) const = default;
};

std::string to_string(const BlowupClass& d);

// f1.f2 = 1, fi^2 = 0 (P1 x P1); H^2 = 1 (P2); Ei^2 = -1; all other products 0.
Rational pair_blowup(const BlowupClass& d, const BlowupClass& e);

using Matrix4 = std::array<std::array<Rational, 4>, 4>;

// Change of coordinates on (f1, f2, E_i, E_j) for the elementary
// transformation of P1 x P1 centred at two blown-up points.
const Matrix4& p1xp1_cremona_matrix();
Matrix4 multiply(const Matrix4& x, const Matrix4& y);

// i, j are 1-based exceptional indices.
BlowupClass cremona_p1p1(const BlowupClass& d, std::size_t i, std::size_t j);

// Standard quadratic transformation centred at E_i, E_j, E_k.
BlowupClass cremona_p2(const BlowupClass& d, std::size_t i, std::size_t j, std::size_t k);

// Blows down the line through the pivot points: f1 = H - E_i, f2 = H - E_j,
// new E_1 = H - E_i - E_j; the other exceptional classes keep their order.
BlowupClass p2_to_p1p1(const BlowupClass& d, std::size_t i = 1, std::size_t j = 2);

struct ReductionStep {
  std::string operation;  // e.g. "cremona_p1p1(1,2)"
  BlowupClass result;
  Rational self_pairing;
  Rational canonical_pairing;
};

struct ReductionTrace {
  Base base;
  int g;
  BlowupClass start;
  std::vector<ReductionStep> steps;
  std::vector<std::string> annotations;
  bool pairing_preserved = true;

  const BlowupClass& final_class() const { return steps.empty() ? start : steps.back().result; }
};

// P1 x P1: f1 + g f2 - E1 - ... - E2g, reduced pairwise to f1 in g steps.
// P2: gH - (g-1)E1 - E2 - ... - E2g, reduced to H - E2g in g-1 steps.
ReductionTrace reduce_symmetric_class(int g, Base base);

}  // namespace neflab
