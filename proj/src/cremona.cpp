#include "neflab/cremona.hpp"

#include <sstream>
#include <stdexcept>

namespace neflab {

std::string to_string(Base base) { return base == Base::P1xP1 ? "p1xp1" : "p2"; }

Base parse_base(const std::string& text) {
  if (text == "p1xp1") return Base::P1xP1;
  if (text == "p2") return Base::P2;
  throw std::invalid_argument("unknown base surface '" + text + "' (expected p1xp1 or p2)");
}

BlowupClass BlowupClass::p1xp1(Rational f1, Rational f2, std::vector<Rational> exc) {
  return {Base::P1xP1, {std::move(f1), std::move(f2)}, std::move(exc)};
}

BlowupClass BlowupClass::p2(Rational h, std::vector<Rational> exc) {
  return {Base::P2, {std::move(h)}, std::move(exc)};
}

BlowupClass BlowupClass::exceptional(Base base, std::size_t k, std::size_t index) {
  if (index < 1 || index > k) throw std::out_of_range("exceptional index out of range");
  std::vector<Rational> exc(k, Rational(0));
  exc[index - 1] = 1;
  return base == Base::P1xP1 ? p1xp1(0, 0, exc) : p2(0, exc);
}

BlowupClass BlowupClass::canonical(Base base, std::size_t k) {
  std::vector<Rational> exc(k, Rational(1));
  return base == Base::P1xP1 ? p1xp1(-2, -2, exc) : p2(-3, exc);
}

std::string to_string(const BlowupClass& d) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& q, const std::string& name) {
    if (q == 0) return;
    if (!first) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << "-";
    first = false;
    Rational m = abs(q);
    if (m != 1) os << to_string(m);
    os << name;
  };
  if (d.base == Base::P1xP1) {
    term(d.base_coeffs[0], "f1");
    term(d.base_coeffs[1], "f2");
  } else {
    term(d.base_coeffs[0], "H");
  }
  for (std::size_t i = 0; i < d.exc.size(); ++i) term(d.exc[i], "E" + std::to_string(i + 1));
  if (first) os << "0";
  return os.str();
}

namespace {

void check_compatible(const BlowupClass& d, const BlowupClass& e) {
  if (d.base != e.base) throw std::invalid_argument("pairing classes on different base surfaces");
  if (d.k() != e.k()) throw std::invalid_argument("pairing classes with different blow-up counts");
}

void check_index(const BlowupClass& d, std::size_t i) {
  if (i < 1 || i > d.k())
    throw std::out_of_range("exceptional index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(d.k()));
}

}  // namespace

Rational pair_blowup(const BlowupClass& d, const BlowupClass& e) {
  check_compatible(d, e);
  Rational out = d.base == Base::P1xP1
                     ? Rational(d.base_coeffs[0] * e.base_coeffs[1] + d.base_coeffs[1] * e.base_coeffs[0])
                     : Rational(d.base_coeffs[0] * e.base_coeffs[0]);
  for (std::size_t i = 0; i < d.k(); ++i) out -= d.exc[i] * e.exc[i];
  return out;
}

const Matrix4& p1xp1_cremona_matrix() {
  static const Matrix4 m{{{1, 0, 0, 0}, {1, 1, 1, 1}, {-1, 0, -1, 0}, {-1, 0, 0, -1}}};
  return m;
}

Matrix4 multiply(const Matrix4& x, const Matrix4& y) {
  Matrix4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Rational s = 0;
      for (int k = 0; k < 4; ++k) s += x[r][k] * y[k][c];
      out[r][c] = s;
    }
  return out;
}

BlowupClass cremona_p1p1(const BlowupClass& d, std::size_t i, std::size_t j) {
  if (d.base != Base::P1xP1) throw std::invalid_argument("cremona_p1p1 needs a P1 x P1 class");
  check_index(d, i);
  check_index(d, j);
  if (i == j) throw std::invalid_argument("cremona_p1p1 needs two distinct points");

  const auto& m = p1xp1_cremona_matrix();
  const std::array<Rational, 4> old{d.base_coeffs[0], d.base_coeffs[1], d.exc[i - 1], d.exc[j - 1]};
  std::array<Rational, 4> neu;
  for (int r = 0; r < 4; ++r) {
    neu[r] = 0;
    for (int c = 0; c < 4; ++c) neu[r] += m[r][c] * old[c];
  }
  BlowupClass out = d;
  out.base_coeffs = {neu[0], neu[1]};
  out.exc[i - 1] = neu[2];
  out.exc[j - 1] = neu[3];
  return out;
}

BlowupClass cremona_p2(const BlowupClass& d, std::size_t i, std::size_t j, std::size_t k) {
  if (d.base != Base::P2) throw std::invalid_argument("cremona_p2 needs a P2 class");
  check_index(d, i);
  check_index(d, j);
  check_index(d, k);
  if (i == j || j == k || i == k) throw std::invalid_argument("cremona_p2 needs three distinct points");

  // with multiplicities m = -exc: d' = 2d - mi - mj - mk, mi' = d - mj - mk
  const Rational deg = d.base_coeffs[0];
  const Rational mi = -d.exc[i - 1], mj = -d.exc[j - 1], mk = -d.exc[k - 1];
  BlowupClass out = d;
  out.base_coeffs[0] = 2 * deg - mi - mj - mk;
  out.exc[i - 1] = -(deg - mj - mk);
  out.exc[j - 1] = -(deg - mi - mk);
  out.exc[k - 1] = -(deg - mi - mj);
  return out;
}

BlowupClass p2_to_p1p1(const BlowupClass& d, std::size_t i, std::size_t j) {
  if (d.base != Base::P2) throw std::invalid_argument("p2_to_p1p1 needs a P2 class");
  if (d.k() < 2) throw std::invalid_argument("p2_to_p1p1 needs at least two blown-up points");
  check_index(d, i);
  check_index(d, j);
  if (i == j) throw std::invalid_argument("p2_to_p1p1 needs two distinct pivots");

  // H = f1 + f2 - E', E_i = f2 - E', E_j = f1 - E'
  const Rational h = d.base_coeffs[0];
  const Rational ei = d.exc[i - 1], ej = d.exc[j - 1];
  std::vector<Rational> exc{-h - ei - ej};
  for (std::size_t t = 1; t <= d.k(); ++t)
    if (t != i && t != j) exc.push_back(d.exc[t - 1]);
  return BlowupClass::p1xp1(h + ej, h + ei, std::move(exc));
}

ReductionTrace reduce_symmetric_class(int g, Base base) {
  if (g < 1) throw std::invalid_argument("reduction needs g >= 1");
  const std::size_t k = static_cast<std::size_t>(2 * g);
  ReductionTrace trace{base, g, {}, {}, {}, true};

  std::vector<Rational> exc(k, Rational(-1));
  if (base == Base::P1xP1) {
    trace.start = BlowupClass::p1xp1(1, g, exc);
  } else {
    exc[0] = -(g - 1);
    trace.start = BlowupClass::p2(g, exc);
  }
  const BlowupClass canonical = BlowupClass::canonical(base, k);
  const Rational self0 = pair_blowup(trace.start, trace.start);
  const Rational canon0 = pair_blowup(trace.start, canonical);

  BlowupClass cur = trace.start;
  auto record = [&](std::string op) {
    Rational self = pair_blowup(cur, cur);
    Rational canon = pair_blowup(cur, canonical);
    if (self != self0 || canon != canon0) trace.pairing_preserved = false;
    trace.steps.push_back({std::move(op), cur, self, canon});
  };

  if (base == Base::P1xP1) {
    for (std::size_t s = 0; s < static_cast<std::size_t>(g); ++s) {
      std::size_t i = 2 * s + 1, j = 2 * s + 2;
      cur = cremona_p1p1(cur, i, j);
      record("cremona_p1p1(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    trace.annotations.push_back(
        "assumes the images of each point pair never share a vertical or horizontal fiber "
        "(generality; not checked on the lattice)");
  } else {
    for (std::size_t s = 1; s < static_cast<std::size_t>(g); ++s) {
      std::size_t j = 2 * s, l = 2 * s + 1;
      cur = cremona_p2(cur, 1, j, l);
      record("cremona_p2(1," + std::to_string(j) + "," + std::to_string(l) + ")");
    }
    trace.annotations.push_back(
        "assumes the blown-up points stay in general position under each quadratic "
        "transformation (not checked on the lattice)");
  }
  return trace;
}

}  // namespace neflab
