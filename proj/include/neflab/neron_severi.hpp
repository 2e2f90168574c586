#pragma once

#include "neflab/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace neflab {

// Divisor class a*f1 + b*f2 + c*delta on C x C.
struct SurfaceClass {
  Rational a;
  Rational b;
  Rational c;

  static SurfaceClass f1() { return {1, 0, 0}; }
  static SurfaceClass f2() { return {0, 1, 0}; }
  static SurfaceClass diagonal() { return {0, 0, 1}; }

  SurfaceClass operator+(const SurfaceClass& o) const { return {a + o.a, b + o.b, c + o.c}; }
  SurfaceClass operator-(const SurfaceClass& o) const { return {a - o.a, b - o.b, c - o.c}; }
  SurfaceClass operator*(const Rational& s) const { return {a * s, b * s, c * s}; }
  bool operator==(const SurfaceClass& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const SurfaceClass& o) const { return !(*this == o); }
};

inline SurfaceClass operator*(const Rational& s, const SurfaceClass& d) { return d * s; }

std::string to_string(const SurfaceClass& d);

// Intersection form on N^1(C x C): f1^2 = f2^2 = 0, f1.f2 = 1, delta.fi = 1,
// delta^2 = 2 - 2g.
Rational pair(const SurfaceClass& d, const SurfaceClass& e, int g);
Rational self_intersection(const SurfaceClass& d, int g);

// Exchanges the two factors.
SurfaceClass swap(const SurfaceClass& d);

// Class on C^n in the basis {f_i} and {delta_ij, i < j}; indices are 1-based
// in the accessors. No intersection product is offered on C^n.
class CnClass {
 public:
  explicit CnClass(int n);

  int n() const { return n_; }
  std::size_t dimension() const { return f_.size() + delta_.size(); }

  const Rational& f(int i) const;
  Rational& f(int i);
  const Rational& delta(int i, int j) const;
  Rational& delta(int i, int j);

  const std::vector<Rational>& f_coeffs() const { return f_; }
  const std::vector<Rational>& delta_coeffs() const { return delta_; }

  CnClass& operator+=(const CnClass& o);
  CnClass operator+(const CnClass& o) const;
  CnClass operator*(const Rational& s) const;
  bool operator==(const CnClass& o) const;
  bool operator!=(const CnClass& o) const { return !(*this == o); }

  // Position of delta_ij in delta_coeffs(): pairs enumerated lexicographically.
  std::size_t pair_index(int i, int j) const;

 private:
  int n_;
  std::vector<Rational> f_;
  std::vector<Rational> delta_;
};

std::string to_string(const CnClass& d);

// Class on C x C_{n-1} in the basis (f, q*x, q*(delta/2), z).
struct MixedClass {
  Rational coeff_f;
  Rational coeff_qx;
  Rational coeff_qdelta_half;
  Rational coeff_z;
};

// Pullback along 1_C x pi : C^n -> C x C_{n-1}.
CnClass lift_to_Cn(const MixedClass& m, int n);

// pr_ij^*(a f1 + b f2 + c delta) = a f_i + b f_j + c delta_ij.
CnClass pullback_sum(int i, int j, const SurfaceClass& d, int n);

// ((n-1)d/(d-g)) f1 + d (f2 + ... + fn) - sum_{i<j} delta_ij.
CnClass symmetric_product_class(int g, int n, const Rational& d);

}  // namespace neflab
