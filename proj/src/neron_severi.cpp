#include "neflab/neron_severi.hpp"

#include <sstream>
#include <stdexcept>

namespace neflab {

std::string to_string(const SurfaceClass& d) {
  return "(" + to_string(d.a) + ", " + to_string(d.b) + ", " + to_string(d.c) + ")";
}

Rational pair(const SurfaceClass& d, const SurfaceClass& e, int g) {
  if (g < 0) throw std::domain_error("genus must be nonnegative");
  return d.a * e.b + e.a * d.b + d.a * e.c + e.a * d.c + d.b * e.c + e.b * d.c +
         d.c * e.c * Rational(2 - 2 * g);
}

Rational self_intersection(const SurfaceClass& d, int g) { return pair(d, d, g); }

SurfaceClass swap(const SurfaceClass& d) { return {d.b, d.a, d.c}; }

CnClass::CnClass(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("C^n classes need n >= 2");
  f_.assign(static_cast<std::size_t>(n), Rational(0));
  delta_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, Rational(0));
}

std::size_t CnClass::pair_index(int i, int j) const {
  if (i < 1 || j > n_ || i >= j)
    throw std::out_of_range("diagonal index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") invalid for n=" + std::to_string(n_));
  // pairs (1,2),(1,3),...,(1,n),(2,3),...
  std::size_t before = 0;
  for (int r = 1; r < i; ++r) before += static_cast<std::size_t>(n_ - r);
  return before + static_cast<std::size_t>(j - i - 1);
}

const Rational& CnClass::f(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("fiber index out of range");
  return f_[static_cast<std::size_t>(i - 1)];
}

Rational& CnClass::f(int i) {
  if (i < 1 || i > n_) throw std::out_of_range("fiber index out of range");
  return f_[static_cast<std::size_t>(i - 1)];
}

const Rational& CnClass::delta(int i, int j) const { return delta_[pair_index(i, j)]; }
Rational& CnClass::delta(int i, int j) { return delta_[pair_index(i, j)]; }

CnClass& CnClass::operator+=(const CnClass& o) {
  if (o.n_ != n_) throw std::invalid_argument("adding classes on different C^n");
  for (std::size_t k = 0; k < f_.size(); ++k) f_[k] += o.f_[k];
  for (std::size_t k = 0; k < delta_.size(); ++k) delta_[k] += o.delta_[k];
  return *this;
}

CnClass CnClass::operator+(const CnClass& o) const {
  CnClass out = *this;
  out += o;
  return out;
}

CnClass CnClass::operator*(const Rational& s) const {
  CnClass out = *this;
  for (auto& x : out.f_) x *= s;
  for (auto& x : out.delta_) x *= s;
  return out;
}

bool CnClass::operator==(const CnClass& o) const {
  return n_ == o.n_ && f_ == o.f_ && delta_ == o.delta_;
}

std::string to_string(const CnClass& d) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& q, const std::string& name) {
    if (q == 0) return;
    if (!first) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << "-";
    first = false;
    Rational m = abs(q);
    if (m != 1) os << to_string(m) << "*";
    os << name;
  };
  for (int i = 1; i <= d.n(); ++i) term(d.f(i), "f" + std::to_string(i));
  for (int i = 1; i <= d.n(); ++i)
    for (int j = i + 1; j <= d.n(); ++j)
      term(d.delta(i, j), "d" + std::to_string(i) + std::to_string(j));
  if (first) os << "0";
  return os.str();
}

CnClass lift_to_Cn(const MixedClass& m, int n) {
  if (n < 2) throw std::invalid_argument("lift_to_Cn needs n >= 2");
  CnClass out(n);
  out.f(1) = m.coeff_f;
  for (int i = 2; i <= n; ++i) {
    out.f(i) = m.coeff_qx;
    out.delta(1, i) = m.coeff_z;
    for (int j = i + 1; j <= n; ++j) out.delta(i, j) = m.coeff_qdelta_half;
  }
  return out;
}

CnClass pullback_sum(int i, int j, const SurfaceClass& d, int n) {
  if (i < 1 || i >= j || j > n)
    throw std::invalid_argument("pullback_sum needs 1 <= i < j <= n");
  CnClass out(n);
  out.f(i) = d.a;
  out.f(j) = d.b;
  out.delta(i, j) = d.c;
  return out;
}

CnClass symmetric_product_class(int g, int n, const Rational& d) {
  if (d <= g) throw std::domain_error("symmetric_product_class needs d > g");
  CnClass out(n);
  out.f(1) = Rational(n - 1) * d / (d - g);
  for (int i = 2; i <= n; ++i) out.f(i) = d;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.delta(i, j) = -1;
  return out;
}

}  // namespace neflab
