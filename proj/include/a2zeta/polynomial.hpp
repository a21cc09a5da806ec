// Univariate polynomials with coefficients in an exact or floating scalar
// field, constant term first. Trailing zeros are never stored; the zero
// polynomial has an empty coefficient list and degree -1.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "a2zeta/rational.hpp"

namespace a2zeta {

template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(K c) : c_{std::move(c)} { trim(); }
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(ScalarTraits<K>::one()); }
  static Polynomial constant(K c) { return Polynomial(std::move(c)); }
  static Polynomial monomial(K c, int deg) {
    std::vector<K> v(deg + 1, ScalarTraits<K>::zero());
    v[deg] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(ScalarTraits<K>::one(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == ScalarTraits<K>::one(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return ScalarTraits<K>::zero();
    return c_[i];
  }
  K leading() const { return c_.empty() ? ScalarTraits<K>::zero() : c_.back(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), ScalarTraits<K>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), ScalarTraits<K>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Polynomial(std::move(v));
  }
  Polynomial operator-() const {
    std::vector<K> v = c_;
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, ScalarTraits<K>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const K& s, const Polynomial& p) {
    if (ScalarTraits<K>::is_zero(s)) return zero();
    std::vector<K> v = p.c_;
    for (auto& x : v) x = s * x;
    return Polynomial(std::move(v));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  K eval(const K& x) const {
    K r = ScalarTraits<K>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // p(s*u)
  Polynomial scale_arg(const K& s) const {
    std::vector<K> v = c_;
    K pw = ScalarTraits<K>::one();
    for (size_t i = 1; i < v.size(); ++i) {
      pw = pw * s;
      v[i] *= pw;
    }
    return Polynomial(std::move(v));
  }
  // p(-u)
  Polynomial negate_arg() const {
    std::vector<K> v = c_;
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Polynomial(std::move(v));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<K> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = ScalarTraits<K>::from_long(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(v));
  }

  Polynomial pow(int n) const {
    Polynomial r = one();
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  // Coefficients of *this modulo u^n (truncated power series view).
  std::vector<K> truncated(int n) const {
    std::vector<K> v(n, ScalarTraits<K>::zero());
    for (int i = 0; i < n && i < static_cast<int>(c_.size()); ++i) v[i] = c_[i];
    return v;
  }

 private:
  void trim() {
    while (!c_.empty() && ScalarTraits<K>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

using Poly = Polynomial<Rat>;
using CPoly = Polynomial<Cplx>;

// Quotient and remainder over a field; divisor must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {Poly::zero(), a};
  std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
  Rat lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rat c = rem[i] / lead;
    if (sgn(c) == 0) continue;
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

// Exact quotient; throws when the division leaves a remainder.
inline Poly poly_exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

inline bool poly_divides(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero();
  return poly_divmod(b, a).second.is_zero();
}

inline Poly poly_monic(const Poly& p) {
  if (p.is_zero()) return p;
  Rat inv = Rat(1) / p.leading();
  return inv * p;
}

// Monic gcd; gcd(0,0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

// (s*u)^D * p(1/(s*u)) as a polynomial; requires D >= deg p.
inline Poly reverse_transform(const Poly& p, const Rat& s, int d) {
  if (d < p.degree()) throw DomainError("reverse_transform: D smaller than degree");
  std::vector<Rat> v(d + 1, Rat(0));
  Rat pw(1);
  // coefficient of u^(D-k) is c_k * s^(D-k)
  for (int m = 0; m <= d; ++m) {  // m = D-k
    int k = d - m;
    if (k <= p.degree()) v[m] = p.coeff(k) * pw;
    pw *= s;
  }
  return Poly(std::move(v));
}

// Newton interpolation through distinct nodes xs.
template <class K>
Polynomial<K> poly_interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
  int n = static_cast<int>(xs.size());
  std::vector<K> dd(ys);  // divided differences, computed in place
  for (int level = 1; level < n; ++level)
    for (int i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  Polynomial<K> result = Polynomial<K>::constant(dd[n - 1]);
  for (int i = n - 2; i >= 0; --i) {
    Polynomial<K> lin(std::vector<K>{-xs[i], ScalarTraits<K>::one()});
    result = result * lin + Polynomial<K>::constant(dd[i]);
  }
  return result;
}

inline std::vector<std::string> poly_to_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(rat_to_string(c));
  return out;
}

inline Poly poly_from_strings(const std::vector<std::string>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const auto& s : v) c.push_back(rat_from_string(s));
  return Poly(std::move(c));
}

inline CPoly poly_to_cplx(const Poly& p) {
  std::vector<Cplx> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c.get_d(), 0.0);
  return CPoly(std::move(v));
}

// Coefficient-wise comparison with relative tolerance (floating checks).
inline bool cpoly_approx_equal(const CPoly& a, const CPoly& b, double rel_tol) {
  int d = std::max(a.degree(), b.degree());
  double scale = 1.0;
  for (int i = 0; i <= d; ++i) scale = std::max({scale, std::abs(a.coeff(i)), std::abs(b.coeff(i))});
  for (int i = 0; i <= d; ++i)
    if (std::abs(a.coeff(i) - b.coeff(i)) > rel_tol * scale) return false;
  return true;
}

}  // namespace a2zeta
