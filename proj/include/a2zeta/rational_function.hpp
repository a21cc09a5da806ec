// Quotients of exact polynomials, kept in lowest terms with a monic
// denominator so equal functions have identical representatives.
#pragma once

#include "a2zeta/polynomial.hpp"

namespace a2zeta {

class RationalFunction {
 public:
  RationalFunction() : num_(Poly::zero()), den_(Poly::one()) {}
  explicit RationalFunction(Poly p) : num_(std::move(p)), den_(Poly::one()) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction one() { return RationalFunction(Poly::one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction inverse() const {
    if (is_zero()) throw DomainError("rational function division by zero");
    return RationalFunction(den_, num_);
  }
  RationalFunction pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RationalFunction r = one();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // f(s*u)
  RationalFunction scale_arg(const Rat& s) const {
    return RationalFunction(num_.scale_arg(s), den_.scale_arg(s));
  }
  // f(-u)
  RationalFunction negate_arg() const {
    return RationalFunction(num_.negate_arg(), den_.negate_arg());
  }
  // f(1/(s*u)); the common reversal degree cancels between the two halves.
  RationalFunction reciprocal_arg(const Rat& s) const {
    int d = std::max(num_.degree(), den_.degree());
    return RationalFunction(reverse_transform(num_, s, d), reverse_transform(den_, s, d));
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::one();
      return;
    }
    Poly g = poly_gcd(num_, den_);
    num_ = poly_exact_div(num_, g);
    den_ = poly_exact_div(den_, g);
    Rat lead = den_.leading();
    if (lead != Rat(1)) {
      Rat inv = Rat(1) / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }
  Poly num_, den_;
};

}  // namespace a2zeta
