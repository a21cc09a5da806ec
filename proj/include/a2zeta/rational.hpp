// Exact rational scalars (GMP) and the complex<double> companion used by the
// floating-point comparison paths. Scalar traits unify the two for the
// templated polynomial and matrix code.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "a2zeta/util.hpp"

namespace a2zeta {

using Rat = mpq_class;
using Cplx = std::complex<double>;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_long(long v) { return Rat(v); }
  static bool is_zero(const Rat& x) { return sgn(x) == 0; }
  // Pivot quality: prefer any nonzero entry, exact arithmetic needs no more.
  static double pivot_size(const Rat& x) { return is_zero(x) ? 0.0 : 1.0; }
};

template <>
struct ScalarTraits<Cplx> {
  static Cplx zero() { return Cplx(0.0, 0.0); }
  static Cplx one() { return Cplx(1.0, 0.0); }
  static Cplx from_long(long v) { return Cplx(static_cast<double>(v), 0.0); }
  static bool is_zero(const Cplx& x) { return x == Cplx(0.0, 0.0); }
  static double pivot_size(const Cplx& x) { return std::abs(x); }
};

}  // namespace a2zeta
