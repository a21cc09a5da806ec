// Dense scalar matrices and matrices of polynomials, with two independent
// determinant routes: evaluation at integer nodes followed by interpolation,
// and fraction-free elimination directly on polynomial entries.
#pragma once

#include <utility>
#include <vector>

#include "a2zeta/polynomial.hpp"
#include "a2zeta/util.hpp"

namespace a2zeta {

template <class K>
class ScalarMat {
 public:
  ScalarMat() : rows_(0), cols_(0) {}
  ScalarMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, ScalarTraits<K>::zero()) {}

  static ScalarMat identity(int n) {
    ScalarMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ScalarTraits<K>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const K& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend ScalarMat operator*(const ScalarMat& x, const ScalarMat& y) {
    if (x.cols_ != y.rows_) throw DomainError("matrix product shape mismatch");
    ScalarMat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const K& v = x.at(i, k);
        if (ScalarTraits<K>::is_zero(v)) continue;
        for (int j = 0; j < y.cols_; ++j) r.at(i, j) += v * y.at(k, j);
      }
    return r;
  }
  friend ScalarMat operator+(const ScalarMat& x, const ScalarMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("matrix sum shape mismatch");
    ScalarMat r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }
  friend bool operator==(const ScalarMat& x, const ScalarMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  ScalarMat transpose() const {
    ScalarMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  K trace() const {
    K t = ScalarTraits<K>::zero();
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

 private:
  int rows_, cols_;
  std::vector<K> a_;
};

using RatMat = ScalarMat<Rat>;
using CplxMat = ScalarMat<Cplx>;

// Determinant of an exact rational matrix: clear denominators row by row,
// then run Bareiss elimination over the integers.
inline Rat scalar_det(const RatMat& m) {
  int n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of non-square matrix");
  if (n == 0) return Rat(1);
  std::vector<mpz_class> a(static_cast<size_t>(n) * n);
  mpz_class scale(1);
  for (int i = 0; i < n; ++i) {
    mpz_class l(1);
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    scale *= l;
    for (int j = 0; j < n; ++j) {
      mpq_class v = m.at(i, j) * Rat(l);
      a[static_cast<size_t>(i) * n + j] = v.get_num();
    }
  }
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * n + j]; };
  int sign = 1;
  mpz_class prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(at(k, k)) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(at(i, k)) != 0) { p = i; break; }
      if (p < 0) return Rat(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rat det(at(n - 1, n - 1) * sign, scale);
  det.canonicalize();
  return det;
}

// Determinant of a complex matrix via partially pivoted elimination.
inline Cplx scalar_det(const CplxMat& m) {
  int n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of non-square matrix");
  if (n == 0) return Cplx(1.0, 0.0);
  CplxMat a = m;
  Cplx det(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a.at(i, k)) > std::abs(a.at(p, k))) p = i;
    if (std::abs(a.at(p, k)) == 0.0) return Cplx(0.0, 0.0);
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      det = -det;
    }
    det *= a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      Cplx f = a.at(i, k) / a.at(k, k);
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

template <class K>
class PolyMat {
 public:
  PolyMat() : rows_(0), cols_(0) {}
  PolyMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static PolyMat identity(int n) {
    PolyMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial<K>::one();
    return m;
  }
  static PolyMat from_scalar(const ScalarMat<K>& s) {
    PolyMat m(s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i)
      for (int j = 0; j < s.cols(); ++j)
        if (!ScalarTraits<K>::is_zero(s.at(i, j))) m.at(i, j) = Polynomial<K>::constant(s.at(i, j));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Polynomial<K>& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Polynomial<K>& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend PolyMat operator+(const PolyMat& x, const PolyMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("matrix sum shape mismatch");
    PolyMat r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }
  friend PolyMat operator-(const PolyMat& x, const PolyMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("matrix diff shape mismatch");
    PolyMat r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }
  friend PolyMat operator*(const PolyMat& x, const PolyMat& y) {
    if (x.cols_ != y.rows_) throw DomainError("matrix product shape mismatch");
    PolyMat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const Polynomial<K>& v = x.at(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) {
          if (y.at(k, j).is_zero()) continue;
          r.at(i, j) += v * y.at(k, j);
        }
      }
    return r;
  }
  friend PolyMat operator*(const Polynomial<K>& p, const PolyMat& m) {
    PolyMat r = m;
    for (auto& e : r.a_) e = p * e;
    return r;
  }
  friend bool operator==(const PolyMat& x, const PolyMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }

  ScalarMat<K> eval(const K& x) const {
    ScalarMat<K> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).eval(x);
    return r;
  }

  Polynomial<K> trace() const {
    Polynomial<K> t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  int max_degree() const {
    int d = -1;
    for (const auto& e : a_) d = std::max(d, e.degree());
    return d;
  }

 private:
  int rows_, cols_;
  std::vector<Polynomial<K>> a_;
};

using RatPolyMat = PolyMat<Rat>;
using CplxPolyMat = PolyMat<Cplx>;

// Sum over rows of the largest entry degree (and the same over columns);
// the smaller of the two bounds deg det. A row or column of zeros gives -1.
template <class K>
int det_degree_bound(const PolyMat<K>& m) {
  int n = m.rows();
  long row_sum = 0, col_sum = 0;
  for (int i = 0; i < n; ++i) {
    int d = -1;
    for (int j = 0; j < n; ++j) d = std::max(d, m.at(i, j).degree());
    if (d < 0) return -1;
    row_sum += d;
  }
  for (int j = 0; j < n; ++j) {
    int d = -1;
    for (int i = 0; i < n; ++i) d = std::max(d, m.at(i, j).degree());
    if (d < 0) return -1;
    col_sum += d;
  }
  return static_cast<int>(std::min(row_sum, col_sum));
}

// Determinant via evaluation at 0, 1, -1, 2, -2, ... and interpolation.
// Evaluation points are independent and run on the worker pool.
template <class K>
Polynomial<K> det(const PolyMat<K>& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  if (m.rows() == 0) return Polynomial<K>::one();
  int bound = det_degree_bound(m);
  if (bound < 0) return Polynomial<K>::zero();
  int npts = bound + 1;
  std::vector<K> xs(npts), ys(npts);
  for (int k = 0; k < npts; ++k) {
    long v = (k + 1) / 2;
    xs[k] = ScalarTraits<K>::from_long(k % 2 == 1 ? v : -v);
  }
  parallel_for_index(npts, [&](int k) { ys[k] = scalar_det(m.eval(xs[k])); });
  return poly_interpolate(xs, ys);
}

// Independent determinant route: Bareiss elimination on polynomial entries,
// with exact polynomial division at each step.
inline Poly det_bareiss(const RatPolyMat& m) {
  int n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of non-square matrix");
  if (n == 0) return Poly::one();
  RatPolyMat a = m;
  int sign = 1;
  Poly prev = Poly::one();
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, k).is_zero()) { p = i; break; }
      if (p < 0) return Poly::zero();
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = poly_exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
      a.at(i, k) = Poly::zero();
    }
    prev = a.at(k, k);
  }
  Poly d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

inline CplxPolyMat poly_mat_to_cplx(const RatPolyMat& m) {
  CplxPolyMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = poly_to_cplx(m.at(i, j));
  return r;
}

}  // namespace a2zeta
