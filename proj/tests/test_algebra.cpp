#include "doctest.h"

#include <random>

#include "a2zeta/matrix.hpp"
#include "a2zeta/rational_function.hpp"

using namespace a2zeta;

namespace {

Poly upoly(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

RatPolyMat random_poly_mat(std::mt19937& rng, int n, int max_deg) {
  std::uniform_int_distribution<int> coeff(-3, 3), deg(0, max_deg);
  RatPolyMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> c(deg(rng) + 1);
      for (auto& x : c) x = Rat(coeff(rng));
      m.at(i, j) = Poly(std::move(c));
    }
  return m;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  Poly p = upoly({1, 2});   // 1 + 2u
  Poly q = upoly({-1, 1});  // u - 1
  CHECK(p * q == upoly({-1, -1, 2}));
  CHECK(p + q == upoly({0, 3}));
  CHECK(p.eval(Rat(2)) == Rat(5));
  CHECK(Poly::zero().degree() == -1);
  CHECK(upoly({0}).is_zero());
  CHECK(p.negate_arg() == upoly({1, -2}));
  CHECK(p.scale_arg(Rat(3)) == upoly({1, 6}));
}

TEST_CASE("division, gcd, monic convention") {
  Poly a = upoly({1, 0, 0, -1});  // 1 - u^3
  Poly b = upoly({1, -1});        // 1 - u
  auto [quot, rem] = poly_divmod(a, b);
  CHECK(rem.is_zero());
  CHECK(quot * b == a);
  // gcd(1-u^3, 1-u) is monic: u - 1
  CHECK(poly_gcd(a, b) == upoly({-1, 1}));
  CHECK(poly_gcd(a, Poly::zero()) == poly_monic(a));
  CHECK(poly_gcd(Poly::zero(), Poly::zero()).is_zero());
  CHECK(poly_divides(b, a));
  CHECK(!poly_divides(upoly({1, 1, 1}), a + Poly::one()));
}

TEST_CASE("reverse transform") {
  CHECK(reverse_transform(upoly({1, -1}), Rat(1), 1) == upoly({-1, 1}));
  CHECK(reverse_transform(Poly::one(), Rat(4), 3) == upoly({0, 0, 0, 64}));
  CHECK_THROWS_AS(reverse_transform(upoly({1, 2, 3}), Rat(1), 1), DomainError);
  // involution up to scalar: rev(rev(p)) = s^D p when deg p = D
  Poly p = upoly({2, 5, 7});
  CHECK(reverse_transform(reverse_transform(p, Rat(3), 2), Rat(3), 2) == Rat(9) * p);
}

TEST_CASE("determinants: small closed forms") {
  CHECK(det(RatPolyMat::identity(2)) == Poly::one());
  RatPolyMat m(2, 2);
  m.at(0, 0) = Poly::one();
  m.at(0, 1) = Poly::x();
  m.at(1, 0) = Poly::monomial(Rat(1), 2);
  m.at(1, 1) = Poly::one();
  CHECK(det(m) == upoly({1, 0, 0, -1}));
  CHECK(det_bareiss(m) == upoly({1, 0, 0, -1}));
  CHECK(det(RatPolyMat(0, 0)) == Poly::one());
}

TEST_CASE("determinant routes agree and are multiplicative") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 8; ++trial) {
    RatPolyMat a = random_poly_mat(rng, 4, 2);
    RatPolyMat b = random_poly_mat(rng, 4, 1);
    Poly da = det(a);
    CHECK(da == det_bareiss(a));
    CHECK(det(a * b) == da * det(b));
    // substitution commutes with det
    Rat c(3, 2);
    CHECK(da.eval(c) == scalar_det(a.eval(c)));
  }
}

TEST_CASE("block-triangular determinant") {
  std::mt19937 rng(99);
  RatPolyMat a = random_poly_mat(rng, 3, 2);
  RatPolyMat b = random_poly_mat(rng, 2, 2);
  RatPolyMat m(5, 5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(3 + i, 3 + j) = b.at(i, j);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int i = 3; i < 5; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Poly::constant(Rat(coeff(rng)));
  CHECK(det(m) == det(a) * det(b));
}

TEST_CASE("rational function normalization") {
  // (1-u^3)/(1-u) reduces with monic denominator
  RationalFunction f(upoly({1, 0, 0, -1}), upoly({1, -1}));
  CHECK(f.den() == Poly::one());
  CHECK(f.num() == upoly({1, 1, 1}));
  RationalFunction g(upoly({2, 2}), upoly({4}));
  CHECK(g.num() == Rat(1, 2) * upoly({1, 1}));
  CHECK(g.den() == Poly::one());
  RationalFunction h(upoly({1}), upoly({2, 2}));
  CHECK(h.den() == upoly({1, 1}));

  RationalFunction r(upoly({0, 1}));  // u
  RationalFunction rec = r.reciprocal_arg(Rat(2));  // 1/(2u)
  CHECK(rec * r == RationalFunction(upoly({1})) * RationalFunction(upoly({1}), upoly({2})));
  CHECK_THROWS_AS(RationalFunction(Poly::one(), Poly::zero()), DomainError);
}

TEST_CASE("complex polynomial comparison") {
  CPoly a = poly_to_cplx(upoly({1, -7, 14, -8}));
  CPoly b = a;
  CHECK(cpoly_approx_equal(a, b, 1e-12));
  std::vector<Cplx> c = b.coeffs();
  c[2] += Cplx(1e-3, 0);
  CHECK(!cpoly_approx_equal(a, CPoly(std::move(c)), 1e-9));
}

TEST_CASE("interpolation reproduces polynomials") {
  Poly p = upoly({3, -2, 0, 5, 1});
  std::vector<Rat> xs, ys;
  for (int k = 0; k <= p.degree(); ++k) {
    long v = (k + 1) / 2;
    xs.emplace_back(k % 2 == 1 ? v : -v);
    ys.push_back(p.eval(xs.back()));
  }
  CHECK(poly_interpolate(xs, ys) == p);
}
