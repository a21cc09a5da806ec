#include "doctest.h"

#include "a2zeta/builders.hpp"
#include "a2zeta/operators.hpp"

using namespace a2zeta;

namespace {

struct Fixture {
  QuotientComplex complex;
  Representation rho;
  OperatorSet ops;
};

Fixture make(bool trivial_rep) {
  Fixture f{one_vertex_complex_q2(trivial_rep), {}, {}};
  f.rho = trivial_rep ? Representation::trivial(f.complex.group())
                      : Representation::natural_permutation(f.complex.group());
  f.ops = build_operators(f.complex, f.rho);
  return f;
}

}  // namespace

TEST_CASE("vertex operators on the one-vertex fixture") {
  Fixture f = make(true);
  CHECK(f.ops.a1.rows() == 1);
  CHECK(f.ops.a1.at(0, 0) == Poly::constant(Rat(7)));
  CHECK(f.ops.a2.at(0, 0) == Poly::constant(Rat(7)));

  Fixture g = make(false);
  CHECK(g.ops.a1.rows() == 3);
  // Hecke operators commute
  CHECK(g.ops.a1 * g.ops.a2 == g.ops.a2 * g.ops.a1);
  // permutation twist: row sums of A1 are still q^2+q+1
  RatPolyMat ones(3, 1);
  for (int i = 0; i < 3; ++i) ones.at(i, 0) = Poly::one();
  RatPolyMat rs = g.ops.a1 * ones;
  for (int i = 0; i < 3; ++i) CHECK(rs.at(i, 0) == Poly::constant(Rat(7)));
}

TEST_CASE("edge operator block structure") {
  Fixture f = make(true);
  CHECK(f.ops.me.rows() == 14);
  for (int i = 0; i < 14; ++i) {
    int nonzero = 0;
    for (int j = 0; j < 14; ++j)
      if (!f.ops.me.at(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 4);
  }
  CHECK(f.ops.me.eval(Rat(0)) == RatMat(14, 14));
  // off-diagonal type blocks vanish; degrees are 1 on type-1 rows, 2 on type-2
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) {
      const Poly& p = f.ops.me.at(i, j);
      if ((i < 7) != (j < 7)) CHECK(p.is_zero());
      if (!p.is_zero()) {
        CHECK(p.degree() == (i < 7 ? 1 : 2));
        CHECK(p.coeff(p.degree()) == Rat(1));
      }
    }
}

TEST_CASE("chamber operator") {
  Fixture f = make(true);
  CHECK(f.ops.mc.rows() == 21);
  for (int i = 0; i < 21; ++i) {
    int nonzero = 0;
    for (int j = 0; j < 21; ++j) {
      const Poly& p = f.ops.mc.at(i, j);
      if (!p.is_zero()) {
        ++nonzero;
        CHECK(p.degree() == 1);
        CHECK(p.coeff(0) == Rat(0));
      }
    }
    CHECK(nonzero == 2);
  }
  CHECK(f.ops.mc.eval(Rat(0)) == RatMat(21, 21));
}

TEST_CASE("coboundary structure") {
  Fixture f = make(true);
  CHECK((f.ops.d1 * f.ops.d0).is_zero());
  // at u=1 and trivial twist d0 is the usual signed incidence map: zero row sums
  RatMat d0_at_1 = f.ops.d0.eval(Rat(1));
  for (int i = 0; i < 14; ++i) {
    Rat s(0);
    for (int j = 0; j < d0_at_1.cols(); ++j) s += d0_at_1.at(i, j);
    CHECK(s == Rat(0));
  }
  // single vertex row of delta1 touches all 14 edge columns
  int nonzero = 0;
  for (int j = 0; j < 14; ++j)
    if (!f.ops.delta1.at(0, j).is_zero()) ++nonzero;
  CHECK(nonzero == 14);
}

TEST_CASE("broken face map is reported with its location") {
  QuotientComplex c = one_vertex_complex_q2();
  ComplexData data;
  data.q = c.q();
  data.group = c.group();
  data.vertices = {0};
  for (const auto& e : c.edges()) data.edges.push_back(e);
  for (const auto& ch : c.chambers()) data.chambers.push_back(ch);
  for (const auto& e : c.edges()) data.edge_out.push_back(c.edge_out(e.id));
  for (const auto& ch : c.chambers()) data.chamber_out.push_back(c.chamber_out(ch.id));
  std::swap(data.chambers[4].e01, data.chambers[4].e02);
  QuotientComplex broken = build_complex(data);
  Representation rho = Representation::natural_permutation(broken.group());
  CHECK_THROWS_AS(build_operators(broken, rho), FaceMapError);
  try {
    build_operators(broken, rho);
  } catch (const FaceMapError& err) {
    CHECK(std::string(err.what()).find("chamber row 4") != std::string::npos);
  }
}

TEST_CASE("auxiliary operator identities, trivial twist") {
  Fixture f = make(true);
  OperatorChecks checks = run_operator_checks(f.ops);
  CHECK(checks.d1d0_zero);
  CHECK(checks.je_squared);
  CHECK(checks.q_unipotent);
  CHECK(checks.det_i_minus_je);
  CHECK(checks.n_squared_zero);
  CHECK(checks.contraction_identity);
  CHECK(checks.phi2_factorization);
  CHECK(checks.det_jc_circulant);
  CHECK(checks.cochain_map_d0);
  CHECK(checks.cochain_map_d1);
  CHECK(checks.phi0_is_hecke);
  CHECK(checks.det_conjugated_edge);
  CHECK(checks.conjugation_preserves_det);
}

TEST_CASE("auxiliary operator identities, Z/3 permutation twist") {
  Fixture f = make(false);
  CHECK(f.ops.me.rows() == 42);
  CHECK(f.ops.mc.rows() == 63);
  OperatorChecks checks = run_operator_checks(f.ops);
  CHECK(checks.all());
}

TEST_CASE("rotation operator cubes to the identity") {
  Fixture f = make(false);
  RatPolyMat jc3 = f.ops.jc * f.ops.jc * f.ops.jc;
  CHECK(jc3 == RatPolyMat::identity(63));
}

TEST_CASE("dual twist transposes the two Hecke operators") {
  QuotientComplex c = one_vertex_complex_q2();
  Representation rho = Representation::natural_permutation(c.group());
  Representation dual = dual_representation(rho);
  OperatorSet a = build_operators(c, rho);
  OperatorSet b = build_operators(c, dual);
  auto transpose = [](const RatPolyMat& m) {
    RatPolyMat t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
  };
  CHECK(b.a2 == transpose(a.a1));
  CHECK(b.a1 == transpose(a.a2));
}
