#include "doctest.h"

#include "a2zeta/representation.hpp"

using namespace a2zeta;

TEST_CASE("cyclic group structure") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  CHECK(g.size() == 3);
  CHECK(g.mul(1, 1) == 2);
  CHECK(g.mul(1, 2) == 0);
  CHECK(g.inv(1) == 2);
  CHECK(g.identity() == 0);
  // element i is r^i
  CHECK(g.perm(1).apply(0) == 1);
  CHECK(g.perm(2).apply(0) == 2);
  CHECK_THROWS_AS(g.index_of(Permutation({1, 0, 2})), DomainError);
}

TEST_CASE("permutation representation of Z/3") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  Representation rho = Representation::natural_permutation(g);
  CHECK(rho.dim() == 3);
  CHECK(rho.matrix(0) == RatMat::identity(3));
  CHECK(rho.matrix(1) * rho.matrix(2) == RatMat::identity(3));
  rho.validate();
  // multiplicativity over every stored pair
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      CHECK(rho.matrix(g.mul(a, b)) == rho.matrix(a) * rho.matrix(b));
}

TEST_CASE("non-homomorphism action is rejected") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  std::vector<Permutation> bad{Permutation::identity(2), Permutation({1, 0}),
                               Permutation::identity(2)};
  CHECK_THROWS_AS(Representation::permutation(g, bad), DomainError);
}

TEST_CASE("dual representation") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  Representation rho = Representation::natural_permutation(g);
  Representation dual = dual_representation(rho);
  // permutation matrices are orthogonal, so the dual is the same rep
  for (int e = 0; e < g.size(); ++e) CHECK(dual.matrix(e) == rho.matrix(e));
  Representation triv = Representation::trivial(g);
  for (int e = 0; e < g.size(); ++e)
    CHECK(dual_representation(triv).matrix(e) == triv.matrix(e));
  // involution
  Representation dd = dual_representation(dual_representation(rho));
  for (int e = 0; e < g.size(); ++e) CHECK(dd.matrix(e) == rho.matrix(e));
}

TEST_CASE("induction from the trivial subgroup is the regular representation") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  Representation reg =
      induce(g, {0}, [](int) { return RatMat::identity(1); }, 1);
  CHECK(reg.dim() == 3);
  reg.validate();
  // same character as the natural permutation representation
  Representation nat = Representation::natural_permutation(g);
  for (int e = 0; e < g.size(); ++e) CHECK(reg.matrix(e).trace() == nat.matrix(e).trace());
  CHECK(reg.matrix(g.identity()).trace() == Rat(3));
}

TEST_CASE("induction along the full group is the identity") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  Representation rho = Representation::natural_permutation(g);
  std::vector<int> all{0, 1, 2};
  Representation same = induce(g, all, [&](int e) { return rho.matrix(e); }, rho.dim());
  CHECK(same.dim() == rho.dim());
  for (int e = 0; e < g.size(); ++e) CHECK(same.matrix(e) == rho.matrix(e));
}

TEST_CASE("representation files") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  std::string perm_file = R"({"group": {"degree": 3, "generators": {"r": [1, 2, 0]}},
                              "rep": {"type": "permutation"}})";
  Representation rho = representation_from_json(g, perm_file);
  CHECK(rho.dim() == 3);
  CHECK(rho.matrix(1) == Representation::natural_permutation(g).matrix(1));

  std::string matrix_file = R"({"group": {"degree": 3, "generators": {"r": [1, 2, 0]}},
                                "rep": {"type": "matrix", "dim": 1,
                                        "matrices": {"r": [["1"]]}}})";
  Representation one = representation_from_json(g, matrix_file);
  CHECK(one.dim() == 1);
  CHECK(one.matrix(2) == RatMat::identity(1));

  // a matrix assignment violating the relations is rejected
  std::string bad_file = R"({"group": {"degree": 3, "generators": {"r": [1, 2, 0]}},
                             "rep": {"type": "matrix", "dim": 1,
                                     "matrices": {"r": [["2"]]}}})";
  CHECK_THROWS_AS(representation_from_json(g, bad_file), DomainError);
  // group mismatch
  CHECK_THROWS_AS(representation_from_json(FiniteGroup::trivial(), perm_file), DomainError);

  CHECK(resolve_representation(g, "regular").dim() == 3);
  CHECK(resolve_representation(g, "trivial").dim() == 1);
  CHECK_THROWS_AS(resolve_representation(g, "nonsense"), DomainError);
}

TEST_CASE("sheet action files") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  std::string file = R"({"degree": 3, "generators": {"r": [1, 2, 0]}})";
  std::vector<Permutation> action = action_from_json(g, file);
  CHECK(action.size() == 3);
  CHECK(action[1].apply(0) == 1);
  CHECK(action[2] == action[1] * action[1]);
  CHECK_THROWS_AS(action_from_json(g, R"({"degree": 3, "generators": {}})"), DomainError);
}

TEST_CASE("cyclic characters") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  auto chi = cyclic_character(g, 1);
  CHECK(std::abs(chi[1] - Cplx(-0.5, 0.8660254037844387)) < 1e-12);
  CHECK(std::abs(chi[0] - Cplx(1, 0)) < 1e-12);
  auto chi2 = cyclic_character(g, 2);
  for (int e = 0; e < 3; ++e) CHECK(std::abs(chi[e] * chi2[e] - Cplx(1, 0)) < 1e-12);
  CHECK_THROWS_AS(cyclic_character(FiniteGroup::generated(
                      3, {{"a", Permutation({1, 0, 2})}, {"b", Permutation({0, 2, 1})}}), 1),
                  DomainError);
}
