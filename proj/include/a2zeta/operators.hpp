// Materializes the adjacency, coboundary and auxiliary operators of a
// quotient complex twisted by a representation, as explicit block polynomial
// matrices over the canonical bases.
#pragma once

#include <string>
#include <vector>

#include "a2zeta/matrix.hpp"
#include "a2zeta/quotient_complex.hpp"
#include "a2zeta/representation.hpp"

namespace a2zeta {

// Thrown when the assembled coboundaries fail d1*d0 = 0.
struct FaceMapError : std::runtime_error {
  explicit FaceMapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Adjacency operators only; templated over the scalar so the floating-point
// comparison path can reuse the same assembly.
template <class K>
struct AdjacencyOps {
  PolyMat<K> a1, a2;  // d*N0 square
  PolyMat<K> me;      // 2d*N1 square
  PolyMat<K> mc;      // 3d*N2 square
};

template <class K>
AdjacencyOps<K> build_adjacency_ops(const QuotientComplex& c, const std::vector<ScalarMat<K>>& rho,
                                    int d) {
  const int nv = c.vertex_count();
  const int ne = static_cast<int>(c.edges().size());
  const int nc = static_cast<int>(c.chambers().size());
  AdjacencyOps<K> ops;
  ops.a1 = PolyMat<K>(nv * d, nv * d);
  ops.a2 = PolyMat<K>(nv * d, nv * d);
  ops.me = PolyMat<K>(ne * d, ne * d);
  ops.mc = PolyMat<K>(nc * d, nc * d);
  auto add_block = [&](PolyMat<K>& m, int bi, int bj, const ScalarMat<K>& blk, int udeg) {
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s) {
        if (ScalarTraits<K>::is_zero(blk.at(r, s))) continue;
        m.at(bi * d + r, bj * d + s) += Polynomial<K>::monomial(blk.at(r, s), udeg);
      }
  };
  for (int v = 0; v < nv; ++v)
    for (int e : c.star(v)) {
      const PointedEdge& pe = c.edges()[e];
      add_block(pe.type == 1 ? ops.a1 : ops.a2, v, pe.head.id, rho[pe.head.g], 0);
    }
  for (const auto& e : c.edges())
    for (const Ref& r : c.edge_out(e.id)) add_block(ops.me, e.id, r.id, rho[r.g], e.type);
  for (const auto& ch : c.chambers())
    for (const Ref& r : c.chamber_out(ch.id)) add_block(ops.mc, ch.id, r.id, rho[r.g], 1);
  return ops;
}

// The full exact operator set.
struct OperatorSet {
  long q = 0;
  int d = 0;
  long n0 = 0, n1 = 0, n2 = 0;
  RatPolyMat a1, a2, me, mc;
  RatPolyMat d0, d1, delta1, delta2;
  RatPolyMat je, w, qop, nop, jc;
  RatPolyMat lap0, lap1, lap2;     // delta1*d0, delta2*d1 + d0*delta1, d1*delta2
  RatPolyMat phi0, phi1, phi2;     // lap_i + (1-u^3) I
  RatPolyMat phi0_hecke;           // I - A1 u + q A2 u^2 - q^3 u^3 I
};

OperatorSet build_operators(const QuotientComplex& c, const Representation& rho);

struct OperatorChecks {
  bool d1d0_zero = false;
  bool je_squared = false;          // J_E^2 = u^3 I
  bool q_unipotent = false;         // det Q = 1 and Q(0) = I
  bool det_i_minus_je = false;      // det(I - J_E) = (1-u^3)^(d N1)
  bool n_squared_zero = false;      // N^2 = 0
  bool contraction_identity = false;  // W Phi1 Q = (1-u^3)(I - J_E M_E J_E^-1 - N)
  bool phi2_factorization = false;  // Phi2 = (I + J_C u + J_C^2 u^2)(I + J_C M_C J_C^-1)
  bool det_jc_circulant = false;    // det(I + J_C u + J_C^2 u^2) = (1-u^3)^(2 d N2)
  bool cochain_map_d0 = false;      // d0 Phi0 = Phi1 d0
  bool cochain_map_d1 = false;      // d1 Phi1 = Phi2 d1
  bool phi0_is_hecke = false;       // Phi0 = I - A1 u + q A2 u^2 - q^3 u^3 I
  bool det_conjugated_edge = false; // det(I - J_E M_E J_E^-1 - N) = det(I - M_E)
  bool conjugation_preserves_det = false;  // det(I - J_E M_E J_E^-1) = det(I - M_E)
  bool all() const {
    return d1d0_zero && je_squared && q_unipotent && det_i_minus_je && n_squared_zero &&
           contraction_identity && phi2_factorization && det_jc_circulant && cochain_map_d0 &&
           cochain_map_d1 && phi0_is_hecke && det_conjugated_edge && conjugation_preserves_det;
  }
};

OperatorChecks run_operator_checks(const OperatorSet& ops);

// (J_E * M * J_E) / u^3, exact.
RatPolyMat conjugate_by_je(const OperatorSet& ops, const RatPolyMat& m);

// Every named matrix as nested arrays of coefficient strings, for external
// inspection.
std::string operators_to_json(const OperatorSet& ops);

}  // namespace a2zeta
