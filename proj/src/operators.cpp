#include "a2zeta/operators.hpp"

#include "json.hpp"

namespace a2zeta {

namespace {

// u^{-k} * p, exact
Poly shift_down(const Poly& p, int k) {
  if (p.is_zero()) return p;
  for (int i = 0; i < k && i <= p.degree(); ++i)
    if (sgn(p.coeff(i)) != 0) throw DomainError("monomial division is not exact");
  std::vector<Rat> v;
  for (int i = k; i <= p.degree(); ++i) v.push_back(p.coeff(i));
  return Poly(std::move(v));
}

}  // namespace

OperatorSet build_operators(const QuotientComplex& c, const Representation& rho) {
  if (!(rho.group() == c.group())) throw DomainError("representation group mismatch");
  const int d = rho.dim();
  const int nv = c.vertex_count();
  const int ne = static_cast<int>(c.edges().size());
  const int nc = static_cast<int>(c.chambers().size());
  const FiniteGroup& grp = c.group();

  std::vector<RatMat> mats;
  mats.reserve(grp.size());
  for (int g = 0; g < grp.size(); ++g) mats.push_back(rho.matrix(g));

  OperatorSet ops;
  ops.q = c.q();
  ops.d = d;
  ops.n0 = c.n0();
  ops.n1 = c.n1();
  ops.n2 = c.n2();

  auto adj = build_adjacency_ops<Rat>(c, mats, d);
  ops.a1 = adj.a1;
  ops.a2 = adj.a2;
  ops.me = adj.me;
  ops.mc = adj.mc;

  auto add_block = [&](RatPolyMat& m, int bi, int bj, const RatMat& blk, int udeg, int sign) {
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s) {
        if (sgn(blk.at(r, s)) == 0) continue;
        Rat v = sign < 0 ? Rat(-blk.at(r, s)) : blk.at(r, s);
        m.at(bi * d + r, bj * d + s) += Poly::monomial(v, udeg);
      }
  };

  // deformed coboundaries
  ops.d0 = RatPolyMat(ne * d, nv * d);
  for (const auto& e : c.edges()) {
    add_block(ops.d0, e.id, e.head.id, mats[e.head.g], e.type, +1);
    add_block(ops.d0, e.id, e.tail, RatMat::identity(d), 0, -1);
  }

  ops.d1 = RatPolyMat(nc * d, ne * d);
  for (const auto& ch : c.chambers()) {
    add_block(ops.d1, ch.id, ch.e12.id, mats[ch.e12.g], 1, +1);
    add_block(ops.d1, ch.id, ch.e02.id, mats[ch.e02.g], 0, -1);
    add_block(ops.d1, ch.id, ch.e01.id, mats[ch.e01.g], 0, +1);
  }

  ops.delta1 = RatPolyMat(nv * d, ne * d);
  for (int v = 0; v < nv; ++v)
    for (int eid : c.star(v)) {
      const PointedEdge& e = c.edges()[eid];
      // incoming edge of type t contributes (-q)^(t-1) u^t at the opposite column
      RatMat blk = mats[e.opp.g];
      int sign = e.type == 2 ? -1 : +1;
      if (e.type == 2) {
        RatMat scaled = blk;
        for (int r = 0; r < d; ++r)
          for (int s = 0; s < d; ++s) scaled.at(r, s) *= Rat(c.q());
        blk = scaled;
      }
      add_block(ops.delta1, v, e.opp.id, blk, e.type, sign);
    }

  ops.delta2 = RatPolyMat(ne * d, nc * d);
  for (const auto& ch : c.chambers()) {
    int ep = ch.e12.id;  // always type 1
    const PointedEdge& e1 = c.edges()[ep];
    int e2 = e1.opp.id;  // the type-2 opposite
    // type-1 row: +u^2 rho(g12^-1)
    add_block(ops.delta2, ep, ch.id, mats[grp.inv(ch.e12.g)], 2, +1);
    // type-2 row at opp(e12): -u rho(g_opp(e2) * g12^-1)
    const PointedEdge& edge2 = c.edges()[e2];
    add_block(ops.delta2, e2, ch.id, mats[grp.mul(edge2.opp.g, grp.inv(ch.e12.g))], 1, -1);
  }

  // auxiliary operators
  ops.je = RatPolyMat(ne * d, ne * d);
  for (const auto& e : c.edges()) add_block(ops.je, e.id, e.opp.id, mats[e.opp.g], e.type, +1);
  ops.w = RatPolyMat::identity(ne * d) + ops.je;

  ops.qop = RatPolyMat::identity(ne * d);
  for (const auto& ch : c.chambers())
    add_block(ops.qop, ch.e02.id, ch.e12.id, mats[grp.mul(grp.inv(ch.e02.g), ch.e12.g)], 1, +1);

  ops.nop = RatPolyMat(ne * d, ne * d);
  for (const auto& e : c.edges()) {
    if (e.type != 1) continue;
    for (int other : c.star(e.tail)) {
      if (other == e.id) continue;
      const PointedEdge& o = c.edges()[other];
      if (o.type != 1) continue;
      add_block(ops.nop, e.id, o.opp.id, mats[o.opp.g], 1, +1);
    }
  }

  ops.jc = RatPolyMat(nc * d, nc * d);
  for (const auto& ch : c.chambers()) add_block(ops.jc, ch.id, ch.rot, RatMat::identity(d), 0, +1);

  // chain endomorphisms
  ops.lap0 = ops.delta1 * ops.d0;
  ops.lap1 = ops.delta2 * ops.d1 + ops.d0 * ops.delta1;
  ops.lap2 = ops.d1 * ops.delta2;
  Poly one_minus_u3(std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(-1)});
  ops.phi0 = ops.lap0 + one_minus_u3 * RatPolyMat::identity(nv * d);
  ops.phi1 = ops.lap1 + one_minus_u3 * RatPolyMat::identity(ne * d);
  ops.phi2 = ops.lap2 + one_minus_u3 * RatPolyMat::identity(nc * d);

  RatPolyMat qa2 = Poly::monomial(Rat(c.q()), 2) * ops.a2;
  ops.phi0_hecke = RatPolyMat::identity(nv * d) - Poly::x() * ops.a1 + qa2 -
                   Poly::monomial(Rat(c.q() * c.q() * c.q()), 3) * RatPolyMat::identity(nv * d);

  RatPolyMat dd = ops.d1 * ops.d0;
  if (!dd.is_zero()) {
    for (int i = 0; i < dd.rows(); ++i)
      for (int j = 0; j < dd.cols(); ++j)
        if (!dd.at(i, j).is_zero())
          throw FaceMapError("face map inconsistent: d1*d0 != 0 at chamber row " +
                             std::to_string(i / d) + ", vertex column " + std::to_string(j / d));
  }
  return ops;
}

RatPolyMat conjugate_by_je(const OperatorSet& ops, const RatPolyMat& m) {
  RatPolyMat prod = ops.je * m * ops.je;
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j) prod.at(i, j) = shift_down(prod.at(i, j), 3);
  return prod;
}

std::string operators_to_json(const OperatorSet& ops) {
  nlohmann::json j;
  j["q"] = ops.q;
  j["d"] = ops.d;
  j["N"] = {ops.n0, ops.n1, ops.n2};
  auto encode = [](const RatPolyMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < m.cols(); ++k) row.push_back(poly_to_strings(m.at(i, k)));
      rows.push_back(row);
    }
    return rows;
  };
  nlohmann::json mats;
  mats["A1"] = encode(ops.a1);
  mats["A2"] = encode(ops.a2);
  mats["M_E"] = encode(ops.me);
  mats["M_C"] = encode(ops.mc);
  mats["d0"] = encode(ops.d0);
  mats["d1"] = encode(ops.d1);
  mats["delta1"] = encode(ops.delta1);
  mats["delta2"] = encode(ops.delta2);
  mats["J_E"] = encode(ops.je);
  mats["W"] = encode(ops.w);
  mats["Q"] = encode(ops.qop);
  mats["N"] = encode(ops.nop);
  mats["J_C"] = encode(ops.jc);
  mats["Phi0"] = encode(ops.phi0);
  mats["Phi1"] = encode(ops.phi1);
  mats["Phi2"] = encode(ops.phi2);
  j["matrices"] = mats;
  return j.dump(1);
}

OperatorChecks run_operator_checks(const OperatorSet& ops) {
  OperatorChecks out;
  const int ne = ops.me.rows();
  const int nc = ops.mc.rows();
  Poly one_minus_u3(std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(-1)});
  RatPolyMat id_e = RatPolyMat::identity(ne);
  RatPolyMat id_c = RatPolyMat::identity(nc);

  out.d1d0_zero = (ops.d1 * ops.d0).is_zero();
  out.je_squared = (ops.je * ops.je == Poly::monomial(Rat(1), 3) * id_e);
  out.q_unipotent = det(ops.qop) == Poly::one() && ops.qop.eval(Rat(0)) == RatMat::identity(ne);
  {
    Poly lhs = det(id_e - ops.je);
    out.det_i_minus_je = lhs == one_minus_u3.pow(static_cast<int>(ops.d * ops.n1));
  }
  out.n_squared_zero = (ops.nop * ops.nop).is_zero();

  RatPolyMat jmj = conjugate_by_je(ops, ops.me);
  {
    RatPolyMat lhs = ops.w * ops.phi1 * ops.qop;
    RatPolyMat rhs = one_minus_u3 * (id_e - jmj - ops.nop);
    out.contraction_identity = lhs == rhs;
  }
  {
    RatPolyMat jc2 = ops.jc * ops.jc;
    RatPolyMat circulant = id_c + Poly::x() * ops.jc + Poly::monomial(Rat(1), 2) * jc2;
    RatPolyMat conj = ops.jc * ops.mc * jc2;  // J_C^-1 = J_C^2
    out.phi2_factorization = ops.phi2 == circulant * (id_c + conj);
    out.det_jc_circulant = det(circulant) == one_minus_u3.pow(static_cast<int>(2 * ops.d * ops.n2));
  }
  out.cochain_map_d0 = (ops.d0 * ops.phi0 == ops.phi1 * ops.d0);
  out.cochain_map_d1 = (ops.d1 * ops.phi1 == ops.phi2 * ops.d1);
  out.phi0_is_hecke = (ops.phi0 == ops.phi0_hecke);
  Poly det_me = det(id_e - ops.me);
  out.det_conjugated_edge = det(id_e - jmj - ops.nop) == det_me;
  out.conjugation_preserves_det = det(id_e - jmj) == det_me;
  return out;
}

}  // namespace a2zeta
