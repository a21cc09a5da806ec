#include "a2zeta/cover.hpp"

namespace a2zeta {

QuotientComplex build_cover(const QuotientComplex& base, const std::vector<Permutation>& action) {
  const FiniteGroup& grp = base.group();
  if (static_cast<int>(action.size()) != grp.size())
    throw DomainError("action must assign a permutation to every voltage group element");
  int sheets = action.empty() ? 0 : action[0].degree();
  for (int a = 0; a < grp.size(); ++a)
    for (int b = 0; b < grp.size(); ++b)
      if (!(action[grp.mul(a, b)] == action[a] * action[b]))
        throw DomainError("action is not a homomorphism");
  {
    std::vector<bool> seen(sheets, false);
    std::vector<int> work{0};
    seen[0] = true;
    while (!work.empty()) {
      int i = work.back();
      work.pop_back();
      for (int g = 0; g < grp.size(); ++g) {
        int j = action[g].apply(i);
        if (!seen[j]) {
          seen[j] = true;
          work.push_back(j);
        }
      }
    }
    for (bool s : seen)
      if (!s) throw DomainError("action not transitive on sheets");
  }

  // references with voltage g move sheet i to action(g^-1)(i)
  auto move = [&](int g, int i) { return action[grp.inv(g)].apply(i); };

  ComplexData data;
  data.q = base.q();
  data.group = FiniteGroup::trivial();
  auto vid = [&](int v, int i) { return v * sheets + i; };
  auto eid = [&](int e, int i) { return e * sheets + i; };
  auto cid = [&](int c, int i) { return c * sheets + i; };
  for (int v = 0; v < base.vertex_count(); ++v)
    for (int i = 0; i < sheets; ++i) data.vertices.push_back(vid(v, i));
  for (const auto& e : base.edges())
    for (int i = 0; i < sheets; ++i) {
      PointedEdge ne;
      ne.id = eid(e.id, i);
      ne.type = e.type;
      ne.tail = vid(e.tail, i);
      ne.head = Ref{vid(e.head.id, move(e.head.g, i)), 0};
      ne.opp = Ref{eid(e.opp.id, move(e.opp.g, i)), 0};
      data.edges.push_back(ne);
      std::vector<Ref> outs;
      for (const Ref& r : base.edge_out(e.id)) outs.push_back(Ref{eid(r.id, move(r.g, i)), 0});
      data.edge_out.push_back(std::move(outs));
    }
  for (const auto& ch : base.chambers())
    for (int i = 0; i < sheets; ++i) {
      PointedChamber nc;
      nc.id = cid(ch.id, i);
      nc.rot = cid(ch.rot, i);  // rotation references carry no voltage
      nc.e01 = Ref{eid(ch.e01.id, move(ch.e01.g, i)), 0};
      nc.e12 = Ref{eid(ch.e12.id, move(ch.e12.g, i)), 0};
      nc.e02 = Ref{eid(ch.e02.id, move(ch.e02.g, i)), 0};
      data.chambers.push_back(nc);
      std::vector<Ref> outs;
      for (const Ref& r : base.chamber_out(ch.id)) outs.push_back(Ref{cid(r.id, move(r.g, i)), 0});
      data.chamber_out.push_back(std::move(outs));
    }
  return build_complex(data);
}

QuotientComplex build_natural_cover(const QuotientComplex& base) {
  std::vector<Permutation> action;
  for (int g = 0; g < base.group().size(); ++g) action.push_back(base.group().perm(g));
  return build_cover(base, action);
}

}  // namespace a2zeta
