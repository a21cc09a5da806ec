#include "a2zeta/builders.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace a2zeta {

namespace {

int mod_pow_entry(long q, int v) {
  int r = v % static_cast<int>(q);
  return r < 0 ? r + static_cast<int>(q) : r;
}

std::array<int, 3> normalize_projective(long q, std::array<int, 3> v) {
  int lead = 0;
  while (lead < 3 && v[lead] % q == 0) ++lead;
  if (lead == 3) throw DomainError("zero vector has no projective class");
  // scale so the first nonzero coordinate is 1 (q prime)
  int inv = 1;
  for (int t = 1; t < q; ++t)
    if ((t * v[lead]) % q == 1) inv = t;
  for (auto& x : v) x = mod_pow_entry(q, x * inv);
  return v;
}

}  // namespace

ProjectivePlane build_projective_plane(long q) {
  if (q != 2 && q != 3) throw DomainError("unsupported q");
  ProjectivePlane pl;
  pl.q = q;
  std::set<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        pts.insert(normalize_projective(q, {a, b, c}));
      }
  pl.points.assign(pts.begin(), pts.end());
  pl.line_normals = pl.points;  // same normalization, lex order
  pl.n = static_cast<int>(pl.points.size());
  pl.incidence.assign(pl.n, std::vector<bool>(pl.n, false));
  pl.points_on_line.assign(pl.n, {});
  pl.lines_on_point.assign(pl.n, {});
  for (int p = 0; p < pl.n; ++p)
    for (int l = 0; l < pl.n; ++l) {
      long dot = 0;
      for (int k = 0; k < 3; ++k) dot += static_cast<long>(pl.points[p][k]) * pl.line_normals[l][k];
      if (dot % q == 0) {
        pl.incidence[p][l] = true;
        pl.points_on_line[l].push_back(p);
        pl.lines_on_point[p].push_back(l);
      }
    }
  return pl;
}

namespace {

struct TriangleSearch {
  const ProjectivePlane& plane;
  const std::vector<int>& lambda;
  int n;
  // pair (x,y) with y on lambda(x); value is the assigned z or -1
  std::map<std::pair<int, int>, int> assignment;
  std::vector<std::pair<int, int>> pair_order;

  explicit TriangleSearch(const ProjectivePlane& pl, const std::vector<int>& lam)
      : plane(pl), lambda(lam), n(pl.n) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (plane.incident(y, lambda[x])) {
          assignment[{x, y}] = -1;
          pair_order.emplace_back(x, y);
        }
  }

  bool assign_triple(int x, int y, int z, std::vector<std::pair<int, int>>& touched) {
    std::array<std::pair<int, int>, 3> pairs = {{{x, y}, {y, z}, {z, x}}};
    std::array<int, 3> values = {z, x, y};
    for (int k = 0; k < 3; ++k) {
      auto it = assignment.find(pairs[k]);
      if (it == assignment.end()) return false;  // pair not extendable
      if (it->second == values[k]) continue;
      if (it->second != -1) return false;
      it->second = values[k];
      touched.push_back(pairs[k]);
    }
    return true;
  }

  bool solve(size_t next) {
    while (next < pair_order.size() && assignment[pair_order[next]] != -1) ++next;
    if (next == pair_order.size()) return true;
    auto [x, y] = pair_order[next];
    for (int z = 0; z < n; ++z) {
      if (!plane.incident(z, lambda[y])) continue;
      if (!plane.incident(x, lambda[z])) continue;
      std::vector<std::pair<int, int>> touched;
      if (assign_triple(x, y, z, touched)) {
        if (solve(next + 1)) return true;
      }
      for (const auto& p : touched) assignment[p] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<TrianglePresentation> search_triangle_presentation(const ProjectivePlane& plane,
                                                                 const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != plane.n) throw DomainError("lambda size mismatch");
  {
    std::vector<bool> seen(plane.n, false);
    for (int l : lambda) {
      if (l < 0 || l >= plane.n || seen[l]) throw DomainError("lambda must be a bijection");
      seen[l] = true;
    }
  }
  TriangleSearch search(plane, lambda);
  if (!search.solve(0)) return std::nullopt;
  TrianglePresentation t;
  t.q = plane.q;
  t.lambda = lambda;
  for (const auto& [pair, z] : search.assignment) t.triples.push_back({pair.first, pair.second, z});
  std::sort(t.triples.begin(), t.triples.end());
  return t;
}

namespace {

// Cyclic collineation of projective order q^2+q+1 (companion matrix of a
// primitive cubic), acting on canonical point indices.
std::vector<int> singer_point_cycle(const ProjectivePlane& pl) {
  long q = pl.q;
  std::array<std::array<int, 3>, 3> m{};
  if (q == 2) {
    // x^3 = x + 1
    m = {{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}};
  } else {
    // x^3 = x + 2 over F_3 (x^3 + 2x + 1 is irreducible)
    m = {{{0, 0, 2}, {1, 0, 1}, {0, 1, 0}}};
  }
  auto apply = [&](const std::array<int, 3>& v) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) {
      long s = 0;
      for (int j = 0; j < 3; ++j) s += static_cast<long>(m[i][j]) * v[j];
      r[i] = static_cast<int>(s % q);
    }
    return normalize_projective(q, r);
  };
  std::map<std::array<int, 3>, int> index;
  for (int p = 0; p < pl.n; ++p) index[pl.points[p]] = p;
  std::vector<int> cycle;
  int start = 0, cur = 0;
  do {
    cycle.push_back(cur);
    cur = index.at(apply(pl.points[cur]));
  } while (cur != start && static_cast<int>(cycle.size()) <= pl.n);
  if (static_cast<int>(cycle.size()) != pl.n) throw DomainError("collineation is not a full cycle");
  return cycle;
}

int line_through(const ProjectivePlane& pl, const std::vector<int>& pts) {
  for (int l = 0; l < pl.n; ++l) {
    bool all = true;
    for (int p : pts)
      if (!pl.incident(p, l)) {
        all = false;
        break;
      }
    if (all) return l;
  }
  throw DomainError("no line through point set");
}

}  // namespace

TrianglePresentation find_triangle_presentation(long q, int skip) {
  ProjectivePlane pl = build_projective_plane(q);
  std::vector<int> cycle = singer_point_cycle(pl);  // cycle[k] = point index of sigma^k(p0)
  std::vector<int> pos(pl.n);
  for (int k = 0; k < pl.n; ++k) pos[cycle[k]] = k;
  // lines indexed along the same cycle: l_k = sigma^k(l_0)
  std::vector<int> line_cycle(pl.n);
  {
    int l0 = 0;
    line_cycle[0] = l0;
    for (int k = 1; k < pl.n; ++k) {
      std::vector<int> mapped;
      for (int p : pl.points_on_line[line_cycle[k - 1]]) mapped.push_back(cycle[(pos[p] + 1) % pl.n]);
      line_cycle[k] = line_through(pl, mapped);
    }
  }
  // candidates: point p_k -> line l_(m*k+j) for multipliers m coprime to n
  for (int mult = 1; mult < pl.n; ++mult) {
    if (std::gcd(mult, pl.n) != 1) continue;
    for (int shift = 0; shift < pl.n; ++shift) {
      std::vector<int> lambda(pl.n);
      std::vector<bool> used(pl.n, false);
      for (int p = 0; p < pl.n; ++p) {
        lambda[p] = line_cycle[(mult * pos[p] + shift) % pl.n];
        used[lambda[p]] = true;
      }
      auto found = search_triangle_presentation(pl, lambda);
      if (found) {
        if (skip == 0) return *found;
        --skip;
      }
    }
  }
  throw DomainError("no triangle presentation found for q=" + std::to_string(q));
}

QuotientComplex complex_from_presentation(const TrianglePresentation& t, const FiniteGroup& group,
                                          const std::vector<int>& phi) {
  ProjectivePlane pl = build_projective_plane(t.q);
  int n = pl.n;
  if (static_cast<int>(t.lambda.size()) != n) throw DomainError("lambda size mismatch");
  if (static_cast<int>(phi.size()) != n) throw DomainError("phi must assign one element per point");
  for (int g : phi)
    if (!group.valid_element(g)) throw StructureError("voltage not in group: phi");
  std::set<std::array<int, 3>> tset(t.triples.begin(), t.triples.end());
  auto cyc = [](const std::array<int, 3>& a) { return std::array<int, 3>{a[1], a[2], a[0]}; };
  std::map<std::pair<int, int>, std::array<int, 3>> by_first_last;
  for (const auto& tri : t.triples) {
    if (!tset.count(cyc(tri))) throw StructureError("triples not closed under cyclic shift");
    if (tri[0] == tri[1] && tri[1] == tri[2])
      throw DomainError("degenerate triple (x,x,x): voltage quotient needs a torsion-free relation set");
    if (group.mul(phi[tri[0]], group.mul(phi[tri[1]], phi[tri[2]])) != group.identity())
      throw DomainError("phi violates a triangle relation");
    by_first_last[{tri[0], tri[2]}] = tri;
  }

  // edge ids: type-1 edges are 0..n-1 (one per generator inverse, toward the
  // line neighbor lambda(x)), type-2 edges n..2n-1 (toward the point neighbor x)
  auto t_edge = [&](int x) { return x; };
  auto s_edge = [&](int x) { return n + x; };
  ComplexData data;
  data.q = t.q;
  data.group = group;
  data.vertices = {0};
  auto inv = [&](int g) { return group.inv(g); };
  auto mul = [&](int a, int b) { return group.mul(a, b); };

  data.edges.resize(2 * n);
  data.edge_out.resize(2 * n);
  for (int x = 0; x < n; ++x) {
    PointedEdge e1;
    e1.id = t_edge(x);
    e1.type = 1;
    e1.tail = 0;
    e1.head = Ref{0, inv(phi[x])};
    e1.opp = Ref{s_edge(x), inv(phi[x])};
    data.edges[e1.id] = e1;
    PointedEdge e2;
    e2.id = s_edge(x);
    e2.type = 2;
    e2.tail = 0;
    e2.head = Ref{0, phi[x]};
    e2.opp = Ref{t_edge(x), phi[x]};
    data.edges[e2.id] = e2;
    std::vector<Ref> out1, out2;
    for (int y = 0; y < n; ++y) {
      if (!pl.incident(x, t.lambda[y])) out1.push_back(Ref{t_edge(y), inv(phi[x])});
      if (!pl.incident(y, t.lambda[x])) out2.push_back(Ref{s_edge(y), phi[x]});
    }
    data.edge_out[e1.id] = std::move(out1);
    data.edge_out[e2.id] = std::move(out2);
  }

  // one chamber triple per cyclic class; the class representative is the
  // lexicographically smallest rotation
  std::vector<std::array<int, 3>> chosen;
  {
    std::set<std::array<int, 3>> seen;
    for (const auto& tri : t.triples) {
      if (seen.count(tri)) continue;
      std::array<int, 3> best = tri;
      for (auto r = cyc(tri); r != tri; r = cyc(r)) best = std::min(best, r);
      seen.insert(tri);
      seen.insert(cyc(tri));
      seen.insert(cyc(cyc(tri)));
      if (std::find(chosen.begin(), chosen.end(), best) == chosen.end()) chosen.push_back(best);
    }
    std::sort(chosen.begin(), chosen.end());
  }

  // chamber id layout per class k: 3k is the vertex-anchored version, then its
  // two rotations
  std::map<std::array<int, 3>, std::pair<int, int>> locate;  // rotation -> (class, slot)
  for (size_t k = 0; k < chosen.size(); ++k) {
    locate[chosen[k]] = {static_cast<int>(k), 0};
    locate[cyc(chosen[k])] = {static_cast<int>(k), 1};
    locate[cyc(cyc(chosen[k]))] = {static_cast<int>(k), 2};
  }
  // pair (g, anchored triple t') resolved to a stored chamber reference
  auto resolve = [&](int g, const std::array<int, 3>& tri) {
    auto [k, slot] = locate.at(tri);
    const auto& base = chosen[k];
    if (slot == 0) return Ref{3 * k, g};
    if (slot == 1) return Ref{3 * k + 2, mul(g, inv(phi[base[0]]))};
    return Ref{3 * k + 1, mul(g, phi[base[2]])};
  };

  data.chambers.resize(3 * chosen.size());
  data.chamber_out.resize(3 * chosen.size());
  for (size_t k = 0; k < chosen.size(); ++k) {
    auto [x, y, z] = chosen[k];
    // anchored pairs (voltage, rotation) for the three stored chambers
    struct Anchored {
      int id;
      int g;
      std::array<int, 3> tri;
    };
    std::array<Anchored, 3> cs = {{{static_cast<int>(3 * k), group.identity(), {x, y, z}},
                                   {static_cast<int>(3 * k + 1), inv(phi[z]), {z, x, y}},
                                   {static_cast<int>(3 * k + 2), phi[x], {y, z, x}}}};
    // rotation cycle 3k -> 3k+1 -> 3k+2 -> 3k
    for (int s = 0; s < 3; ++s) {
      PointedChamber c;
      c.id = cs[s].id;
      c.rot = static_cast<int>(3 * k) + (s + 1) % 3;
      auto [cx, cy, cz] = cs[s].tri;
      int g = cs[s].g;
      c.e01 = Ref{t_edge(cz), g};
      c.e12 = Ref{t_edge(cy), mul(g, inv(phi[cz]))};
      c.e02 = Ref{s_edge(cx), g};
      data.chambers[c.id] = c;
      std::vector<Ref> outs;
      for (int xp = 0; xp < n; ++xp) {
        if (!pl.incident(xp, t.lambda[cy]) || xp == cz) continue;
        Ref target = resolve(mul(g, inv(phi[cz])), by_first_last.at({xp, cy}));
        outs.push_back(target);
      }
      data.chamber_out[c.id] = std::move(outs);
    }
  }
  return build_complex(data);
}

QuotientComplex one_vertex_complex_q2(bool trivial_voltages) {
  TrianglePresentation t = find_triangle_presentation(2);
  if (trivial_voltages) {
    FiniteGroup g = FiniteGroup::trivial();
    return complex_from_presentation(t, g, std::vector<int>(t.lambda.size(), 0));
  }
  FiniteGroup g = FiniteGroup::cyclic(3);
  return complex_from_presentation(t, g, std::vector<int>(t.lambda.size(), 1));
}

// ---------------------------------------------------------------------------
// Local lattice model: subgroups of W = (Z/p^2)^3 with pi acting as
// multiplication by p. A lattice chain of depth two around the base class
// stays between p^2 W and W, so subgroups of W model every lattice involved.

namespace {

struct LatticeModel {
  long p;
  int mod;          // p^2
  int size;         // p^6
  std::vector<int> full;

  explicit LatticeModel(long q) : p(q), mod(static_cast<int>(q * q)), size(mod * mod * mod) {
    full.resize(size);
    for (int i = 0; i < size; ++i) full[i] = i;
  }
  std::array<int, 3> decode(int v) const {
    return {v % mod, (v / mod) % mod, v / (mod * mod)};
  }
  int encode(const std::array<int, 3>& a) const { return a[0] + mod * (a[1] + mod * a[2]); }
  int add(int a, int b) const {
    auto x = decode(a), y = decode(b);
    return encode({(x[0] + y[0]) % mod, (x[1] + y[1]) % mod, (x[2] + y[2]) % mod});
  }
  int scale_p(int a) const {
    auto x = decode(a);
    return encode({static_cast<int>((x[0] * p) % mod), static_cast<int>((x[1] * p) % mod),
                   static_cast<int>((x[2] * p) % mod)});
  }

  using Sub = std::vector<int>;  // sorted element list

  Sub closure(std::vector<int> gens) const {
    std::set<int> s{0};
    std::vector<int> work{0};
    for (int g : gens)
      if (!s.count(g)) {
        s.insert(g);
        work.push_back(g);
      }
    // abelian closure under addition
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int a : cur)
        for (int g : gens) {
          int v = add(a, g);
          if (!s.count(v)) {
            s.insert(v);
            grew = true;
          }
        }
    }
    return Sub(s.begin(), s.end());
  }

  Sub scale_p_sub(const Sub& a) const {
    std::set<int> s;
    for (int v : a) s.insert(scale_p(v));
    return Sub(s.begin(), s.end());
  }

  Sub sum(const Sub& a, const Sub& b) const {
    std::vector<int> gens = a;
    gens.insert(gens.end(), b.begin(), b.end());
    return closure(gens);
  }

  static bool contains(const Sub& a, const Sub& b) {  // b subset of a
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
  }

  // log_p of the index [a : b]
  int log_index(const Sub& a, const Sub& b) const {
    int ratio = static_cast<int>(a.size() / b.size());
    int k = 0;
    while (ratio > 1) {
      ratio /= static_cast<int>(p);
      ++k;
    }
    return k;
  }

  // all subgroups b with pa <= b <= a and [a : b] = p^codim, via transversal of a/pa
  std::vector<Sub> middles(const Sub& a, int codim) const {
    Sub pa = scale_p_sub(a);
    std::set<int> pa_set(pa.begin(), pa.end());
    // coset transversal of pa in a
    std::vector<int> reps;
    std::set<int> seen_cosets;
    for (int v : a) {
      int canon = v;
      for (int w : pa) canon = std::min(canon, add(v, w));
      if (!seen_cosets.count(canon)) {
        seen_cosets.insert(canon);
        reps.push_back(canon);
      }
    }
    std::set<Sub> found;
    size_t target = a.size();
    for (int k = 0; k < codim; ++k) target /= p;
    if (codim == 1) {
      for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i; j < reps.size(); ++j) {
          std::vector<int> gens = pa;
          gens.push_back(reps[i]);
          gens.push_back(reps[j]);
          Sub b = closure(gens);
          if (b.size() == target) found.insert(b);
        }
    } else if (codim == 2) {
      for (int r : reps) {
        std::vector<int> gens = pa;
        gens.push_back(r);
        Sub b = closure(gens);
        if (b.size() == target) found.insert(b);
      }
    } else {
      throw DomainError("codimension must be 1 or 2");
    }
    return std::vector<Sub>(found.begin(), found.end());
  }
};

}  // namespace

std::string OracleReport::summary() const {
  std::ostringstream os;
  os << "q=" << q << " edges per type at vertex: " << type1_edges_at_vertex << "/"
     << type2_edges_at_vertex << ", edge continuations: [" << min_edge_out << "," << max_edge_out
     << "], chamber continuations: [" << min_chamber_out << "," << max_chamber_out
     << "], chambers per type-1 edge: [" << min_edge_chambers << "," << max_edge_chambers << "] => "
     << (pass ? "pass" : "FAIL");
  return os.str();
}

OracleReport local_lattice_oracle(long q) {
  if (q != 2 && q != 3) throw DomainError("unsupported q");
  LatticeModel W(q);
  LatticeModel::Sub full = W.full;
  LatticeModel::Sub pw = W.scale_p_sub(full);

  OracleReport rep;
  rep.q = q;

  // pointed edges at the base vertex: middles b of each codimension
  auto type1 = W.middles(full, 1);  // |W/b| = 1
  auto type2 = W.middles(full, 2);  // |W/b| = 2
  rep.type1_edges_at_vertex = static_cast<long>(type1.size());
  rep.type2_edges_at_vertex = static_cast<long>(type2.size());

  // straight continuations of a pointed edge [p^-1 b > W > b]:
  // lattices a2 with p*b < a2 < b, |b/a2| = |W/b|, a2 + pW = b
  auto count_edge_out = [&](const LatticeModel::Sub& b, int type) {
    auto candidates = W.middles(b, type);  // |b/a2| = type
    long cnt = 0;
    for (const auto& a2 : candidates)
      if (W.sum(a2, pw) == b) ++cnt;
    return cnt;
  };
  rep.min_edge_out = -1;
  for (const auto& b : type1) {
    long c = count_edge_out(b, 1);
    if (rep.min_edge_out < 0) rep.min_edge_out = rep.max_edge_out = c;
    rep.min_edge_out = std::min(rep.min_edge_out, c);
    rep.max_edge_out = std::max(rep.max_edge_out, c);
  }
  for (const auto& b : type2) {
    long c = count_edge_out(b, 2);
    rep.min_edge_out = std::min(rep.min_edge_out, c);
    rep.max_edge_out = std::max(rep.max_edge_out, c);
  }

  // chambers at the base vertex: chains W > b > c > pW; continuations are a4
  // with p*b <= a4 < c, |c/a4| = 1, a4 + pW = c
  rep.min_chamber_out = -1;
  rep.min_edge_chambers = -1;
  for (const auto& b : type1) {
    auto inner = W.middles(b, 1);
    for (const auto& c : inner) {
      if (!LatticeModel::contains(c, pw) || c == pw) continue;
      auto candidates = W.middles(c, 1);
      LatticeModel::Sub pb = W.scale_p_sub(b);
      long cnt = 0;
      for (const auto& a4 : candidates) {
        if (!LatticeModel::contains(a4, pb)) continue;
        if (W.sum(a4, pw) == c) ++cnt;
      }
      if (rep.min_chamber_out < 0) rep.min_chamber_out = rep.max_chamber_out = cnt;
      rep.min_chamber_out = std::min(rep.min_chamber_out, cnt);
      rep.max_chamber_out = std::max(rep.max_chamber_out, cnt);
    }
  }
  // type-1 pointed edge [W > c > pW] with |c/pW| = 1 lies in the chambers
  // [W > b > c > pW]; count the middles b over c
  for (const auto& c : type2) {  // |W/c| = 2, i.e. |c/pW| = 1
    long cnt = 0;
    for (const auto& b : type1)
      if (LatticeModel::contains(b, c)) ++cnt;
    if (rep.min_edge_chambers < 0) rep.min_edge_chambers = rep.max_edge_chambers = cnt;
    rep.min_edge_chambers = std::min(rep.min_edge_chambers, cnt);
    rep.max_edge_chambers = std::max(rep.max_edge_chambers, cnt);
  }

  long expect_edges = q * q + q + 1;
  rep.pass = rep.type1_edges_at_vertex == expect_edges && rep.type2_edges_at_vertex == expect_edges &&
             rep.min_edge_out == q * q && rep.max_edge_out == q * q && rep.min_chamber_out == q &&
             rep.max_chamber_out == q && rep.min_edge_chambers == q + 1 &&
             rep.max_edge_chambers == q + 1;
  return rep;
}

std::string presentation_to_json(const TrianglePresentation& t) {
  nlohmann::json j;
  j["q"] = t.q;
  j["lambda"] = t.lambda;
  j["triples"] = t.triples;
  return j.dump(1);
}

TrianglePresentation presentation_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TrianglePresentation t;
  t.q = j.at("q").get<long>();
  t.lambda = j.at("lambda").get<std::vector<int>>();
  for (const auto& tri : j.at("triples")) {
    auto v = tri.get<std::vector<int>>();
    if (v.size() != 3) throw DomainError("triple must have three entries");
    t.triples.push_back({v[0], v[1], v[2]});
  }
  return t;
}

}  // namespace a2zeta
