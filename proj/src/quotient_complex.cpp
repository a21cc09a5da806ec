#include "a2zeta/quotient_complex.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace a2zeta {

namespace {

using nlohmann::json;

void check_voltage(const FiniteGroup& g, int elem, const char* where) {
  if (!g.valid_element(elem)) throw StructureError(std::string("voltage not in group: ") + where);
}

}  // namespace

QuotientComplex build_complex(const ComplexData& data) {
  QuotientComplex out;
  out.q_ = data.q;
  out.group_ = data.group;
  const FiniteGroup& grp = out.group_;

  // vertex id remap
  std::map<int, int> vmap;
  std::vector<int> vids = data.vertices;
  std::sort(vids.begin(), vids.end());
  for (int v : vids) {
    if (vmap.count(v)) throw StructureError("duplicate vertex id");
    int next = static_cast<int>(vmap.size());
    vmap[v] = next;
  }
  out.n_vertices_ = static_cast<int>(vmap.size());

  if (data.edge_out.size() != data.edges.size())
    throw StructureError("edge_out must be given for every edge");
  if (data.chamber_out.size() != data.chambers.size())
    throw StructureError("chamber_out must be given for every chamber");

  std::map<int, int> epos;  // original edge id -> position in data.edges
  for (size_t i = 0; i < data.edges.size(); ++i) {
    if (epos.count(data.edges[i].id)) throw StructureError("duplicate edge id");
    epos[data.edges[i].id] = static_cast<int>(i);
  }
  std::map<int, int> cpos;
  for (size_t i = 0; i < data.chambers.size(); ++i) {
    if (cpos.count(data.chambers[i].id)) throw StructureError("duplicate chamber id");
    cpos[data.chambers[i].id] = static_cast<int>(i);
  }

  // canonical edge order: type 1 first, stable in original id
  std::vector<int> eorder;
  for (int pass = 1; pass <= 2; ++pass)
    for (const auto& [id, pos] : epos)
      if (data.edges[pos].type == pass) eorder.push_back(pos);
  if (eorder.size() != data.edges.size()) throw StructureError("edge type must be 1 or 2");
  std::vector<int> emap_by_pos(data.edges.size());
  for (size_t k = 0; k < eorder.size(); ++k) emap_by_pos[eorder[k]] = static_cast<int>(k);
  auto emap = [&](int orig_id, const char* where) {
    auto it = epos.find(orig_id);
    if (it == epos.end()) throw StructureError(std::string("dangling reference: ") + where);
    return emap_by_pos[it->second];
  };

  // canonical chamber order: rotation triples, smallest original id first
  std::vector<int> corder;
  std::vector<bool> placed(data.chambers.size(), false);
  for (const auto& [id, pos] : cpos) {
    if (placed[pos]) continue;
    int a = pos;
    auto next = [&](int p) {
      int rid = data.chambers[p].rot;
      auto it = cpos.find(rid);
      if (it == cpos.end()) throw StructureError("S2 not rotation-closed");
      return it->second;
    };
    int b = next(a), c = next(b);
    if (next(c) != a || a == b || b == c || a == c) throw StructureError("S2 not rotation-closed");
    if (placed[b] || placed[c]) throw StructureError("S2 not rotation-closed");
    placed[a] = placed[b] = placed[c] = true;
    corder.push_back(a);
    corder.push_back(b);
    corder.push_back(c);
  }
  std::vector<int> cmap_by_pos(data.chambers.size());
  for (size_t k = 0; k < corder.size(); ++k) cmap_by_pos[corder[k]] = static_cast<int>(k);
  auto cmap = [&](int orig_id, const char* where) {
    auto it = cpos.find(orig_id);
    if (it == cpos.end()) throw StructureError(std::string("dangling reference: ") + where);
    return cmap_by_pos[it->second];
  };

  auto vmapped = [&](int orig, const char* where) {
    auto it = vmap.find(orig);
    if (it == vmap.end()) throw StructureError(std::string("dangling reference: ") + where);
    return it->second;
  };

  out.edges_.resize(data.edges.size());
  out.edge_out_.resize(data.edges.size());
  for (size_t pos = 0; pos < data.edges.size(); ++pos) {
    const PointedEdge& src = data.edges[pos];
    PointedEdge e;
    e.id = emap_by_pos[pos];
    e.type = src.type;
    e.tail = vmapped(src.tail, "edge tail");
    check_voltage(grp, src.head.g, "edge head");
    e.head = Ref{vmapped(src.head.id, "edge head"), src.head.g};
    if (src.opp.id < 0) throw StructureError("S1 not opposite-closed");
    check_voltage(grp, src.opp.g, "edge opp");
    e.opp = Ref{emap(src.opp.id, "edge opp"), src.opp.g};
    std::vector<Ref> outs;
    for (const Ref& r : data.edge_out[pos]) {
      check_voltage(grp, r.g, "edge_out");
      outs.push_back(Ref{emap(r.id, "edge_out"), r.g});
    }
    out.edges_[e.id] = e;
    out.edge_out_[e.id] = std::move(outs);
  }

  out.chambers_.resize(data.chambers.size());
  out.chamber_out_.resize(data.chambers.size());
  for (size_t pos = 0; pos < data.chambers.size(); ++pos) {
    const PointedChamber& src = data.chambers[pos];
    PointedChamber c;
    c.id = cmap_by_pos[pos];
    c.rot = cmap(src.rot, "chamber rot");
    for (auto [dst, ref, where] : {std::tuple<Ref*, const Ref*, const char*>{&c.e01, &src.e01, "face e01"},
                                   {&c.e12, &src.e12, "face e12"},
                                   {&c.e02, &src.e02, "face e02"}}) {
      check_voltage(grp, ref->g, where);
      *dst = Ref{emap(ref->id, where), ref->g};
    }
    std::vector<Ref> outs;
    for (const Ref& r : data.chamber_out[pos]) {
      check_voltage(grp, r.g, "chamber_out");
      outs.push_back(Ref{cmap(r.id, "chamber_out"), r.g});
    }
    out.chambers_[c.id] = c;
    out.chamber_out_[c.id] = std::move(outs);
  }

  out.star_.assign(out.n_vertices_, {});
  for (const auto& e : out.edges_) out.star_[e.tail].push_back(e.id);
  return out;
}

long euler_characteristic(const QuotientComplex& c) { return c.n0() - c.n1() + c.n2(); }

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) os << " [" << c.detail << "]";
    os << "\n";
  }
  return os.str();
}

ValidationReport validate(const QuotientComplex& c) {
  ValidationReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
  };
  const long q = c.q();
  const long per_type = q * q + q + 1;
  const auto& edges = c.edges();
  const auto& chambers = c.chambers();

  {
    bool ok = edges.size() % 2 == 0;
    add("edge count even (2*N1)", ok, ok ? "" : std::to_string(edges.size()));
  }
  {
    bool ok = chambers.size() % 3 == 0;
    add("chamber count divisible by 3 (3*N2)", ok, ok ? "" : std::to_string(chambers.size()));
  }
  add("complex has chambers", !chambers.empty(), chambers.empty() ? "degenerate" : "");

  {
    bool ok = true;
    std::string bad;
    for (int v = 0; v < c.vertex_count(); ++v) {
      long t1 = 0, t2 = 0;
      for (int e : c.star(v)) (edges[e].type == 1 ? t1 : t2)++;
      if (t1 != per_type || t2 != per_type) {
        ok = false;
        bad = "vertex " + std::to_string(v);
        break;
      }
    }
    add("per-vertex out-edges: q^2+q+1 of each type", ok, bad);
  }
  {
    bool ok = true;
    std::string bad;
    for (const auto& e : edges) {
      const auto& outs = c.edge_out(e.id);
      if (static_cast<long>(outs.size()) != q * q) {
        ok = false;
        bad = "edge " + std::to_string(e.id);
        break;
      }
      for (const Ref& r : outs)
        if (edges[r.id].type != e.type) {
          ok = false;
          bad = "edge " + std::to_string(e.id) + " -> " + std::to_string(r.id);
          break;
        }
      if (!ok) break;
    }
    add("edge continuations: q^2, type preserved", ok, bad);
  }
  {
    bool ok = true;
    std::string bad;
    for (const auto& ch : chambers)
      if (static_cast<long>(c.chamber_out(ch.id).size()) != q) {
        ok = false;
        bad = "chamber " + std::to_string(ch.id);
        break;
      }
    add("chamber continuations: q", ok, bad);
  }
  {
    bool ok = true;
    std::string bad;
    for (const auto& e : edges) {
      const auto& o = edges[e.opp.id];
      // tail-based lifts force the opposite voltage to equal the head voltage
      if (o.opp.id != e.id || o.type != 3 - e.type || o.id == e.id ||
          o.opp.g != c.group().inv(e.opp.g) || o.tail != e.head.id || e.tail != o.head.id ||
          e.opp.g != e.head.g) {
        ok = false;
        bad = "edge " + std::to_string(e.id);
        break;
      }
    }
    add("opposite: fixed-point-free type-swapping involution", ok, bad);
  }
  {
    bool ok = true;
    std::string bad;
    for (size_t i = 0; i < chambers.size(); i += 3) {
      const auto& a = chambers[i];
      if (a.rot >= static_cast<int>(chambers.size())) { ok = false; bad = "chamber " + std::to_string(a.id); break; }
      const auto& b = chambers[a.rot];
      const auto& d = chambers[b.rot];
      if (d.rot != a.id || a.id == b.id || b.id == d.id ||
          b.id != static_cast<int>(i) + 1 || d.id != static_cast<int>(i) + 2) {
        ok = false;
        bad = "chamber " + std::to_string(a.id);
        break;
      }
    }
    add("rotation: order-3, fixed-point-free, grouped triples", ok, bad);
  }
  {
    bool ok = true;
    std::string bad;
    for (const auto& ch : chambers) {
      if (edges[ch.e01.id].type != 1 || edges[ch.e12.id].type != 1 || edges[ch.e02.id].type != 2) {
        ok = false;
        bad = "chamber " + std::to_string(ch.id);
        break;
      }
      const auto& r = chambers[ch.rot];
      if (!(r.e01 == ch.e12)) {
        ok = false;
        bad = "chamber " + std::to_string(ch.id) + " (rot face mismatch)";
        break;
      }
    }
    add("face types (1,1,2) and rot-face compatibility", ok, bad);
  }
  {
    // every type-1 edge is the long face (e12) of exactly q+1 chambers,
    // every type-2 edge the e02 face of exactly q+1
    std::vector<long> cnt12(edges.size(), 0), cnt02(edges.size(), 0);
    for (const auto& ch : chambers) {
      cnt12[ch.e12.id]++;
      cnt02[ch.e02.id]++;
    }
    bool ok = true;
    std::string bad;
    for (const auto& e : edges) {
      long expect = q + 1;
      long got = e.type == 1 ? cnt12[e.id] : cnt02[e.id];
      if (got != expect) {
        ok = false;
        bad = "edge " + std::to_string(e.id) + " in " + std::to_string(got) + " chambers";
        break;
      }
    }
    if (chambers.empty() && !edges.empty()) {
      ok = false;
      bad = "no chambers";
    }
    add("edge-chamber incidence: q+1 per pointed edge", ok, bad);
  }
  return rep;
}

QuotientComplex gauge_transform(const QuotientComplex& c, const std::vector<int>& vertex_gauge,
                                const std::vector<int>& chamber_gauge) {
  const FiniteGroup& g = c.group();
  if (vertex_gauge.size() != static_cast<size_t>(c.vertex_count()))
    throw DomainError("vertex gauge size mismatch");
  if (chamber_gauge.size() != c.chambers().size()) throw DomainError("chamber gauge size mismatch");
  for (int x : vertex_gauge) check_voltage(g, x, "vertex gauge");
  for (int x : chamber_gauge) check_voltage(g, x, "chamber gauge");
  for (size_t i = 0; i < chamber_gauge.size(); i += 3)
    if (chamber_gauge[i] != chamber_gauge[i + 1] || chamber_gauge[i] != chamber_gauge[i + 2])
      throw DomainError("chamber gauge must be constant on rotation triples");

  auto edge_g = [&](int e) { return vertex_gauge[c.edges()[e].tail]; };

  ComplexData data;
  data.q = c.q();
  data.group = g;
  for (int v = 0; v < c.vertex_count(); ++v) data.vertices.push_back(v);
  for (const auto& e : c.edges()) {
    PointedEdge ne = e;
    ne.head.g = g.mul(g.mul(edge_g(e.id), e.head.g), g.inv(vertex_gauge[e.head.id]));
    ne.opp.g = g.mul(g.mul(edge_g(e.id), e.opp.g), g.inv(edge_g(e.opp.id)));
    data.edges.push_back(ne);
    std::vector<Ref> outs;
    for (const Ref& r : c.edge_out(e.id))
      outs.push_back(Ref{r.id, g.mul(g.mul(edge_g(e.id), r.g), g.inv(edge_g(r.id)))});
    data.edge_out.push_back(std::move(outs));
  }
  for (const auto& ch : c.chambers()) {
    PointedChamber nc = ch;
    auto fix_face = [&](Ref& f) { f.g = g.mul(g.mul(chamber_gauge[ch.id], f.g), g.inv(edge_g(f.id))); };
    fix_face(nc.e01);
    fix_face(nc.e12);
    fix_face(nc.e02);
    data.chambers.push_back(nc);
    std::vector<Ref> outs;
    for (const Ref& r : c.chamber_out(ch.id))
      outs.push_back(Ref{r.id, g.mul(g.mul(chamber_gauge[ch.id], r.g), g.inv(chamber_gauge[r.id]))});
    data.chamber_out.push_back(std::move(outs));
  }
  return build_complex(data);
}

QuotientComplex random_gauge(const QuotientComplex& c, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, c.group().size() - 1);
  std::vector<int> vg(c.vertex_count());
  for (auto& x : vg) x = pick(rng);
  std::vector<int> cg(c.chambers().size());
  for (size_t i = 0; i < cg.size(); i += 3) cg[i] = cg[i + 1] = cg[i + 2] = pick(rng);
  return gauge_transform(c, vg, cg);
}

namespace {

json group_to_json(const FiniteGroup& g) {
  json j;
  j["degree"] = g.degree();
  json elems = json::array();
  for (int i = 0; i < g.size(); ++i) elems.push_back(g.perm(i).images());
  j["elements"] = elems;
  json gens = json::object();
  for (const auto& [name, idx] : g.generators()) gens[name] = g.perm(idx).images();
  j["generators"] = gens;
  return j;
}

FiniteGroup group_from_json(const json& j) {
  int degree = j.at("degree").get<int>();
  std::vector<std::pair<std::string, Permutation>> gens;
  if (j.contains("generators"))
    for (auto it = j.at("generators").begin(); it != j.at("generators").end(); ++it)
      gens.emplace_back(it.key(), Permutation(it.value().get<std::vector<int>>()));
  FiniteGroup g = FiniteGroup::generated(degree, gens);
  if (j.contains("elements")) {
    // order must match the canonical closure
    auto elems = j.at("elements");
    if (static_cast<int>(elems.size()) != g.size()) throw DomainError("group element list mismatch");
    for (int i = 0; i < g.size(); ++i)
      if (elems[i].get<std::vector<int>>() != g.perm(i).images())
        throw DomainError("group element list mismatch");
  }
  return g;
}

json ref_to_json(const FiniteGroup& g, const Ref& r, const char* key) {
  return json{{key, r.id}, {"g", g.perm(r.g).images()}};
}

Ref ref_from_json(const FiniteGroup& g, const json& j, const char* key) {
  Ref r;
  r.id = j.at(key).get<int>();
  r.g = g.index_of(Permutation(j.at("g").get<std::vector<int>>()));
  return r;
}

}  // namespace

std::string complex_to_json(const QuotientComplex& c) {
  const FiniteGroup& g = c.group();
  json j;
  j["q"] = c.q();
  j["voltage_group"] = group_to_json(g);
  json verts = json::array();
  for (int v = 0; v < c.vertex_count(); ++v) verts.push_back(v);
  j["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : c.edges()) {
    json je;
    je["id"] = e.id;
    je["type"] = e.type;
    je["tail"] = e.tail;
    je["head"] = ref_to_json(g, e.head, "v");
    // the opposite voltage always equals the head voltage, so a bare id suffices
    je["opp"] = e.opp.id;
    edges.push_back(je);
  }
  j["edges"] = edges;
  json chambers = json::array();
  for (const auto& ch : c.chambers()) {
    json jc;
    jc["id"] = ch.id;
    jc["rot"] = ch.rot;
    jc["e01"] = ref_to_json(g, ch.e01, "e");
    jc["e12"] = ref_to_json(g, ch.e12, "e");
    jc["e02"] = ref_to_json(g, ch.e02, "e");
    chambers.push_back(jc);
  }
  j["chambers"] = chambers;
  json eout = json::object();
  for (const auto& e : c.edges()) {
    json lst = json::array();
    for (const Ref& r : c.edge_out(e.id)) lst.push_back(ref_to_json(g, r, "e"));
    eout[std::to_string(e.id)] = lst;
  }
  j["edge_out"] = eout;
  json cout_ = json::object();
  for (const auto& ch : c.chambers()) {
    json lst = json::array();
    for (const Ref& r : c.chamber_out(ch.id)) lst.push_back(ref_to_json(g, r, "c"));
    cout_[std::to_string(ch.id)] = lst;
  }
  j["chamber_out"] = cout_;
  return j.dump(1);
}

QuotientComplex complex_from_json(const std::string& text) {
  json j = json::parse(text);
  ComplexData data;
  data.q = j.at("q").get<long>();
  data.group = group_from_json(j.at("voltage_group"));
  const FiniteGroup& g = data.group;
  for (const auto& v : j.at("vertices")) data.vertices.push_back(v.get<int>());
  std::map<int, std::vector<Ref>> eout, cout_;
  for (const auto& je : j.at("edges")) {
    PointedEdge e;
    e.id = je.at("id").get<int>();
    e.type = je.at("type").get<int>();
    e.tail = je.at("tail").get<int>();
    e.head = ref_from_json(g, je.at("head"), "v");
    e.opp = Ref{je.at("opp").get<int>(), e.head.g};
    data.edges.push_back(e);
  }
  for (const auto& jc : j.at("chambers")) {
    PointedChamber c;
    c.id = jc.at("id").get<int>();
    c.rot = jc.at("rot").get<int>();
    c.e01 = ref_from_json(g, jc.at("e01"), "e");
    c.e12 = ref_from_json(g, jc.at("e12"), "e");
    c.e02 = ref_from_json(g, jc.at("e02"), "e");
    data.chambers.push_back(c);
  }
  for (const auto& e : data.edges) {
    std::vector<Ref> outs;
    for (const auto& r : j.at("edge_out").at(std::to_string(e.id))) outs.push_back(ref_from_json(g, r, "e"));
    data.edge_out.push_back(std::move(outs));
  }
  for (const auto& c : data.chambers) {
    std::vector<Ref> outs;
    for (const auto& r : j.at("chamber_out").at(std::to_string(c.id))) outs.push_back(ref_from_json(g, r, "c"));
    data.chamber_out.push_back(std::move(outs));
  }
  return build_complex(data);
}

}  // namespace a2zeta
