// Data model for finite voltage-decorated quotient complexes: pointed edges
// opposite in pairs, pointed chambers in rotation triples, straight-line
// continuation maps on both, with a group element on every cross reference.
//
// Conventions baked into the model:
//   - every edge representative is based at its tail vertex, so tail
//     references carry no voltage; head, opposite and continuation references
//     do.
//   - chamber rotation references stay inside the stored triple and carry no
//     voltage; chamber face references carry one.
//   - canonical order: type-1 edges before type-2, chambers listed as
//     consecutive rotation triples (c, rot c, rot^2 c).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a2zeta/group.hpp"

namespace a2zeta {

struct Ref {
  int id = -1;
  int g = 0;  // voltage group element index
  friend bool operator==(const Ref& a, const Ref& b) { return a.id == b.id && a.g == b.g; }
};

struct PointedEdge {
  int id = -1;
  int type = 0;  // 1 or 2, the algebraic length
  int tail = -1;
  Ref head;
  Ref opp;
};

struct PointedChamber {
  int id = -1;
  int rot = -1;       // next chamber in the rotation triple
  Ref e01, e12, e02;  // faces along the vertex order (01 and 12 have type 1, 02 has type 2)
};

// Raw incidence description, before canonical reordering. Ids may be any
// distinct non-negative integers.
struct ComplexData {
  long q = 0;
  FiniteGroup group;
  std::vector<int> vertices;
  std::vector<PointedEdge> edges;
  std::vector<PointedChamber> chambers;
  std::vector<std::vector<Ref>> edge_out;     // parallel to edges
  std::vector<std::vector<Ref>> chamber_out;  // parallel to chambers
};

class QuotientComplex {
 public:
  QuotientComplex() = default;

  long q() const { return q_; }
  const FiniteGroup& group() const { return group_; }
  int vertex_count() const { return n_vertices_; }
  const std::vector<PointedEdge>& edges() const { return edges_; }
  const std::vector<PointedChamber>& chambers() const { return chambers_; }
  const std::vector<Ref>& edge_out(int e) const { return edge_out_[e]; }
  const std::vector<Ref>& chamber_out(int c) const { return chamber_out_[c]; }
  const std::vector<int>& star(int v) const { return star_[v]; }

  long n0() const { return n_vertices_; }
  long n1() const { return static_cast<long>(edges_.size()) / 2; }
  long n2() const { return static_cast<long>(chambers_.size()) / 3; }

  friend QuotientComplex build_complex(const ComplexData& data);

 private:
  long q_ = 0;
  FiniteGroup group_;
  int n_vertices_ = 0;
  std::vector<PointedEdge> edges_;
  std::vector<PointedChamber> chambers_;
  std::vector<std::vector<Ref>> edge_out_, chamber_out_;
  std::vector<std::vector<int>> star_;
};

// Assembles and canonically reorders a complex; throws StructureError on
// dangling references, invalid voltages, or broken closure.
QuotientComplex build_complex(const ComplexData& data);

long euler_characteristic(const QuotientComplex& c);

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // offending ids on failure
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string summary() const;
};

ValidationReport validate(const QuotientComplex& c);

// Re-chooses lifts: one group element per vertex and one per rotation triple
// (passed per chamber, constant on each triple). Edge lifts stay pinned to
// their tail vertex.
QuotientComplex gauge_transform(const QuotientComplex& c, const std::vector<int>& vertex_gauge,
                                const std::vector<int>& chamber_gauge);

// Deterministic pseudo-random gauge for robustness checks.
QuotientComplex random_gauge(const QuotientComplex& c, unsigned seed);

std::string complex_to_json(const QuotientComplex& c);
QuotientComplex complex_from_json(const std::string& text);

}  // namespace a2zeta
