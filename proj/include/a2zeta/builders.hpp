// Concrete complexes: finite projective planes, triangle presentations over
// them, one-vertex quotient complexes from a presentation plus a voltage
// assignment, and a local lattice model that independently reproduces the
// neighborhood counts from chains of subgroups of (Z/p^2)^3.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "a2zeta/quotient_complex.hpp"

namespace a2zeta {

struct ProjectivePlane {
  long q = 0;
  int n = 0;                                    // q^2+q+1 points and as many lines
  std::vector<std::array<int, 3>> points;       // normalized coordinates, lex order
  std::vector<std::array<int, 3>> line_normals; // same normalization
  std::vector<std::vector<bool>> incidence;     // [point][line]
  std::vector<std::vector<int>> points_on_line;
  std::vector<std::vector<int>> lines_on_point;
  bool incident(int p, int l) const { return incidence[p][l]; }
};

ProjectivePlane build_projective_plane(long q);  // q in {2, 3}

struct TrianglePresentation {
  long q = 0;
  std::vector<int> lambda;                  // point -> line
  std::vector<std::array<int, 3>> triples;  // ordered, closed under cyclic shift
};

// Backtracking search for a triple set compatible with lambda; deterministic
// under the plane's canonical order. Returns nullopt when lambda admits none.
std::optional<TrianglePresentation> search_triangle_presentation(const ProjectivePlane& plane,
                                                                 const std::vector<int>& lambda);

// Iterates cyclically structured lambda candidates until a presentation is
// found; `skip` passes over that many successful candidates first.
TrianglePresentation find_triangle_presentation(long q, int skip = 0);

// One-vertex quotient complex from a presentation. phi assigns a voltage
// group element to each point generator and must respect every triple
// relation: phi[x]*phi[y]*phi[z] = identity.
QuotientComplex complex_from_presentation(const TrianglePresentation& t, const FiniteGroup& group,
                                          const std::vector<int>& phi);

// The standard q=2 fixture: searched presentation, voltages in Z/3 with every
// generator mapped to the 3-cycle (or the trivial group when trivial=true).
QuotientComplex one_vertex_complex_q2(bool trivial_voltages = false);

struct OracleReport {
  long q = 0;
  long type1_edges_at_vertex = 0;      // expect q^2+q+1
  long type2_edges_at_vertex = 0;      // expect q^2+q+1
  long min_edge_out = 0, max_edge_out = 0;       // expect q^2 (all pointed edges)
  long min_chamber_out = 0, max_chamber_out = 0; // expect q (all pointed chambers)
  long min_edge_chambers = 0, max_edge_chambers = 0;  // type-1 edge in q+1 chambers
  bool pass = false;
  std::string summary() const;
};

// Exhaustive check of the neighborhood rules in the rank-3 local model.
OracleReport local_lattice_oracle(long q);

std::string presentation_to_json(const TrianglePresentation& t);
TrianglePresentation presentation_from_json(const std::string& text);

}  // namespace a2zeta
