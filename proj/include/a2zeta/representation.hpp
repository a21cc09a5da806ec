// Exact-rational matrix representations of finite voltage groups, plus the
// complex-valued characters used by the floating comparison paths.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "a2zeta/group.hpp"
#include "a2zeta/matrix.hpp"

namespace a2zeta {

class Representation {
 public:
  Representation() = default;
  Representation(FiniteGroup group, int dim, std::vector<RatMat> mats);

  static Representation trivial(const FiniteGroup& g);
  // Natural permutation representation: each element acts by its stored permutation.
  static Representation natural_permutation(const FiniteGroup& g);
  // Permutation representation from an explicit action (one permutation per element).
  static Representation permutation(const FiniteGroup& g, const std::vector<Permutation>& action);

  const FiniteGroup& group() const { return group_; }
  int dim() const { return dim_; }
  const RatMat& matrix(int element) const { return mats_[element]; }

  Rat character(int element) const { return mats_[element].trace(); }

  // Multiplicativity, identity image, invertibility; throws on failure.
  void validate() const;

 private:
  FiniteGroup group_;
  int dim_ = 0;
  std::vector<RatMat> mats_;
};

Representation dual_representation(const Representation& rho);

// Induction from the subgroup spanned by `sub_elements` (element indices of H,
// must be closed) carrying the representation `sub_matrix` of dimension sub_dim.
Representation induce(const FiniteGroup& H, const std::vector<int>& sub_elements,
                      const std::function<RatMat(int)>& sub_matrix, int sub_dim);

// One-dimensional complex character of a cyclic group: element r^k maps to
// exp(2*pi*i*j*k/n) where r is the named generator.
std::vector<Cplx> cyclic_character(const FiniteGroup& g, int j);

// Representation file: {"group": {"degree","generators"}, "rep": {"type":
// "permutation"}} or {"type": "matrix", "dim", "matrices": {label: [[..]]}}
// with rational-string entries. The group must equal `expected`.
Representation representation_from_json(const FiniteGroup& expected, const std::string& text);

// Sheet action file: {"degree": n, "generators": {label: [images]}} keyed by
// the voltage group's generator labels.
std::vector<Permutation> action_from_json(const FiniteGroup& base_group, const std::string& text);

// Built-in names ("trivial", "regular", "permutation") or a JSON document.
Representation resolve_representation(const FiniteGroup& group, const std::string& spec);

}  // namespace a2zeta
