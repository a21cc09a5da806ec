// Finite voltage groups, stored as explicit permutation lists closed under
// composition. Elements are referenced elsewhere by their index; index 0 is
// always the identity.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "a2zeta/util.hpp"

namespace a2zeta {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> img);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  // (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

class FiniteGroup {
 public:
  FiniteGroup() : degree_(1) { init({}); }

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);  // generator "r"; element i is r^i
  static FiniteGroup generated(int degree, const std::vector<std::pair<std::string, Permutation>>& gens);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * elems_.size() + b]; }
  int inv(int a) const { return inv_[a]; }
  const Permutation& perm(int i) const { return elems_[i]; }
  int index_of(const Permutation& p) const;  // throws DomainError if absent
  bool valid_element(int i) const { return i >= 0 && i < size(); }

  const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }
  // BFS word for an element over the generator list (pairs of generator index, used
  // when extending generator-defined data multiplicatively).
  const std::vector<std::pair<int, int>>& bfs_parent() const { return parent_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.degree_ == b.degree_ && a.elems_ == b.elems_;
  }

 private:
  void init(const std::vector<std::pair<std::string, Permutation>>& gens);
  int degree_;
  std::vector<Permutation> elems_;
  std::map<std::vector<int>, int> lookup_;
  std::vector<int> mul_, inv_;
  std::vector<std::pair<std::string, int>> gens_;
  std::vector<std::pair<int, int>> parent_;  // element -> (previous element, generator slot)
};

}  // namespace a2zeta
