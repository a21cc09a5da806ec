#include "a2zeta/group.hpp"

#include <algorithm>
#include <numeric>

namespace a2zeta {

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw DomainError("invalid permutation image list");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("permutation degree mismatch");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a.img_[b.img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
  return Permutation(std::move(img));
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.degree_ = 1;
  g.init({});
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  if (n == 1) return trivial();
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  FiniteGroup g;
  g.degree_ = n;
  g.init({{"r", Permutation(std::move(img))}});
  return g;
}

FiniteGroup FiniteGroup::generated(int degree,
                                   const std::vector<std::pair<std::string, Permutation>>& gens) {
  FiniteGroup g;
  g.degree_ = degree;
  for (const auto& [name, p] : gens)
    if (p.degree() != degree) throw DomainError("generator degree mismatch: " + name);
  g.init(gens);
  return g;
}

void FiniteGroup::init(const std::vector<std::pair<std::string, Permutation>>& gens) {
  elems_.clear();
  lookup_.clear();
  gens_.clear();
  parent_.clear();
  elems_.push_back(Permutation::identity(degree_));
  lookup_[elems_[0].images()] = 0;
  parent_.emplace_back(-1, -1);
  std::vector<Permutation> gen_perms;
  for (const auto& [name, p] : gens) gen_perms.push_back(p);
  // breadth-first closure, deterministic in generator order
  for (size_t head = 0; head < elems_.size(); ++head) {
    for (size_t gi = 0; gi < gen_perms.size(); ++gi) {
      Permutation next = elems_[head] * gen_perms[gi];
      if (lookup_.find(next.images()) == lookup_.end()) {
        lookup_[next.images()] = static_cast<int>(elems_.size());
        elems_.push_back(next);
        parent_.emplace_back(static_cast<int>(head), static_cast<int>(gi));
        if (elems_.size() > 20000) throw DomainError("voltage group too large");
      }
    }
  }
  for (const auto& [name, p] : gens) gens_.emplace_back(name, lookup_.at(p.images()));
  int n = size();
  mul_.assign(static_cast<size_t>(n) * n, 0);
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul_[static_cast<size_t>(a) * n + b] = lookup_.at((elems_[a] * elems_[b]).images());
  for (int a = 0; a < n; ++a) inv_[a] = lookup_.at(elems_[a].inverse().images());
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = lookup_.find(p.images());
  if (it == lookup_.end()) throw DomainError("voltage not in group");
  return it->second;
}

}  // namespace a2zeta
