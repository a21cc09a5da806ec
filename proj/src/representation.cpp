#include "a2zeta/representation.hpp"

#include <cmath>

#include "json.hpp"

namespace a2zeta {

Representation::Representation(FiniteGroup group, int dim, std::vector<RatMat> mats)
    : group_(std::move(group)), dim_(dim), mats_(std::move(mats)) {
  if (static_cast<int>(mats_.size()) != group_.size())
    throw DomainError("representation must provide one matrix per group element");
}

Representation Representation::trivial(const FiniteGroup& g) {
  std::vector<RatMat> mats(g.size(), RatMat::identity(1));
  return Representation(g, 1, std::move(mats));
}

Representation Representation::natural_permutation(const FiniteGroup& g) {
  std::vector<Permutation> action;
  action.reserve(g.size());
  for (int i = 0; i < g.size(); ++i) action.push_back(g.perm(i));
  return permutation(g, action);
}

Representation Representation::permutation(const FiniteGroup& g,
                                           const std::vector<Permutation>& action) {
  if (static_cast<int>(action.size()) != g.size())
    throw DomainError("action must assign a permutation to every element");
  int n = action.empty() ? 0 : action[0].degree();
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (!(action[g.mul(a, b)] == action[a] * action[b]))
        throw DomainError("action is not a homomorphism");
  std::vector<RatMat> mats;
  mats.reserve(g.size());
  for (int e = 0; e < g.size(); ++e) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(action[e].apply(i), i) = Rat(1);
    mats.push_back(std::move(m));
  }
  return Representation(g, n, std::move(mats));
}

void Representation::validate() const {
  if (!(mats_[group_.identity()] == RatMat::identity(dim_)))
    throw DomainError("representation does not map identity to the identity matrix");
  for (int a = 0; a < group_.size(); ++a)
    for (int b = 0; b < group_.size(); ++b)
      if (!(mats_[group_.mul(a, b)] == mats_[a] * mats_[b]))
        throw DomainError("representation is not multiplicative");
  for (int a = 0; a < group_.size(); ++a)
    if (sgn(scalar_det(mats_[a])) == 0) throw DomainError("representation matrix is singular");
}

Representation dual_representation(const Representation& rho) {
  const FiniteGroup& g = rho.group();
  std::vector<RatMat> mats;
  mats.reserve(g.size());
  for (int e = 0; e < g.size(); ++e) mats.push_back(rho.matrix(g.inv(e)).transpose());
  return Representation(g, rho.dim(), std::move(mats));
}

Representation induce(const FiniteGroup& H, const std::vector<int>& sub_elements,
                      const std::function<RatMat(int)>& sub_matrix, int sub_dim) {
  std::vector<bool> in_sub(H.size(), false);
  for (int e : sub_elements) {
    if (!H.valid_element(e)) throw DomainError("subgroup element out of range");
    in_sub[e] = true;
  }
  if (!in_sub[H.identity()]) throw DomainError("subgroup must contain the identity");
  for (int a : sub_elements)
    for (int b : sub_elements)
      if (!in_sub[H.mul(a, b)]) throw DomainError("subgroup is not closed");

  // Left coset representatives in canonical element order.
  std::vector<int> reps;
  std::vector<bool> covered(H.size(), false);
  for (int e = 0; e < H.size(); ++e) {
    if (covered[e]) continue;
    reps.push_back(e);
    for (int s : sub_elements) covered[H.mul(e, s)] = true;
  }
  int index = static_cast<int>(reps.size());
  int dim = sub_dim * index;

  std::vector<RatMat> mats;
  mats.reserve(H.size());
  for (int g = 0; g < H.size(); ++g) {
    RatMat m(dim, dim);
    for (int j = 0; j < index; ++j) {
      int gj = H.mul(g, reps[j]);
      for (int i = 0; i < index; ++i) {
        int s = H.mul(H.inv(reps[i]), gj);
        if (!in_sub[s]) continue;
        RatMat block = sub_matrix(s);
        for (int r = 0; r < sub_dim; ++r)
          for (int c = 0; c < sub_dim; ++c) m.at(i * sub_dim + r, j * sub_dim + c) = block.at(r, c);
      }
    }
    mats.push_back(std::move(m));
  }
  return Representation(H, dim, std::move(mats));
}

namespace {

FiniteGroup group_from_json_obj(const nlohmann::json& j) {
  int degree = j.at("degree").get<int>();
  std::vector<std::pair<std::string, Permutation>> gens;
  if (j.contains("generators"))
    for (auto it = j.at("generators").begin(); it != j.at("generators").end(); ++it)
      gens.emplace_back(it.key(), Permutation(it.value().get<std::vector<int>>()));
  return FiniteGroup::generated(degree, gens);
}

RatMat mat_from_json(const nlohmann::json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  RatMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rat_from_string(j.at(r).at(c).get<std::string>());
  return m;
}

// extends generator-level data to all elements along the closure order
template <class T, class Mul>
std::vector<T> extend_by_words(const FiniteGroup& g, const std::vector<T>& gen_values,
                               const T& identity_value, Mul mul) {
  std::vector<T> values(g.size(), identity_value);
  const auto& parent = g.bfs_parent();
  for (int e = 1; e < g.size(); ++e) {
    auto [prev, gi] = parent[e];
    values[e] = mul(values[prev], gen_values[gi]);
  }
  return values;
}

}  // namespace

Representation representation_from_json(const FiniteGroup& expected, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FiniteGroup g = group_from_json_obj(j.at("group"));
  if (!(g == expected)) throw DomainError("representation group mismatch");
  const auto& rep = j.at("rep");
  std::string type = rep.at("type").get<std::string>();
  if (type == "permutation") return Representation::natural_permutation(g);
  if (type != "matrix") throw DomainError("unknown representation type: " + type);
  int dim = rep.at("dim").get<int>();
  std::vector<RatMat> gen_mats;
  for (const auto& [name, idx] : g.generators()) {
    if (!rep.at("matrices").contains(name))
      throw DomainError("matrix representation missing generator " + name);
    RatMat m = mat_from_json(rep.at("matrices").at(name));
    if (m.rows() != dim || m.cols() != dim) throw DomainError("matrix dimension mismatch");
    gen_mats.push_back(m);
  }
  std::vector<RatMat> mats = extend_by_words<RatMat>(
      g, gen_mats, RatMat::identity(dim), [](const RatMat& a, const RatMat& b) { return a * b; });
  Representation out(g, dim, std::move(mats));
  out.validate();
  return out;
}

std::vector<Permutation> action_from_json(const FiniteGroup& base_group, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int sheets = j.at("degree").get<int>();
  std::vector<Permutation> gen_perms;
  for (const auto& [name, idx] : base_group.generators()) {
    if (!j.at("generators").contains(name))
      throw DomainError("sheet action missing generator " + name);
    Permutation p(j.at("generators").at(name).get<std::vector<int>>());
    if (p.degree() != sheets) throw DomainError("sheet action degree mismatch");
    gen_perms.push_back(p);
  }
  return extend_by_words<Permutation>(base_group, gen_perms, Permutation::identity(sheets),
                                      [](const Permutation& a, const Permutation& b) { return a * b; });
}

Representation resolve_representation(const FiniteGroup& group, const std::string& spec) {
  if (spec == "trivial") return Representation::trivial(group);
  if (spec == "regular") {
    return induce(group, {group.identity()}, [](int) { return RatMat::identity(1); }, 1);
  }
  if (spec == "permutation" || spec == "natural") return Representation::natural_permutation(group);
  if (!spec.empty() && spec[0] == '{') return representation_from_json(group, spec);
  throw DomainError("unknown representation: " + spec);
}

std::vector<Cplx> cyclic_character(const FiniteGroup& g, int j) {
  // locate a generator whose powers exhaust the group
  int gen = -1;
  for (const auto& [name, idx] : g.generators()) {
    int e = idx, count = 1;
    while (e != g.identity() && count <= g.size()) {
      e = g.mul(e, idx);
      ++count;
    }
    if (count == g.size()) {
      gen = idx;
      break;
    }
  }
  if (gen < 0) throw DomainError("group is not cyclic");
  std::vector<int> exponent(g.size(), -1);
  int e = g.identity();
  for (int k = 0; k < g.size(); ++k) {
    exponent[e] = k;
    e = g.mul(e, gen);
  }
  std::vector<Cplx> chi(g.size());
  const double two_pi = 6.283185307179586476925287;
  for (int i = 0; i < g.size(); ++i) {
    double t = two_pi * j * exponent[i] / g.size();
    chi[i] = Cplx(std::cos(t), std::sin(t));
  }
  return chi;
}

}  // namespace a2zeta
