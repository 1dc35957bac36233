#include "garside/group.hpp"

#include <deque>

namespace garside {

FiniteGroup build_group(const GroupSpec& spec) {
  if (spec.generators.empty()) throw group_build_error("no generators");
  if (spec.expected_order && *spec.expected_order > spec.element_cap)
    throw group_build_error(
        "declared group order " + std::to_string(*spec.expected_order) +
        " exceeds the element cap (" + std::to_string(spec.element_cap) +
        "); raise the cap only if the scale is truly intended");
  FiniteGroup G;

  GroupElem id = std::visit(
      [](const auto& g) -> GroupElem {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Monomial>)
          return Monomial::identity(g.m, g.dim());
        else
          return CycMatrix::identity(g.m, g.n);
      },
      spec.generators.front());

  auto check_constraint = [&spec](const GroupElem& e) {
    if (spec.phase_sum_mod > 0 && std::holds_alternative<Monomial>(e)) {
      const auto& mo = std::get<Monomial>(e);
      if (mo.phase_sum() % spec.phase_sum_mod != 0)
        throw group_build_error("generator violates the phase-sum constraint");
    }
  };

  auto add = [&G](const GroupElem& e) -> int {
    auto key = gelem_key(e);
    auto it = G.index_.find(key);
    if (it != G.index_.end()) return it->second;
    int idx = (int)G.elems_.size();
    G.elems_.push_back(e);
    G.index_.emplace(std::move(key), idx);
    G.inv_.push_back(-1);
    return idx;
  };

  add(id);
  G.inv_[0] = 0;
  for (size_t gi = 0; gi < spec.generators.size(); ++gi) {
    check_constraint(spec.generators[gi]);
    int idx = add(spec.generators[gi]);
    G.gens_.push_back(idx);
    G.gen_names_.push_back(gi < spec.generator_names.size()
                               ? spec.generator_names[gi]
                               : "g" + std::to_string(gi));
  }

  // BFS closure under right multiplication, recording one parent edge per
  // element; inverses are then filled in discovery order through
  // inv(x*g) = inv(g)*inv(x).
  std::vector<std::pair<int, int>> parent(G.elems_.size(), {-1, -1});
  std::deque<int> queue;
  for (size_t i = 0; i < G.elems_.size(); ++i) queue.push_back((int)i);
  std::vector<int> discovery;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (size_t gi = 0; gi < G.gens_.size(); ++gi) {
      GroupElem prod = gelem_mul(G.elems_[x], G.elems_[G.gens_[gi]]);
      auto key = gelem_key(prod);
      auto it = G.index_.find(key);
      if (it == G.index_.end()) {
        if (G.elems_.size() >= spec.element_cap)
          throw group_build_error(
              "element cap exceeded (" + std::to_string(spec.element_cap) +
              "): generators may not span a finite group of desk scale");
        int y = (int)G.elems_.size();
        G.elems_.push_back(std::move(prod));
        G.index_.emplace(std::move(key), y);
        G.inv_.push_back(-1);
        parent.push_back({x, (int)gi});
        discovery.push_back(y);
        queue.push_back(y);
      }
    }
  }

  // generator inverses by powering, then everything else along parent edges
  std::vector<int> gen_inv(G.gens_.size());
  for (size_t gi = 0; gi < G.gens_.size(); ++gi) {
    int g = G.gens_[gi];
    int p = g, prev = 0;
    while (p != 0) {
      prev = p;
      p = G.mul(p, g);
    }
    gen_inv[gi] = prev;
    G.inv_[g] = prev;
    G.inv_[prev] = g;
  }
  for (int y : discovery) {
    if (G.inv_[y] >= 0) continue;
    auto [x, gi] = parent[y];
    int iy = G.mul(gen_inv[gi], G.inv_[x]);
    G.inv_[y] = iy;
    G.inv_[iy] = y;
  }

  if (spec.expected_order && *spec.expected_order != G.order())
    throw group_build_error("group order " + std::to_string(G.order()) +
                            " does not match expected " +
                            std::to_string(*spec.expected_order));
  return G;
}

int FiniteGroup::power(int a, long long k) const {
  if (k < 0) return power(inv(a), -k);
  int r = identity(), base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int p = a, n = 1;
  while (p != identity()) {
    p = mul(p, a);
    ++n;
  }
  return n;
}

std::vector<int> FiniteGroup::reflections() const {
  std::vector<int> out;
  for (size_t i = 0; i < elems_.size(); ++i)
    if (gelem_is_reflection(elems_[i])) out.push_back((int)i);
  return out;
}

std::vector<int> FiniteGroup::subgroup(const std::vector<int>& gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<int> out;
  std::deque<int> queue;
  seen[identity()] = 1;
  out.push_back(identity());
  queue.push_back(identity());
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int g : gens) {
      int y = mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

std::size_t FiniteGroup::center_order(const std::vector<int>& sub) const {
  // generators of the subgroup are not tracked; compare against all members
  std::size_t cnt = 0;
  for (int z : sub) {
    bool central = true;
    for (int x : sub)
      if (mul(z, x) != mul(x, z)) {
        central = false;
        break;
      }
    if (central) ++cnt;
  }
  return cnt;
}

}  // namespace garside
