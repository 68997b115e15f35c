#include "wreathlab/oracle/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "wreathlab/error.hpp"

namespace wreathlab::oracle {

namespace {

// Safety net behind every closure: returned sets must actually be closed.
void verify_closed(const FiniteGroup& g, const std::vector<Code>& elems) {
  auto inside = [&](Code c) { return std::binary_search(elems.begin(), elems.end(), c); };
  if (elems.size() <= 1000) {
    for (Code x : elems) {
      if (!inside(g.inv_code(x))) throw Error("closure violated: inverse escapes subgroup");
      for (Code y : elems) {
        if (!inside(g.mul_code(x, y))) throw Error("closure violated: product escapes subgroup");
      }
    }
    return;
  }
  std::mt19937_64 rng(0x5eed5eedULL ^ elems.size());
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int i = 0; i < 100000; ++i) {
    Code x = elems[pick(rng)];
    Code y = elems[pick(rng)];
    if (!inside(g.mul_code(x, y)) || !inside(g.inv_code(x))) {
      throw Error("closure violated: sampled product escapes subgroup");
    }
  }
}

}  // namespace

bool Subgroup::contains(Code c) const {
  return std::binary_search(elements_.begin(), elements_.end(), c);
}

Subgroup subgroup_closure(const FiniteGroup& g, std::vector<Code> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::vector<Code> edges = generators;
  for (Code c : generators) edges.push_back(g.inv_code(c));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::unordered_set<Code> seen;
  std::vector<Code> queue;
  seen.insert(FiniteGroup::identity);
  queue.push_back(FiniteGroup::identity);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Code x = queue[head];
    for (Code e : edges) {
      Code y = g.mul_code(x, e);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }

  std::sort(queue.begin(), queue.end());
  verify_closed(g, queue);
  return Subgroup(std::move(queue), std::move(generators));
}

Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<Code> all(g.order());
  std::iota(all.begin(), all.end(), Code{0});
  return Subgroup(std::move(all), g.generators());
}

Subgroup trivial_subgroup() { return Subgroup({FiniteGroup::identity}, {}); }

std::uint64_t subgroup_exponent(const FiniteGroup& g, const Subgroup& s) {
  std::uint64_t e = 1;
  for (Code x : s.elements()) e = std::lcm(e, g.element_order(x));
  return e;
}

}  // namespace wreathlab::oracle
