#pragma once

#include <cstdint>
#include <vector>

#include "wreathlab/oracle/group.hpp"

namespace wreathlab::oracle {

/// A subgroup of a FiniteGroup: the sorted vector of its element codes and
/// the generator set it was closed from. Immutable once built.
class Subgroup {
 public:
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Code>& elements() const { return elements_; }
  const std::vector<Code>& generators() const { return generators_; }
  bool is_trivial() const { return elements_.size() == 1; }

  bool contains(Code c) const;

  /// Equal as element sets (generator sets may differ).
  bool same_elements(const Subgroup& other) const { return elements_ == other.elements_; }

 private:
  friend Subgroup subgroup_closure(const FiniteGroup&, std::vector<Code>);
  friend Subgroup full_subgroup(const FiniteGroup&);
  friend Subgroup trivial_subgroup();

  Subgroup(std::vector<Code> elements, std::vector<Code> generators)
      : elements_(std::move(elements)), generators_(std::move(generators)) {}

  std::vector<Code> elements_;   // sorted ascending
  std::vector<Code> generators_;
};

/// Smallest subgroup of g containing the generators, by breadth-first
/// closure under right multiplication by the generators and their
/// inverses. The result is verified closed before being returned: a full
/// pairwise check up to 1000 elements, a seeded random sample above.
Subgroup subgroup_closure(const FiniteGroup& g, std::vector<Code> generators);

/// The whole group as a Subgroup (generators = g.generators()).
Subgroup full_subgroup(const FiniteGroup& g);

/// The trivial subgroup {identity}.
Subgroup trivial_subgroup();

/// Least n >= 1 with x^n = identity for every x in s.
std::uint64_t subgroup_exponent(const FiniteGroup& g, const Subgroup& s);

}  // namespace wreathlab::oracle
