#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wreathlab/bigint.hpp"

namespace wreathlab {

/// A finite abelian p-group given as a direct product of cyclic p-power
/// factors: the prime p plus a multiset of factor exponents.
///
/// Canonical form: a sorted sparse map exponent -> count with no zero
/// counts; two groups are isomorphic iff their canonical maps are equal.
/// The trivial group is the empty map. Values are immutable after
/// construction.
class AbelianPGroup {
 public:
  using FactorMap = std::map<unsigned, BigInt>;

  /// Group with one cyclic factor C_{p^e} per listed exponent e.
  AbelianPGroup(std::uint64_t p, const std::vector<unsigned>& exponents);

  /// Group from an exponent -> count map (counts may be large).
  static AbelianPGroup from_factors(std::uint64_t p, FactorMap factors);

  static AbelianPGroup trivial(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  const FactorMap& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }

  /// log base p of |G|, i.e. the sum of e * count(e).
  BigInt log_order() const;

  /// |G| = p^log_order as an explicit integer.
  BigInt order() const;

  /// The maximal factor exponent v, so exp(G) = p^v; 0 for the trivial group.
  unsigned exponent_v() const;

  /// G^{p^j}: each factor C_{p^e} becomes C_{p^{max(e-j,0)}}, canonicalized.
  AbelianPGroup power_subgroup(unsigned j) const;

  bool operator==(const AbelianPGroup&) const = default;

  /// "C_125 x C_5^2" style display; "1" for the trivial group.
  std::string to_string() const;

 private:
  AbelianPGroup(std::uint64_t p, FactorMap factors, int /*tag*/);

  std::uint64_t p_;
  FactorMap factors_;
};

/// Direct product; factor counts add pointwise. Primes must match.
AbelianPGroup direct_product(const AbelianPGroup& g, const AbelianPGroup& h);

}  // namespace wreathlab
