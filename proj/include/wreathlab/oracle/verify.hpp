#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wreathlab/abelian.hpp"
#include "wreathlab/oracle/group.hpp"
#include "wreathlab/shield.hpp"

namespace wreathlab::oracle {

/// Recover the cyclic-factor decomposition of an explicit abelian p-group
/// from its element-order statistics: with N_k the number of solutions of
/// x^{p^k} = 1, the count of factors of exponent >= k is
/// log_p N_k - log_p N_{k-1}. Errors when g is non-abelian or |g| is not a
/// p-power.
AbelianPGroup abelian_structure(const FiniteGroup& g, std::uint64_t p);

/// Outcome of one brute-force-vs-formula comparison on A Wr B.
struct VerifyReport {
  std::string a_name;
  std::string b_name;
  std::uint64_t p;
  std::uint64_t wreath_order;
  std::optional<std::uint32_t> oracle_class;  // nullopt: not nilpotent
  BigInt formula_class;
  ActiveProfile profile;       // extracted from A
  AbelianPGroup b_structure;   // recovered from B
  bool equal;

  /// "oracle=2 formula=2 OK" / "... MISMATCH" one-liner.
  std::string summary() const;
};

/// Build A Wr B explicitly, measure its nilpotency class by lower central
/// series, and compare against the class formula evaluated on the profile
/// of A and the structure of B. A must be a nilpotent p-group, B an
/// abelian p-group, same p.
VerifyReport verify_shield(const GroupPtr& a, const GroupPtr& b, std::uint64_t p,
                           std::uint64_t size_limit = kDefaultSizeLimit);

/// The prime dividing both group orders, for inferring p when the caller
/// did not give one. Errors when orders are not powers of a common prime.
std::uint64_t common_prime(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace wreathlab::oracle
