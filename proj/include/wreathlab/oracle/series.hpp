#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreathlab/oracle/group.hpp"
#include "wreathlab/oracle/subgroup.hpp"
#include "wreathlab/shield.hpp"

namespace wreathlab::oracle {

/// The commutator subgroup [H, G] for H normal in G, as the normal closure
/// of the commutators of the two generator sets: seed with
/// {[x, y] : x in gens(H), y in gens(G)}, close, then conjugate generators
/// by the generators of G (and inverses) to a fixpoint. A final full
/// verification pass checks every [h, y] with h ranging over H lands
/// inside (sampled above 4096 elements) and repairs the subgroup if not.
Subgroup commutator_with_group(const FiniteGroup& g, const Subgroup& h);

struct LowerCentralSeries {
  /// gamma_1 = G, gamma_{h+1} = [gamma_h, G]; strictly descending terms.
  /// Ends with the trivial subgroup when the series reaches it, otherwise
  /// with the non-trivial subgroup the series stabilized at.
  std::vector<Subgroup> terms;
  bool reached_trivial;
};

LowerCentralSeries lower_central_series(const FiniteGroup& g);

/// Nilpotency class, or nullopt when the series stabilizes above the
/// identity. The trivial group has class 0.
std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& g);
std::optional<std::uint32_t> nilpotency_class(const LowerCentralSeries& series);

/// ActiveProfile of an explicit nilpotent p-group: c from the series,
/// s(h) = log_p exp(gamma_h). Errors when |G| is not a power of p, G is
/// trivial, or G is not nilpotent.
ActiveProfile profile_extract(const FiniteGroup& g, std::uint64_t p);

/// Definitional K_p-series: K_i = < x^{p^j} : x in gamma_r(G), r*p^j >= i >,
/// K_1 = G; terms for i = 1 up to and including the first trivial one.
/// Errors when |G| is not a power of p.
std::vector<Subgroup> kp_series_definitional(const FiniteGroup& g, std::uint64_t p);

/// log_p of a p-power, erroring on non-powers.
unsigned log_p_exact(std::uint64_t n, std::uint64_t p);

/// Whether |G| is a power of p (p prime, order 1 counts).
bool is_p_power(std::uint64_t n, std::uint64_t p);

/// One line per term: "gamma[h] order=<n> exponent=<e>".
std::string series_report(const FiniteGroup& g, const LowerCentralSeries& series);

/// One line per term: "K[i] order=<n> exponent=<e>".
std::string kp_report(const FiniteGroup& g, const std::vector<Subgroup>& terms);

}  // namespace wreathlab::oracle
