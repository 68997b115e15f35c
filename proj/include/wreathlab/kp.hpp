#pragma once

#include <map>
#include <vector>

#include "wreathlab/abelian.hpp"
#include "wreathlab/bigint.hpp"

namespace wreathlab {

/// The parameters a finite abelian p-group contributes to the wreath-product
/// class formula, derived from its K_p-series:
///   d    = last index i with K_i != 1,
///   e(s) = log_p |K_s / K_{s+1}| (stored sparsely, zero entries omitted),
///   a    = 1 + (p-1) * sum_s s * e(s),
///   b    = (p-1) * d.
///
/// For a group of exponent p^v only the v indices s = 1, p, ..., p^{v-1}
/// carry non-zero e(s), while d = p^{v-1} itself grows exponentially in v;
/// the sparse map avoids materializing the dense range.
struct ShieldParams {
  BigInt d;
  std::map<BigInt, BigInt> e;
  BigInt a;
  BigInt b;
};

/// i'th term of the K_p-series of an abelian group: G^{p^j} with j minimal
/// such that p^j >= i. kp_term(G, 1) = G. Errors on i < 1.
AbelianPGroup kp_term(const AbelianPGroup& g, const BigInt& i);

/// Maximal i with kp_term(G, i) non-trivial; equals p^{v-1} for a group of
/// exponent p^v. Undefined (error) for the trivial group.
BigInt kp_d(const AbelianPGroup& g);

/// Full parameter tuple (d, e, a, b) for a non-trivial group.
ShieldParams shield_params(const AbelianPGroup& g);

/// One run of equal consecutive K_p-terms: indices first..last share `term`.
struct KpRun {
  BigInt first;
  BigInt last;
  AbelianPGroup term;
};

/// Run-length-encoded K_p-series from i = 1 up to and including the first
/// trivial term (emitted as the single index d+1). Terms change exactly at
/// the interval boundaries i = p^k + 1.
std::vector<KpRun> kp_sequence(const AbelianPGroup& g);

}  // namespace wreathlab
