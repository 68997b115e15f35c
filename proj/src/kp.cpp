#include "wreathlab/kp.hpp"

namespace wreathlab {

AbelianPGroup kp_term(const AbelianPGroup& g, const BigInt& i) {
  if (i < 1) throw DomainError("K_p-series index must be >= 1, got " + i.str());
  const unsigned v = g.exponent_v();
  // Minimal j with p^j >= i, capped at v (beyond which the term is trivial).
  unsigned j = 0;
  BigInt pw = 1;
  while (pw < i && j < v) {
    pw *= g.prime();
    ++j;
  }
  if (pw < i) return AbelianPGroup::trivial(g.prime());
  return g.power_subgroup(j);
}

BigInt kp_d(const AbelianPGroup& g) {
  if (g.is_trivial()) {
    throw DomainError("d is undefined for the trivial group (no non-trivial K_p-term)");
  }
  // kp_term(G, i) = G^{p^j(i)} is non-trivial iff j(i) <= v-1, i.e. i <= p^{v-1}.
  return pow_big(g.prime(), g.exponent_v() - 1);
}

ShieldParams shield_params(const AbelianPGroup& g) {
  if (g.is_trivial()) {
    throw DomainError("Shield parameters are undefined for the trivial group");
  }
  const std::uint64_t p = g.prime();
  const unsigned v = g.exponent_v();

  ShieldParams out;
  out.d = pow_big(p, v - 1);

  // e(s) is non-zero only at s = p^k: the series is constant on
  // (p^k, p^{k+1}] and steps exactly when the power index increases.
  BigInt sum_se = 0;
  BigInt s = 1;
  AbelianPGroup cur = g;
  for (unsigned k = 0; k < v; ++k) {
    AbelianPGroup next = cur.power_subgroup(1);
    BigInt ek = cur.log_order() - next.log_order();
    out.e[s] = ek;  // always >= 1: G^{p^k} strictly shrinks while non-trivial
    sum_se += s * ek;
    s *= p;
    cur = next;
  }

  out.a = 1 + BigInt(p - 1) * sum_se;
  out.b = BigInt(p - 1) * out.d;
  return out;
}

std::vector<KpRun> kp_sequence(const AbelianPGroup& g) {
  std::vector<KpRun> runs;
  if (g.is_trivial()) {
    runs.push_back({1, 1, g});
    return runs;
  }
  const std::uint64_t p = g.prime();
  const unsigned v = g.exponent_v();

  runs.push_back({1, 1, g});
  BigInt lo = 1;   // p^k
  BigInt hi = p;   // p^{k+1}
  for (unsigned k = 0; k + 1 < v; ++k) {
    runs.push_back({lo + 1, hi, g.power_subgroup(k + 1)});
    lo = hi;
    hi *= p;
  }
  // First trivial term, at index d + 1 only.
  runs.push_back({lo + 1, lo + 1, AbelianPGroup::trivial(p)});
  return runs;
}

}  // namespace wreathlab
