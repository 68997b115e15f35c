#include "wreathlab/abelian.hpp"

#include <utility>

namespace wreathlab {

AbelianPGroup::AbelianPGroup(std::uint64_t p, FactorMap factors, int)
    : p_(p), factors_(std::move(factors)) {}

AbelianPGroup::AbelianPGroup(std::uint64_t p, const std::vector<unsigned>& exponents)
    : p_(p) {
  require_prime(p);
  for (unsigned e : exponents) {
    if (e == 0) throw DomainError("cyclic factor exponent must be >= 1");
    factors_[e] += 1;
  }
}

AbelianPGroup AbelianPGroup::from_factors(std::uint64_t p, FactorMap factors) {
  require_prime(p);
  for (auto it = factors.begin(); it != factors.end();) {
    if (it->first == 0) throw DomainError("cyclic factor exponent must be >= 1");
    if (it->second < 0) throw DomainError("factor count must be >= 0");
    if (it->second == 0) {
      it = factors.erase(it);
    } else {
      ++it;
    }
  }
  return AbelianPGroup(p, std::move(factors), 0);
}

AbelianPGroup AbelianPGroup::trivial(std::uint64_t p) {
  require_prime(p);
  return AbelianPGroup(p, {}, 0);
}

BigInt AbelianPGroup::log_order() const {
  BigInt sum = 0;
  for (const auto& [e, n] : factors_) sum += BigInt(e) * n;
  return sum;
}

BigInt AbelianPGroup::order() const {
  BigInt r = 1;
  for (const auto& [e, n] : factors_) {
    // p^(e*n) accumulated factor by factor
    BigInt pe = pow_big(p_, e);
    BigInt cnt = n;
    BigInt base = pe;
    while (cnt > 0) {
      if ((cnt & 1) != 0) r *= base;
      base *= base;
      cnt >>= 1;
    }
  }
  return r;
}

unsigned AbelianPGroup::exponent_v() const {
  if (factors_.empty()) return 0;
  return factors_.rbegin()->first;
}

AbelianPGroup AbelianPGroup::power_subgroup(unsigned j) const {
  FactorMap out;
  for (const auto& [e, n] : factors_) {
    if (e > j) out[e - j] += n;
  }
  return AbelianPGroup(p_, std::move(out), 0);
}

std::string AbelianPGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  // Largest factors first, multiplicity as a power.
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (!s.empty()) s += " x ";
    s += "C_" + pow_big(p_, it->first).str();
    if (it->second != 1) s += "^" + it->second.str();
  }
  return s;
}

AbelianPGroup direct_product(const AbelianPGroup& g, const AbelianPGroup& h) {
  if (g.prime() != h.prime()) {
    throw DomainError("direct product of groups over different primes (p=" +
                      std::to_string(g.prime()) + " vs p=" + std::to_string(h.prime()) + ")");
  }
  AbelianPGroup::FactorMap out = g.factors();
  for (const auto& [e, n] : h.factors()) out[e] += n;
  return AbelianPGroup::from_factors(g.prime(), std::move(out));
}

}  // namespace wreathlab
