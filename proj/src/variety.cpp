#include "wreathlab/variety.hpp"

namespace wreathlab {

AbelianGroupSpec AbelianGroupSpec::from_factors(std::uint64_t p, FactorMap factors) {
  require_prime(p);
  for (auto it = factors.begin(); it != factors.end();) {
    if (it->first == 0) throw DomainError("cyclic factor exponent must be >= 1");
    const Multiplicity& m = it->second;
    if (!m.infinite && m.count < 0) throw DomainError("factor count must be >= 0");
    if (!m.infinite && m.count == 0) {
      it = factors.erase(it);
    } else {
      ++it;
    }
  }
  return AbelianGroupSpec(p, std::move(factors));
}

AbelianGroupSpec AbelianGroupSpec::from_finite(const AbelianPGroup& g) {
  FactorMap f;
  for (const auto& [e, n] : g.factors()) f[e] = Multiplicity::of(n);
  return AbelianGroupSpec(g.prime(), std::move(f));
}

bool AbelianGroupSpec::is_finite() const {
  for (const auto& [e, m] : factors_) {
    if (m.infinite) return false;
  }
  return true;
}

unsigned AbelianGroupSpec::exponent_v() const {
  if (factors_.empty()) return 0;
  return factors_.rbegin()->first;
}

AbelianPGroup AbelianGroupSpec::to_finite() const {
  AbelianPGroup::FactorMap f;
  for (const auto& [e, m] : factors_) {
    if (m.infinite) {
      throw DomainError("group spec has infinitely many C_" + pow_big(p_, e).str() +
                        " factors; a finite group is required here");
    }
    f[e] = m.count;
  }
  return AbelianPGroup::from_factors(p_, std::move(f));
}

std::string AbelianGroupSpec::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (!s.empty()) s += " x ";
    s += "C_" + pow_big(p_, it->first).str();
    if (it->second.infinite) {
      s += "^inf";
    } else if (it->second.count != 1) {
      s += "^" + it->second.count.str();
    }
  }
  return s;
}

bool contains_top_layer_infinity(const AbelianGroupSpec& b) {
  if (b.is_trivial()) {
    throw DomainError("criterion undefined for the trivial group");
  }
  return b.factors().rbegin()->second.infinite;
}

VarietyDecision decide_generates_product_variety(const ActiveProfile& a,
                                                 const AbelianGroupSpec& b) {
  if (b.is_trivial()) throw DomainError("decision requires a non-trivial passive group");
  if (a.prime() != b.prime()) {
    throw DomainError("decision requires matching primes (p=" + std::to_string(a.prime()) +
                      " vs p=" + std::to_string(b.prime()) + ")");
  }

  VarietyDecision out;
  out.v = b.exponent_v();
  out.top = b.factors().rbegin()->second;
  out.generates = out.top.infinite;

  const std::string top_cycle = "C_" + pow_big(b.prime(), out.v).str();
  if (out.generates) {
    out.explanation = "B has infinitely many " + top_cycle +
                      " factors, so it contains " + top_cycle +
                      "^inf and the wreath product generates the product variety";
  } else {
    out.explanation = "B has only " + out.top.count.str() + " factor(s) of top order " +
                      top_cycle + " (lower layers are of no consequence), so it contains no " +
                      top_cycle + "^inf and the wreath product does not generate the product variety";
  }
  return out;
}

}  // namespace wreathlab
