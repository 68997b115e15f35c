#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "wreathlab/abelian.hpp"
#include "wreathlab/shield.hpp"

namespace wreathlab {

/// Factor multiplicity in an abelian group spec: a finite count or the
/// distinguished countably-infinite token. No arithmetic is defined on the
/// infinite value; the only meaningful question is "is it infinite".
struct Multiplicity {
  bool infinite = false;
  BigInt count = 0;  // meaningful only when !infinite

  static Multiplicity inf() { return {true, 0}; }
  static Multiplicity of(BigInt n) { return {false, std::move(n)}; }

  bool operator==(const Multiplicity&) const = default;

  std::string to_string() const { return infinite ? "inf" : count.str(); }
};

/// An abelian p-group of finite exponent in factored form, where each
/// cyclic-factor multiplicity may be countably infinite. Finitely many
/// distinct exponents (the exponent p^v bounds them); canonical form drops
/// zero-count entries.
class AbelianGroupSpec {
 public:
  using FactorMap = std::map<unsigned, Multiplicity>;

  static AbelianGroupSpec from_factors(std::uint64_t p, FactorMap factors);
  static AbelianGroupSpec from_finite(const AbelianPGroup& g);

  std::uint64_t prime() const { return p_; }
  const FactorMap& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const;

  /// Maximal factor exponent v (0 for the trivial spec).
  unsigned exponent_v() const;

  /// The finite group this spec describes; errors if any multiplicity is
  /// infinite.
  AbelianPGroup to_finite() const;

  bool operator==(const AbelianGroupSpec&) const = default;

  std::string to_string() const;

 private:
  AbelianGroupSpec(std::uint64_t p, FactorMap factors) : p_(p), factors_(std::move(factors)) {}

  std::uint64_t p_;
  FactorMap factors_;
};

/// Whether B contains a direct product of countably many copies of
/// C_{p^v}, v the exponent parameter of B — equivalently, whether the
/// multiplicity at the top exponent is infinite. Factors of lower exponent
/// are of no consequence. Errors on the trivial spec.
bool contains_top_layer_infinity(const AbelianGroupSpec& b);

/// Outcome of the decision procedure for "A Wr B generates var(A)var(B)",
/// with the data the explanation rests on.
struct VarietyDecision {
  bool generates;             // the decision itself
  unsigned v;                 // exponent parameter of B
  Multiplicity top;           // multiplicity of C_{p^v} factors in B
  std::string explanation;
};

/// Decide whether A Wr B generates the product variety var(A)var(B), for a
/// non-trivial nilpotent p-group A of finite exponent (given by profile)
/// and a non-trivial abelian p-group B of finite exponent (given by spec).
/// The answer depends on A only through the validated preconditions.
VarietyDecision decide_generates_product_variety(const ActiveProfile& a,
                                                 const AbelianGroupSpec& b);

}  // namespace wreathlab
