#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreathlab/abelian.hpp"
#include "wreathlab/bigint.hpp"
#include "wreathlab/kp.hpp"

namespace wreathlab {

/// The data of a nilpotent p-group A of finite exponent that enters the
/// wreath-product class formula: the prime p, the nilpotency class c, and
/// the exponents s(1..c) where p^{s(h)} = exp(gamma_h(A)).
///
/// s is non-increasing with s(c) >= 1; s(1) is the exponent of A itself and
/// s(c) is the exponent parameter of the last non-trivial term. Cartesian
/// powers of A share the same profile, so no cardinality is represented.
class ActiveProfile {
 public:
  ActiveProfile(std::uint64_t p, std::vector<unsigned> s);

  std::uint64_t prime() const { return p_; }
  unsigned cls() const { return static_cast<unsigned>(s_.size()); }
  const std::vector<unsigned>& s() const { return s_; }
  unsigned s_at(unsigned h) const { return s_.at(h - 1); }  // 1-based
  unsigned alpha() const { return s_.back(); }              // s(c)

  /// Profile shared by the dihedral and quaternion groups of order 8:
  /// class 2, exponent 4, second term of exponent 2.
  static ActiveProfile d4();
  static ActiveProfile q8();

  /// Constant profile s(h) = alpha for all h; the minimal profile
  /// consistent with a given (c, alpha) pair.
  static ActiveProfile constant(std::uint64_t p, unsigned c, unsigned alpha);

  bool operator==(const ActiveProfile&) const = default;

  std::string to_string() const;

 private:
  std::uint64_t p_;
  std::vector<unsigned> s_;
};

/// Nilpotency criterion for a wreath product A Wr B: with both factors
/// non-trivial it is nilpotent iff A is a nilpotent p-group of finite
/// exponent and B is a finite p-group over the same prime. A trivial factor
/// collapses the wreath product onto the other group, which here is always
/// nilpotent (profiles are nilpotent by construction, B is abelian).
///
/// `a` is absent when A is trivial; `a_exp_finite` / `b_finite` assert
/// finite exponent of A resp. finiteness of B for the actual groups the
/// symbolic data stands for.
bool baumslag_nilpotent(const std::optional<ActiveProfile>& a, bool a_exp_finite,
                        const AbelianPGroup& b, bool b_finite);

/// Nilpotency class of A Wr B for non-trivial finite abelian B:
///   max over h = 1..c of  a*h + (s(h)-1)*b
/// with (a, b) the parameters of B. Requires matching primes.
BigInt shield_class(const ActiveProfile& a, const AbelianPGroup& b);

/// The largest h attaining the maximum above. Ties are resolved toward the
/// larger h, so a maximum attained at h = c reports c even when shared.
unsigned shield_argmax(const ActiveProfile& a, const AbelianPGroup& b);

/// Z(l,t): l factors C_{p^v} times t-l factors C_{p^{v-1}} (1 <= l <= t).
/// For v = 1 the trivial second-layer factors are dropped.
AbelianPGroup z_group(std::uint64_t p, unsigned v, const BigInt& l, const BigInt& t);

/// Y(z,t): t-z factors C_{p^v} (t > z >= 1).
AbelianPGroup y_group(std::uint64_t p, unsigned v, const BigInt& z, const BigInt& t);

/// Inputs of the closed-form class values for the Z and Y families.
/// lemma1_class reads (c, alpha, p, v, l, t); lemma2_class reads
/// (c, alpha, p, v, z, t).
struct LemmaInputs {
  unsigned c = 1;
  unsigned alpha = 1;
  std::uint64_t p = 2;
  unsigned v = 1;
  BigInt l = 1;
  BigInt z = 1;
  BigInt t = 1;
};

/// Class of A^beta Wr Z(l,t) for t at or beyond the stabilization
/// threshold t0:
///   c + c*(p-1)*(t*(1 + p + ... + p^{v-2}) + l*p^{v-1}) + (alpha-1)*(p-1)*p^{v-1}.
/// Geometric sums are expanded exactly; the v = 1 sum is empty.
BigInt lemma1_class(const LemmaInputs& in);

/// Class of a z-generator group wreathed with Y(z,t) for t at or beyond t1:
///   c + c*(t-z)*(p-1)*(1 + p + ... + p^{v-1}) + (alpha-1)*(p-1)*p^{v-1}.
BigInt lemma2_class(const LemmaInputs& in);

/// Minimal t >= l such that the class maximum for A Wr Z(l,t) is attained
/// at h = c; the property persists for all larger t. For v = 1 the group
/// Z(l,t) = C_p^l does not depend on t, so the threshold exists only if
/// the maximum already sits at c; otherwise a ThresholdError is raised.
BigInt t0_threshold(const ActiveProfile& a, unsigned v, const BigInt& l);

/// Minimal t > z such that the class maximum for A Wr Y(z,t) is attained
/// at h = c. Always exists: the parameter a grows strictly with t.
BigInt t1_threshold(const ActiveProfile& a, unsigned v, const BigInt& z);

/// Minimal t* >= max(t0, t1, l, z+1) such that
/// lemma2_class(t) > lemma1_class(t) for every t > t*. Solved exactly from
/// the linear-in-t comparison of the two closed forms.
BigInt crossover_tstar(const ActiveProfile& a, unsigned v, const BigInt& l, const BigInt& z);

}  // namespace wreathlab
