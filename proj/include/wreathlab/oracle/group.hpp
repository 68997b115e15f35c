#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wreathlab/abelian.hpp"

namespace wreathlab::oracle {

/// One coordinate of an element encoding; value < its radix.
using Digit = std::uint32_t;

/// Canonical fixed-width element encoding: mixed-radix packing of the digit
/// vector. Codes are dense in [0, order), identity is always 0, and element
/// sets are sortable and hashable deterministically.
using Code = std::uint64_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Default cap on elements an explicit construction may touch.
inline constexpr std::uint64_t kDefaultSizeLimit = std::uint64_t{1} << 20;

/// An explicit finite group: an enumerable element universe (codes
/// 0..order-1) with multiplication and inversion on digit vectors.
/// Instances are immutable and safe to share across threads; the hot-path
/// operations use only stack scratch, bounded by kMaxDigits.
class FiniteGroup {
 public:
  /// Hard cap on digits per element so hot paths can run on stack buffers.
  /// Any group within the size limits stays far below it.
  static constexpr std::size_t kMaxDigits = 64;

  virtual ~FiniteGroup() = default;
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  std::uint64_t order() const { return order_; }
  std::size_t digit_count() const { return radices_.size(); }
  const std::vector<Digit>& radices() const { return radices_; }
  bool abelian() const { return abelian_; }

  /// True when multiplication is digit-wise addition modulo the radix
  /// (cyclic groups and their direct products). Enables the vector kernels
  /// and the linear power fast path.
  bool coordinatewise() const { return coordinatewise_; }

  const std::string& name() const { return name_; }

  /// A generating set as codes (identity excluded; empty for the trivial
  /// group).
  const std::vector<Code>& generators() const { return generators_; }

  /// out = a * b. `out` may alias `a` or `b`.
  virtual void mul(const Digit* a, const Digit* b, Digit* out) const = 0;

  /// out = a^{-1}. `out` may alias `a`.
  virtual void inv(const Digit* a, Digit* out) const = 0;

  void decode(Code c, Digit* out) const;
  Code encode(const Digit* d) const;

  static constexpr Code identity = 0;

  Code mul_code(Code a, Code b) const;
  Code inv_code(Code a) const;
  Code conj_code(Code a, Code g) const;  // g^{-1} a g
  Code comm_code(Code a, Code b) const;  // a^{-1} b^{-1} a b
  Code pow_code(Code a, std::uint64_t k) const;
  std::uint64_t element_order(Code a) const;

 protected:
  FiniteGroup(std::string name, std::vector<Digit> radices, bool abelian, bool coordinatewise);

  void set_generators(std::vector<Code> gens) { generators_ = std::move(gens); }

  std::string name_;
  std::vector<Digit> radices_;
  std::vector<std::uint64_t> strides_;  // strides_[i] = product of radices before i
  std::uint64_t order_;
  bool abelian_;
  bool coordinatewise_;
  std::vector<Code> generators_;
};

/// C_n in additive representation. n = 1 gives the trivial group (no
/// digits); n must stay within the kernel radix bound 2^31.
GroupPtr cyclic(std::uint64_t n);

/// The trivial group (alias for cyclic(1)).
GroupPtr trivial_group();

/// Dihedral group of order 8 as a multiplication table.
GroupPtr d4_group();

/// Quaternion group of order 8 as a multiplication table.
GroupPtr q8_group();

/// Direct product; digit vectors concatenate in factor order.
GroupPtr direct_product_group(std::vector<GroupPtr> factors,
                              std::uint64_t size_limit = kDefaultSizeLimit);

/// A Wr B with B acting on coordinates by right translation: elements are
/// (f: B -> A, b) stored as |B| base blocks (indexed by the codes of B)
/// followed by the digits of b;
///   (f1, b1)(f2, b2) = (x -> f1(x) * f2(x * b1), b1 * b2).
/// Errors with SizeLimitError when |A|^|B| * |B| exceeds the size limit,
/// reporting the required size.
GroupPtr wreath_product(const GroupPtr& a, const GroupPtr& b,
                        std::uint64_t size_limit = kDefaultSizeLimit);

/// Explicit realization of a finite abelian p-group as a direct product of
/// cyclic factors, ordered by descending exponent.
GroupPtr abelian_explicit(const AbelianPGroup& g, std::uint64_t size_limit = kDefaultSizeLimit);

}  // namespace wreathlab::oracle
