#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wreathlab::oracle::kernels {

/// Lane-wise modular arithmetic on digit vectors. These are the inner loops
/// of every explicit-group multiplication: an element of a direct product
/// or wreath-product base is a vector of residues with a per-lane modulus.
///
/// Contract for all kernels: m[i] >= 1, inputs reduced (a[i], b[i] < m[i]),
/// m[i] <= 2^31 so a lane sum never wraps. `out` may alias `a` or `b`.
struct Ops {
  const char* name;

  /// out[i] = (a[i] + b[i]) mod m[i]
  void (*add_mod)(const std::uint32_t* a, const std::uint32_t* b, const std::uint32_t* m,
                  std::uint32_t* out, std::size_t n);

  /// out[i] = (m[i] - a[i]) mod m[i]
  void (*neg_mod)(const std::uint32_t* a, const std::uint32_t* m, std::uint32_t* out,
                  std::size_t n);

  /// out[i] = (a[i] * k) mod m[i]
  void (*scale_mod)(const std::uint32_t* a, std::uint64_t k, const std::uint32_t* m,
                    std::uint32_t* out, std::size_t n);
};

/// Portable reference implementation; always available, the equivalence
/// baseline for every other variant.
const Ops& scalar_ops();

/// All variants usable on this machine (scalar first). SIMD variants are
/// included only when both compiled in and supported by the running CPU.
const std::vector<const Ops*>& available_ops();

/// The variant selected for actual computation: the last usable entry of
/// available_ops(), unless the WREATHLAB_KERNEL environment variable names
/// a specific one ("scalar", "avx2", "neon"). Resolved once per process.
const Ops& active_ops();

}  // namespace wreathlab::oracle::kernels
