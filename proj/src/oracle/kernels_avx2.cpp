// AVX2 variants of the digit-vector kernels. This file is the only one
// compiled with -mavx2; callers reach it through the runtime dispatch in
// kernels.cpp after a cpuid check.

#include <immintrin.h>

#include "wreathlab/oracle/kernels.hpp"

namespace wreathlab::oracle::kernels {

namespace {

// (a + b) mod m as min(s, s - m) on unsigned lanes: for reduced inputs and
// m <= 2^31 the wrapped difference exceeds m exactly when s < m.
inline __m256i reduce_sum(__m256i s, __m256i m) {
  return _mm256_min_epu32(s, _mm256_sub_epi32(s, m));
}

void add_mod_avx2(const std::uint32_t* a, const std::uint32_t* b, const std::uint32_t* m,
                  std::uint32_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    __m256i r = reduce_sum(_mm256_add_epi32(va, vb), vm);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  for (; i < n; ++i) {
    std::uint32_t s = a[i] + b[i];
    out[i] = s >= m[i] ? s - m[i] : s;
  }
}

void neg_mod_avx2(const std::uint32_t* a, const std::uint32_t* m, std::uint32_t* out,
                  std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    __m256i d = _mm256_sub_epi32(vm, va);
    __m256i r = _mm256_min_epu32(d, _mm256_sub_epi32(d, vm));  // a==0 lane -> 0
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  for (; i < n; ++i) out[i] = a[i] == 0 ? 0 : m[i] - a[i];
}

// Double-and-add on the reduced lanes; exact for any 64-bit k and free of
// per-lane division.
void scale_mod_avx2(const std::uint32_t* a, std::uint64_t k, const std::uint32_t* m,
                    std::uint32_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    __m256i acc = _mm256_setzero_si256();
    __m256i addend = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    std::uint64_t bits = k;
    while (bits) {
      if (bits & 1) acc = reduce_sum(_mm256_add_epi32(acc, addend), vm);
      bits >>= 1;
      if (bits) addend = reduce_sum(_mm256_add_epi32(addend, addend), vm);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::uint32_t>((a[i] * (k % m[i])) % m[i]);
  }
}

const Ops kAvx2{"avx2", add_mod_avx2, neg_mod_avx2, scale_mod_avx2};

}  // namespace

const Ops& avx2_ops() { return kAvx2; }

}  // namespace wreathlab::oracle::kernels
