#include "wreathlab/oracle/kernels.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__aarch64__) || defined(__ARM_NEON)
#include <arm_neon.h>
#define WREATHLAB_HAVE_NEON 1
#endif

namespace wreathlab::oracle::kernels {

#if defined(WREATHLAB_HAVE_AVX2)
const Ops& avx2_ops();  // defined in kernels_avx2.cpp
#endif

namespace {

void add_mod_scalar(const std::uint32_t* a, const std::uint32_t* b, const std::uint32_t* m,
                    std::uint32_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t s = a[i] + b[i];
    out[i] = s >= m[i] ? s - m[i] : s;
  }
}

void neg_mod_scalar(const std::uint32_t* a, const std::uint32_t* m, std::uint32_t* out,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a[i] == 0 ? 0 : m[i] - a[i];
  }
}

void scale_mod_scalar(const std::uint32_t* a, std::uint64_t k, const std::uint32_t* m,
                      std::uint32_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::uint32_t>((a[i] * (k % m[i])) % m[i]);
  }
}

constexpr Ops kScalar{"scalar", add_mod_scalar, neg_mod_scalar, scale_mod_scalar};

#if defined(WREATHLAB_HAVE_NEON)

// NEON lanes: residues fit u32; (a+b) mod m via the unsigned-min trick,
// valid because m <= 2^31 keeps the wrapped difference above m.
void add_mod_neon(const std::uint32_t* a, const std::uint32_t* b, const std::uint32_t* m,
                  std::uint32_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t va = vld1q_u32(a + i);
    uint32x4_t vb = vld1q_u32(b + i);
    uint32x4_t vm = vld1q_u32(m + i);
    uint32x4_t s = vaddq_u32(va, vb);
    uint32x4_t r = vminq_u32(s, vsubq_u32(s, vm));
    vst1q_u32(out + i, r);
  }
  add_mod_scalar(a + i, b + i, m + i, out + i, n - i);
}

void neg_mod_neon(const std::uint32_t* a, const std::uint32_t* m, std::uint32_t* out,
                  std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t va = vld1q_u32(a + i);
    uint32x4_t vm = vld1q_u32(m + i);
    uint32x4_t d = vsubq_u32(vm, va);
    uint32x4_t r = vminq_u32(d, vsubq_u32(d, vm));  // a==0 lane: min(m, 0) = 0
    vst1q_u32(out + i, r);
  }
  neg_mod_scalar(a + i, m + i, out + i, n - i);
}

// Double-and-add over the vector add; exact for any k without per-lane
// division.
void scale_mod_neon(const std::uint32_t* a, std::uint64_t k, const std::uint32_t* m,
                    std::uint32_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t vm = vld1q_u32(m + i);
    uint32x4_t acc = vdupq_n_u32(0);
    uint32x4_t addend = vld1q_u32(a + i);
    std::uint64_t bits = k;
    while (bits) {
      if (bits & 1) {
        uint32x4_t s = vaddq_u32(acc, addend);
        acc = vminq_u32(s, vsubq_u32(s, vm));
      }
      bits >>= 1;
      if (bits) {
        uint32x4_t d = vaddq_u32(addend, addend);
        addend = vminq_u32(d, vsubq_u32(d, vm));
      }
    }
    vst1q_u32(out + i, acc);
  }
  scale_mod_scalar(a + i, k, m + i, out + i, n - i);
}

constexpr Ops kNeon{"neon", add_mod_neon, neg_mod_neon, scale_mod_neon};

#endif  // WREATHLAB_HAVE_NEON

bool cpu_has_avx2() {
#if defined(WREATHLAB_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::vector<const Ops*> collect_available() {
  std::vector<const Ops*> v{&kScalar};
#if defined(WREATHLAB_HAVE_AVX2)
  if (cpu_has_avx2()) v.push_back(&avx2_ops());
#endif
#if defined(WREATHLAB_HAVE_NEON)
  v.push_back(&kNeon);
#endif
  return v;
}

const Ops* select_active() {
  const auto& avail = available_ops();
  if (const char* want = std::getenv("WREATHLAB_KERNEL")) {
    for (const Ops* ops : avail) {
      if (std::strcmp(ops->name, want) == 0) return ops;
    }
    // Unknown name: fall through to the default rather than fail hard.
  }
  return avail.back();
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

const std::vector<const Ops*>& available_ops() {
  static const std::vector<const Ops*> avail = collect_available();
  return avail;
}

const Ops& active_ops() {
  static const Ops* active = select_active();
  return *active;
}

}  // namespace wreathlab::oracle::kernels
