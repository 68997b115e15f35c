#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wreathlab/oracle/kernels.hpp"

using namespace wreathlab::oracle::kernels;

namespace {

struct Batch {
  std::vector<std::uint32_t> a, b, m;
};

// Random reduced inputs over a mix of small and near-maximal lane moduli.
Batch random_batch(std::mt19937_64& rng, std::size_t n) {
  static const std::uint32_t pool[] = {1u,          2u,           3u,       4u,
                                       5u,          8u,           1024u,    65537u,
                                       0x7fffffffu, 0x80000000u};  // up to 2^31
  Batch out;
  out.a.resize(n);
  out.b.resize(n);
  out.m.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t m = pool[rng() % (sizeof(pool) / sizeof(pool[0]))];
    out.m[i] = m;
    out.a[i] = static_cast<std::uint32_t>(rng() % m);
    out.b[i] = static_cast<std::uint32_t>(rng() % m);
  }
  return out;
}

}  // namespace

TEST_CASE("kernels: variant registry") {
  const auto& all = available_ops();
  REQUIRE(!all.empty());
  CHECK(std::string(all.front()->name) == "scalar");
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      CHECK(std::string(all[i]->name) != std::string(all[j]->name));
    }
  }
  // The active variant is one of the registered ones.
  bool found = false;
  for (const Ops* ops : all) {
    if (ops == &active_ops()) found = true;
  }
  CHECK(found);
}

TEST_CASE("kernels: scalar reference is exact") {
  const Ops& ops = scalar_ops();
  std::uint32_t a[] = {0, 1, 6, 0x7ffffffe};
  std::uint32_t b[] = {0, 1, 6, 0x7ffffffe};
  std::uint32_t m[] = {1, 2, 7, 0x7fffffff};
  std::uint32_t out[4];

  ops.add_mod(a, b, m, out, 4);
  CHECK(out[0] == 0);
  CHECK(out[1] == 0);
  CHECK(out[2] == 5);
  CHECK(out[3] == 0x7ffffffd);

  ops.neg_mod(a, m, out, 4);
  CHECK(out[0] == 0);
  CHECK(out[1] == 1);
  CHECK(out[2] == 1);
  CHECK(out[3] == 1);

  ops.scale_mod(a, 3, m, out, 4);
  CHECK(out[0] == 0);
  CHECK(out[1] == 1);
  CHECK(out[2] == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    // Cross-check against 64-bit arithmetic (products stay below 2^62).
    CHECK(out[i] == static_cast<std::uint32_t>((std::uint64_t{a[i]} * 3) % m[i]));
  }
}

TEST_CASE("kernels: every variant matches scalar on random batches") {
  std::mt19937_64 rng(0xBADC0FFEu);
  const std::size_t lengths[] = {0, 1, 3, 7, 8, 9, 16, 33, 64, 257};
  const std::uint64_t scales[] = {0, 1, 2, 3, 31, 1u << 20, 0x123456789abcdefull,
                                  ~std::uint64_t{0}};

  for (const Ops* ops : available_ops()) {
    CAPTURE(ops->name);
    for (std::size_t n : lengths) {
      for (int rep = 0; rep < 8; ++rep) {
        Batch batch = random_batch(rng, n);
        std::vector<std::uint32_t> want(n), got(n);

        scalar_ops().add_mod(batch.a.data(), batch.b.data(), batch.m.data(), want.data(), n);
        ops->add_mod(batch.a.data(), batch.b.data(), batch.m.data(), got.data(), n);
        CHECK(want == got);

        scalar_ops().neg_mod(batch.a.data(), batch.m.data(), want.data(), n);
        ops->neg_mod(batch.a.data(), batch.m.data(), got.data(), n);
        CHECK(want == got);

        for (std::uint64_t k : scales) {
          scalar_ops().scale_mod(batch.a.data(), k, batch.m.data(), want.data(), n);
          ops->scale_mod(batch.a.data(), k, batch.m.data(), got.data(), n);
          CHECK(want == got);
        }
      }
    }
  }
}

TEST_CASE("kernels: aliasing out with an input is allowed") {
  std::mt19937_64 rng(0x5eedu);
  for (const Ops* ops : available_ops()) {
    CAPTURE(ops->name);
    for (std::size_t n : {1u, 9u, 40u}) {
      Batch batch = random_batch(rng, n);
      std::vector<std::uint32_t> want(n);
      scalar_ops().add_mod(batch.a.data(), batch.b.data(), batch.m.data(), want.data(), n);

      auto a1 = batch.a;
      ops->add_mod(a1.data(), batch.b.data(), batch.m.data(), a1.data(), n);  // out == a
      CHECK(a1 == want);

      auto b1 = batch.b;
      ops->add_mod(batch.a.data(), b1.data(), batch.m.data(), b1.data(), n);  // out == b
      CHECK(b1 == want);

      scalar_ops().neg_mod(batch.a.data(), batch.m.data(), want.data(), n);
      auto a2 = batch.a;
      ops->neg_mod(a2.data(), batch.m.data(), a2.data(), n);
      CHECK(a2 == want);

      scalar_ops().scale_mod(batch.a.data(), 12345, batch.m.data(), want.data(), n);
      auto a3 = batch.a;
      ops->scale_mod(a3.data(), 12345, batch.m.data(), a3.data(), n);
      CHECK(a3 == want);
    }
  }
}
