#include <doctest.h>

#include <vector>

#include "wreathlab/error.hpp"
#include "wreathlab/kp.hpp"

using namespace wreathlab;

namespace {
const AbelianPGroup kG1(5, {3, 1, 1});  // C_125 x C_5 x C_5, order 3125
}

TEST_CASE("kp: term values for the order-3125 group") {
  CHECK(kp_term(kG1, 1) == kG1);
  CHECK(kp_term(kG1, 2) == AbelianPGroup(5, {2}));    // C_25
  CHECK(kp_term(kG1, 5) == AbelianPGroup(5, {2}));
  CHECK(kp_term(kG1, 6) == AbelianPGroup(5, {1}));    // C_5
  CHECK(kp_term(kG1, 25) == AbelianPGroup(5, {1}));
  CHECK(kp_term(kG1, 26).is_trivial());
  CHECK(kp_term(kG1, 1000000).is_trivial());
  CHECK_THROWS_AS(kp_term(kG1, 0), DomainError);
}

TEST_CASE("kp: terms are constant on (p^k, p^{k+1}]") {
  AbelianPGroup g(3, {4, 2, 1});
  for (unsigned k = 0; k <= 5; ++k) {
    BigInt lo = pow_big(3, k) + 1;
    BigInt hi = pow_big(3, k + 1);
    CHECK(kp_term(g, lo) == kp_term(g, hi));
    CHECK(kp_term(g, lo) == g.power_subgroup(k + 1));
  }
}

TEST_CASE("kp: d parameter") {
  CHECK(kp_d(kG1) == 25);
  CHECK(kp_d(AbelianPGroup(2, {1})) == 1);
  CHECK(kp_d(AbelianPGroup(2, {2, 1})) == 2);
  CHECK(kp_d(AbelianPGroup(2, {4})) == 8);
  CHECK_THROWS_AS(kp_d(AbelianPGroup::trivial(2)), DomainError);
}

TEST_CASE("kp: shield parameters") {
  SUBCASE("order-3125 group") {
    ShieldParams sp = shield_params(kG1);
    CHECK(sp.d == 25);
    CHECK(sp.e.size() == 3);
    CHECK(sp.e.at(1) == 3);
    CHECK(sp.e.at(5) == 1);
    CHECK(sp.e.at(25) == 1);
    CHECK(sp.a == 133);
    CHECK(sp.b == 100);
  }
  SUBCASE("C_2") {
    ShieldParams sp = shield_params(AbelianPGroup(2, {1}));
    CHECK(sp.d == 1);
    CHECK(sp.e == std::map<BigInt, BigInt>{{1, 1}});
    CHECK(sp.a == 2);
    CHECK(sp.b == 1);
  }
  SUBCASE("C_4 x C_2") {
    ShieldParams sp = shield_params(AbelianPGroup(2, {2, 1}));
    CHECK(sp.d == 2);
    CHECK(sp.e == std::map<BigInt, BigInt>{{1, 2}, {2, 1}});
    CHECK(sp.a == 5);
    CHECK(sp.b == 2);
  }
  SUBCASE("C_4") {
    ShieldParams sp = shield_params(AbelianPGroup(2, {2}));
    CHECK(sp.e == std::map<BigInt, BigInt>{{1, 1}, {2, 1}});
    CHECK(sp.a == 4);
    CHECK(sp.b == 2);
  }
}

TEST_CASE("kp: sum of e values equals log order") {
  std::vector<AbelianPGroup> samples = {
      kG1,
      AbelianPGroup(2, {1}),
      AbelianPGroup(2, {2, 1}),
      AbelianPGroup(2, {5, 3, 3, 1}),
      AbelianPGroup(3, {4, 2, 2, 1, 1}),
      AbelianPGroup(7, {2, 2}),
  };
  for (const auto& g : samples) {
    ShieldParams sp = shield_params(g);
    BigInt total = 0;
    for (const auto& [s, e] : sp.e) total += e;
    CHECK(total == g.log_order());
    // a and b recomputed from the definition.
    BigInt a = 1;
    for (const auto& [s, e] : sp.e) a += (g.prime() - 1) * s * e;
    CHECK(sp.a == a);
    CHECK(sp.b == (g.prime() - 1) * sp.d);
  }
}

TEST_CASE("kp: run-length sequence for the order-3125 group") {
  std::vector<KpRun> runs = kp_sequence(kG1);
  REQUIRE(runs.size() == 4);
  CHECK(runs[0].first == 1);
  CHECK(runs[0].last == 1);
  CHECK(runs[0].term == kG1);
  CHECK(runs[1].first == 2);
  CHECK(runs[1].last == 5);
  CHECK(runs[1].term == AbelianPGroup(5, {2}));
  CHECK(runs[2].first == 6);
  CHECK(runs[2].last == 25);
  CHECK(runs[2].term == AbelianPGroup(5, {1}));
  CHECK(runs[3].first == 26);
  CHECK(runs[3].last == 26);
  CHECK(runs[3].term.is_trivial());
}

TEST_CASE("kp: sequence edge cases") {
  SUBCASE("trivial group") {
    std::vector<KpRun> runs = kp_sequence(AbelianPGroup::trivial(3));
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].first == 1);
    CHECK(runs[0].last == 1);
    CHECK(runs[0].term.is_trivial());
  }
  SUBCASE("C_4") {
    std::vector<KpRun> runs = kp_sequence(AbelianPGroup(2, {2}));
    REQUIRE(runs.size() == 3);
    CHECK(runs[0].term == AbelianPGroup(2, {2}));
    CHECK(runs[1].first == 2);
    CHECK(runs[1].last == 2);
    CHECK(runs[1].term == AbelianPGroup(2, {1}));
    CHECK(runs[2].first == 3);
    CHECK(runs[2].last == 3);
    CHECK(runs[2].term.is_trivial());
  }
  SUBCASE("elementary abelian: trivial immediately after index p^0") {
    std::vector<KpRun> runs = kp_sequence(AbelianPGroup(3, {1, 1}));
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].last == 1);
    CHECK(runs[1].first == 2);
    CHECK(runs[1].term.is_trivial());
  }
}

TEST_CASE("kp: sequence runs agree with kp_term at every boundary") {
  for (const auto& g : {AbelianPGroup(2, {3, 1, 1}), AbelianPGroup(3, {2, 2})}) {
    for (const KpRun& run : kp_sequence(g)) {
      CHECK(kp_term(g, run.first) == run.term);
      CHECK(kp_term(g, run.last) == run.term);
    }
  }
}
