#include <doctest.h>

#include <optional>

#include "wreathlab/error.hpp"
#include "wreathlab/shield.hpp"

using namespace wreathlab;

TEST_CASE("profile: validation and display") {
  ActiveProfile prof(2, {3, 2, 2, 1});
  CHECK(prof.cls() == 4);
  CHECK(prof.s_at(1) == 3);
  CHECK(prof.s_at(4) == 1);
  CHECK(prof.alpha() == 1);
  CHECK(prof.to_string() == "p=2 c=4 s=3,2,2,1");

  CHECK(ActiveProfile::d4() == ActiveProfile(2, {2, 1}));
  CHECK(ActiveProfile::q8() == ActiveProfile::d4());
  CHECK(ActiveProfile::constant(3, 2, 1) == ActiveProfile(3, {1, 1}));

  CHECK_THROWS_AS(ActiveProfile(2, {}), DomainError);
  CHECK_THROWS_AS(ActiveProfile(2, {1, 2}), DomainError);  // increasing
  CHECK_THROWS_AS(ActiveProfile(2, {1, 0}), DomainError);  // zero stage
  CHECK_THROWS_AS(ActiveProfile(6, {1}), DomainError);     // p not prime
  CHECK_THROWS_AS(ActiveProfile::constant(2, 0, 1), DomainError);
}

TEST_CASE("baumslag: nilpotency criterion") {
  const AbelianPGroup b2(2, {1});
  const AbelianPGroup b3(3, {1});
  const AbelianPGroup triv = AbelianPGroup::trivial(2);
  const std::optional<ActiveProfile> a2 = ActiveProfile::constant(2, 1, 1);

  CHECK(baumslag_nilpotent(std::nullopt, true, b2, true));    // trivial A
  CHECK(baumslag_nilpotent(std::nullopt, false, b2, false));
  CHECK(baumslag_nilpotent(a2, true, triv, true));            // trivial B
  CHECK(baumslag_nilpotent(a2, true, triv, false));
  CHECK(baumslag_nilpotent(a2, true, b2, true));              // same prime
  CHECK(!baumslag_nilpotent(a2, true, b3, true));             // prime mismatch
  CHECK(!baumslag_nilpotent(a2, false, b2, true));            // exp(A) infinite
  CHECK(!baumslag_nilpotent(a2, true, b2, false));            // B infinite
}

TEST_CASE("shield class: known values") {
  CHECK(shield_class(ActiveProfile::constant(2, 1, 1), AbelianPGroup(2, {1})) == 2);
  CHECK(shield_class(ActiveProfile::constant(3, 1, 1), AbelianPGroup(3, {1})) == 3);
  CHECK(shield_class(ActiveProfile::constant(2, 1, 1), AbelianPGroup(2, {2})) == 4);
  // Order-3125 passive group, active factor of exponent 25: a=133, b=100.
  CHECK(shield_class(ActiveProfile::constant(5, 1, 2), AbelianPGroup(5, {3, 1, 1})) == 233);
  // D4-profile active factor over C_2: max(2+1, 4+0) = 4.
  CHECK(shield_class(ActiveProfile::d4(), AbelianPGroup(2, {1})) == 4);
}

TEST_CASE("shield class: input validation") {
  CHECK_THROWS_AS(shield_class(ActiveProfile::d4(), AbelianPGroup(3, {1})), DomainError);
  CHECK_THROWS_AS(shield_class(ActiveProfile::d4(), AbelianPGroup::trivial(2)), DomainError);
  CHECK_THROWS_AS(shield_argmax(ActiveProfile::d4(), AbelianPGroup::trivial(2)), DomainError);
}

TEST_CASE("shield argmax: ties resolve to the larger h") {
  // Profile (c=2, s=(3,1)) over C_2: both h give the value 4.
  ActiveProfile prof(2, {3, 1});
  AbelianPGroup b(2, {1});
  CHECK(shield_class(prof, b) == 4);
  CHECK(shield_argmax(prof, b) == 2);
  // Non-tied cases for contrast.
  CHECK(shield_argmax(ActiveProfile::constant(2, 1, 1), b) == 1);
  CHECK(shield_argmax(ActiveProfile(2, {4, 1}), AbelianPGroup(2, {2, 1})) == 1);
}

TEST_CASE("shield class: appending passive factors never decreases the value") {
  const ActiveProfile profs[] = {ActiveProfile::d4(), ActiveProfile(2, {4, 2, 1}),
                                 ActiveProfile::constant(2, 3, 2)};
  const AbelianPGroup bases[] = {AbelianPGroup(2, {1}), AbelianPGroup(2, {2, 1}),
                                 AbelianPGroup(2, {3})};
  for (const auto& prof : profs) {
    for (const auto& base : bases) {
      BigInt before = shield_class(prof, base);
      for (unsigned e = 1; e <= 4; ++e) {
        BigInt after = shield_class(prof, direct_product(base, AbelianPGroup(2, {e})));
        CHECK(after >= before);
      }
    }
  }
}

TEST_CASE("families: Z(l,t)") {
  CHECK(z_group(2, 2, 1, 2) == AbelianPGroup(2, {2, 1}));
  CHECK(z_group(5, 3, 1, 3) == AbelianPGroup(5, {3, 2, 2}));
  CHECK(z_group(2, 1, 2, 5) == AbelianPGroup(2, {1, 1}));  // v=1 drops lower layer
  CHECK(z_group(2, 2, 3, 3) == AbelianPGroup(2, {2, 2, 2}));
  CHECK_THROWS_AS(z_group(2, 0, 1, 1), DomainError);
  CHECK_THROWS_AS(z_group(2, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(z_group(2, 2, 3, 2), DomainError);  // l > t
}

TEST_CASE("families: Y(z,t)") {
  CHECK(y_group(2, 2, 1, 3) == AbelianPGroup(2, {2, 2}));
  CHECK(y_group(2, 2, 1, 2) == AbelianPGroup(2, {2}));
  CHECK(y_group(5, 3, 2, 4) == AbelianPGroup(5, {3, 3}));
  CHECK_THROWS_AS(y_group(2, 0, 1, 2), DomainError);
  CHECK_THROWS_AS(y_group(2, 2, 0, 2), DomainError);
  CHECK_THROWS_AS(y_group(2, 2, 2, 2), DomainError);  // t <= z
}

TEST_CASE("closed form: first family values") {
  CHECK(lemma1_class({1, 2, 2, 2, 1, 1, 2}) == 7);   // c=1 a=2 p=2 v=2 l=1 t=2
  CHECK(lemma1_class({1, 2, 5, 1, 3, 1, 3}) == 17);  // c=1 a=2 p=5 v=1 l=3 t=3
  for (unsigned t = 1; t <= 5; ++t) {
    // v=1, alpha=1: value is 1 + l independent of t.
    CHECK(lemma1_class({1, 1, 2, 1, t, 1, t}) == 1 + t);
  }
  CHECK_THROWS_AS(lemma1_class({1, 1, 2, 1, 3, 1, 2}), DomainError);  // l > t
  CHECK_THROWS_AS(lemma1_class({0, 1, 2, 1, 1, 1, 1}), DomainError);  // c = 0
  CHECK_THROWS_AS(lemma1_class({1, 1, 2, 0, 1, 1, 1}), DomainError);  // v = 0
}

TEST_CASE("closed form: second family values") {
  CHECK(lemma2_class({1, 2, 2, 2, 1, 1, 3}) == 9);  // c=1 a=2 p=2 v=2 z=1 t=3
  CHECK(lemma2_class({1, 1, 2, 1, 1, 1, 2}) == 2);
  CHECK(lemma2_class({2, 1, 2, 1, 1, 1, 2}) == 4);
  CHECK_THROWS_AS(lemma2_class({1, 1, 2, 1, 1, 2, 2}), DomainError);  // t <= z
}

TEST_CASE("closed forms match the general formula on their families") {
  struct Case {
    ActiveProfile prof;
    unsigned v;
  };
  const Case cases[] = {
      {ActiveProfile::constant(2, 1, 1), 1},
      {ActiveProfile::constant(2, 1, 2), 2},
      {ActiveProfile::d4(), 2},
      {ActiveProfile(3, {2, 1}), 1},
      {ActiveProfile(2, {3, 2, 1}), 3},
      {ActiveProfile::constant(5, 2, 2), 2},
  };
  for (const auto& [prof, v] : cases) {
    const std::uint64_t p = prof.prime();
    const unsigned c = prof.cls();
    const unsigned alpha = prof.alpha();
    for (BigInt l = 1; l <= 2; ++l) {
      BigInt t0 = t0_threshold(prof, v, l);
      for (BigInt t = t0; t <= t0 + 6; ++t) {
        CHECK(shield_class(prof, z_group(p, v, l, t)) ==
              lemma1_class({c, alpha, p, v, l, 1, t}));
      }
    }
    for (BigInt z = 1; z <= 2; ++z) {
      BigInt t1 = t1_threshold(prof, v, z);
      for (BigInt t = t1; t <= t1 + 6; ++t) {
        CHECK(shield_class(prof, y_group(p, v, z, t)) ==
              lemma2_class({c, alpha, p, v, 1, z, t}));
      }
    }
  }
}

TEST_CASE("threshold t0") {
  CHECK(t0_threshold(ActiveProfile::constant(2, 1, 1), 1, 4) == 4);  // c=1: t0 = l
  CHECK(t0_threshold(ActiveProfile(2, {1, 1}), 1, 1) == 1);
  CHECK(t0_threshold(ActiveProfile(2, {3, 1}), 1, 1) == 1);
  CHECK(t0_threshold(ActiveProfile(2, {2, 1}), 2, 1) == 1);
  CHECK(t0_threshold(ActiveProfile(2, {4, 1}), 2, 1) == 3);

  SUBCASE("minimality: below t0 the maximum sits at a smaller h") {
    ActiveProfile prof(2, {4, 1});
    CHECK(shield_argmax(prof, z_group(2, 2, 1, 2)) == 1);
    CHECK(shield_argmax(prof, z_group(2, 2, 1, 3)) == 2);
    CHECK(shield_argmax(prof, z_group(2, 2, 1, 4)) == 2);  // persists
  }

  SUBCASE("v = 1 can make t0 non-existent") {
    // Z(l,t) = C_2^l regardless of t; the maximum stays at h = 1 forever.
    CHECK_THROWS_AS(t0_threshold(ActiveProfile(2, {4, 1}), 1, 1), ThresholdError);
  }

  CHECK_THROWS_AS(t0_threshold(ActiveProfile::d4(), 0, 1), DomainError);
  CHECK_THROWS_AS(t0_threshold(ActiveProfile::d4(), 1, 0), DomainError);
}

TEST_CASE("threshold t1") {
  CHECK(t1_threshold(ActiveProfile::constant(2, 1, 1), 1, 4) == 5);  // c=1: t1 = z+1
  CHECK(t1_threshold(ActiveProfile(2, {2, 2}), 2, 1) == 2);
  CHECK(t1_threshold(ActiveProfile(2, {4, 1}), 1, 1) == 3);

  SUBCASE("minimality") {
    ActiveProfile prof(2, {4, 1});
    CHECK(shield_argmax(prof, y_group(2, 1, 1, 2)) == 1);
    CHECK(shield_argmax(prof, y_group(2, 1, 1, 3)) == 2);
    CHECK(shield_argmax(prof, y_group(2, 1, 1, 4)) == 2);
  }

  SUBCASE("t1 exists even where t0 does not") {
    ActiveProfile prof(2, {4, 1});
    CHECK_THROWS_AS(t0_threshold(prof, 1, 1), ThresholdError);
    CHECK_NOTHROW(t1_threshold(prof, 1, 1));
  }

  CHECK_THROWS_AS(t1_threshold(ActiveProfile::d4(), 1, 0), DomainError);
}

TEST_CASE("crossover t*") {
  CHECK(crossover_tstar(ActiveProfile::constant(2, 1, 1), 1, 1, 1) == 2);
  CHECK(crossover_tstar(ActiveProfile::constant(2, 1, 2), 2, 1, 1) == 2);

  SUBCASE("beyond t* the second closed form strictly dominates") {
    const ActiveProfile prof = ActiveProfile::d4();
    for (unsigned v = 1; v <= 3; ++v) {
      for (BigInt l = 1; l <= 2; ++l) {
        for (BigInt z = 1; z <= 2; ++z) {
          BigInt ts;
          try {
            ts = crossover_tstar(prof, v, l, z);
          } catch (const ThresholdError&) {
            continue;  // v=1 inputs without a t0 have no crossover either
          }
          const unsigned c = prof.cls();
          const unsigned alpha = prof.alpha();
          for (BigInt t = ts + 1; t <= ts + 12; ++t) {
            CHECK(lemma2_class({c, alpha, 2, v, l, z, t}) >
                  lemma1_class({c, alpha, 2, v, l, z, t}));
          }
        }
      }
    }
  }

  CHECK_THROWS_AS(crossover_tstar(ActiveProfile::d4(), 0, 1, 1), DomainError);
  CHECK_THROWS_AS(crossover_tstar(ActiveProfile::d4(), 1, 1, 0), DomainError);
}
