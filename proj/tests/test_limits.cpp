#include <gtest/gtest.h>

#include "cyclealg/checked.hpp"
#include "cyclealg/errors.hpp"
#include "cyclealg/limits.hpp"
#include "oracles.hpp"

using namespace cyclealg;

namespace {

using Tower = StationaryMatroidTower;
using W = IsomorphismVerdict::Witness;

}  // namespace

TEST(Factorize, Basics) {
  EXPECT_EQ(factorize(12), (std::map<std::uint64_t, unsigned>{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(97), (std::map<std::uint64_t, unsigned>{{97, 1}}));
  EXPECT_THROW(factorize(0), InvalidInputError);
}

TEST(Supernatural, Arithmetic) {
  const auto a = SupernaturalNumber::from_integer(12);
  const auto b = SupernaturalNumber::from_integer(18);
  EXPECT_EQ((a * b).to_string(), "2^3·3^3");
  EXPECT_EQ(SupernaturalNumber::infinite_power(12).to_string(), "2^∞·3^∞");
  EXPECT_EQ((SupernaturalNumber::infinite_power(2) * a).to_string(), "2^∞·3");
  EXPECT_EQ(SupernaturalNumber().to_string(), "1");
  EXPECT_EQ(SupernaturalNumber::infinite_power(6), SupernaturalNumber::infinite_power(12));
}

TEST(EnumerateS, Examples) {
  EXPECT_EQ(enumerate_S(3, 2), (std::vector<std::int64_t>{-6, 0, 6}));
  EXPECT_EQ(enumerate_S(3, 3), (std::vector<std::int64_t>{-9, -3, 3, 9}));
  EXPECT_EQ(enumerate_S(4, 1), (std::vector<std::int64_t>{-4, 4}));
  for (int m : {3, 4, 5}) {
    for (std::int64_t d = 1; d <= 10; ++d) {
      EXPECT_EQ(enumerate_S(m, d).size(), static_cast<std::size_t>(d + 1));
      // exactly the H1 values of constant signatures (p, q, p, q, ...)
      std::vector<std::int64_t> hs;
      for (std::int64_t p = 0; p <= d; ++p) hs.push_back(h1(Signature::alternating(CycleIndex(m), p, d - p)));
      std::sort(hs.begin(), hs.end());
      EXPECT_EQ(enumerate_S(m, d), hs);
    }
  }
  EXPECT_THROW(enumerate_S(2, 1), InvalidIndexError);
  EXPECT_THROW(enumerate_S(3, 0), InvalidInputError);
}

TEST(Tower, Validation) {
  EXPECT_NO_THROW(Tower(3, 4, 6));
  EXPECT_THROW(Tower(3, 4, 5), InvalidInputError);
  EXPECT_THROW(Tower(3, 4, 18), InvalidInputError);
  EXPECT_THROW(Tower(2, 1, 2), InvalidIndexError);
  EXPECT_THROW(Tower(3, 0, 0), InvalidInputError);
  EXPECT_EQ(Tower(3, 4, 6).linking_signature(), Signature::from_entries({3, 1, 3, 1, 3, 1}));
  EXPECT_EQ(Tower(3, 4, -12).linking_signature(), Signature::from_entries({0, 4, 0, 4, 0, 4}));
}

TEST(K0Limit, Examples) {
  EXPECT_EQ(k0_limit(Tower(3, 1, 3)).supernatural.to_string(), "3^∞");
  EXPECT_EQ(k0_limit(Tower(3, 4, 0)).supernatural.to_string(), "2^∞·3^∞");
  EXPECT_EQ(k0_limit(Tower(3, 2, 0)).supernatural, k0_limit(Tower(3, 4, 0)).supernatural);
  EXPECT_EQ(k0_limit(Tower(3, 1, 3)).order_unit, "1⊕1");
  EXPECT_EQ(k0_limit(Tower(3, 1, 3)).copies, 2);
}

TEST(H1Limit, Examples) {
  EXPECT_EQ(h1_limit(Tower(3, 4, 0)).kind(), LocalizedGroup::Kind::kTrivial);
  EXPECT_EQ(h1_limit(Tower(3, 4, 6)).primes(), (std::set<std::uint64_t>{2, 3}));
  EXPECT_EQ(h1_limit(Tower(3, 4, -6)), h1_limit(Tower(3, 4, 6)));
  EXPECT_EQ(h1_limit(Tower(3, 1, 3)).to_string(), "Z[1/3]");
  EXPECT_EQ(LocalizedGroup::from_multiplier(1).kind(), LocalizedGroup::Kind::kIntegers);
  EXPECT_EQ(LocalizedGroup::from_multiplier(-1).to_string(), "Z");
  EXPECT_THROW(LocalizedGroup::localization({}), InvalidInputError);
}

TEST(Extreme, Examples) {
  EXPECT_TRUE(is_extreme(Tower(3, 2, 6)));
  EXPECT_TRUE(is_extreme(Tower(3, 2, -6)));
  EXPECT_FALSE(is_extreme(Tower(3, 4, 6)));
  EXPECT_FALSE(is_extreme(Tower(3, 4, 0)));
  EXPECT_TRUE(is_homologically_limited(Tower(3, 4, 6)));
  EXPECT_FALSE(is_homologically_limited(Tower(3, 2, 6)));
  EXPECT_FALSE(is_homologically_limited(Tower(3, 4, 0)));
}

TEST(Decide, Examples) {
  auto v = decide_isomorphism(Tower(3, 4, 6), Tower(3, 4, -6));
  EXPECT_TRUE(v.isomorphic);
  EXPECT_TRUE(v.stated_without_proof);
  v = decide_isomorphism(Tower(3, 4, 12), Tower(3, 4, 6));
  EXPECT_FALSE(v.isomorphic);
  EXPECT_EQ(v.witness, W::kJointScaleBoundedness);
  EXPECT_EQ(IsomorphismVerdict::witness_name(v.witness), "joint-scale boundedness");
  v = decide_isomorphism(Tower(3, 12, 30), Tower(3, 12, 6));
  EXPECT_FALSE(v.isomorphic);
  EXPECT_EQ(v.witness, W::kH1Group);
  EXPECT_NE(v.detail.find("{2,3,5}"), std::string::npos);
  EXPECT_NE(v.detail.find("{2,3}"), std::string::npos);
  v = decide_isomorphism(Tower(3, 2, 6), Tower(3, 2, -6));
  EXPECT_TRUE(v.isomorphic);
  EXPECT_FALSE(v.stated_without_proof);
  v = decide_isomorphism(Tower(3, 1, 3), Tower(3, 2, 6));
  EXPECT_FALSE(v.isomorphic);
  EXPECT_EQ(v.witness, W::kK0Supernatural);
  v = decide_isomorphism(Tower(3, 2, 0), Tower(3, 4, 0));
  EXPECT_TRUE(v.isomorphic);
  EXPECT_TRUE(v.derived_from_theorem);
  EXPECT_THROW(decide_isomorphism(Tower(3, 1, 3), Tower(4, 1, 4)), IncompatibleError);
}

TEST(Decide, EquivalenceRelationExhaustive) {
  std::vector<Tower> all;
  for (std::int64_t d = 1; d <= 6; ++d) {
    for (auto s : enumerate_S(3, d)) all.emplace_back(3, d, s);
  }
  auto iso = [](const Tower& a, const Tower& b) { return decide_isomorphism(a, b).isomorphic; };
  for (const auto& a : all) {
    EXPECT_TRUE(iso(a, a));
    for (const auto& b : all) {
      const auto ab = decide_isomorphism(a, b);
      EXPECT_EQ(ab.isomorphic, iso(b, a));
      if (!ab.isomorphic) EXPECT_NE(ab.witness, W::kNone);
      if (!ab.isomorphic) continue;
      for (const auto& c : all) {
        if (iso(b, c)) EXPECT_TRUE(iso(a, c));
      }
    }
  }
}

TEST(Decide, ZeroSIgnoresS) {
  for (std::int64_t d1 : {2, 4, 6, 8}) {
    for (std::int64_t d2 : {2, 4, 6, 8}) {
      const auto v = decide_isomorphism(Tower(3, d1, 0), Tower(3, d2, 0));
      EXPECT_EQ(v.isomorphic, k0_limit(Tower(3, d1, 0)).supernatural == k0_limit(Tower(3, d2, 0)).supernatural);
    }
  }
}

TEST(Scale, Examples) {
  const Tower t(3, 1, 3);
  EXPECT_TRUE(unital_joint_scale_contains(t, {3, 1}).contains);
  EXPECT_TRUE(unital_joint_scale_contains(t, {1, 1}).contains);
  const auto five = unital_joint_scale_contains(t, {5, 1});
  EXPECT_FALSE(five.contains);
  EXPECT_FALSE(unital_joint_scale_contains(t, {2, 1}).contains);
  EXPECT_THROW(unital_joint_scale_contains(t, {1, 0}), InvalidInputError);
  // nonextreme with d even: every numerator is eventually realised
  for (std::int64_t k = -50; k <= 50; ++k) {
    EXPECT_TRUE(unital_joint_scale_contains(Tower(3, 4, 6), {k, 1}).contains) << k;
    EXPECT_TRUE(unital_joint_scale_contains(Tower(3, 2, 0), {k, 2}).contains) << k;
  }
}

TEST(Scale, CertificateIsRealised) {
  for (std::int64_t d = 1; d <= 4; ++d) {
    for (auto s : enumerate_S(3, d)) {
      const Tower t(3, d, s);
      for (std::int64_t tq = 1; tq <= 2; ++tq) {
        for (std::int64_t k = -30; k <= 30; ++k) {
          const auto r = unital_joint_scale_contains(t, {k, tq});
          if (!r.contains) continue;
          if (s != 0) EXPECT_GE(r.period, 1);
          ASSERT_TRUE(r.certificate_level.has_value());
          const auto level = *r.certificate_level;
          const auto num = std::stoll(*r.certificate_numerator);
          const auto n = checked::pow(t.level_multiplier(), level);
          EXPECT_LE(std::llabs(num), n);
          EXPECT_EQ(((num - n) % 2 + 2) % 2, 0);
          EXPECT_EQ(num, k * checked::pow(s, level - tq));
        }
      }
    }
  }
}

TEST(Scale, AgreesWithLevelScanM3) {
  for (std::int64_t d = 1; d <= 3; ++d) {
    for (auto s : enumerate_S(3, d)) {
      const Tower t(3, d, s);
      oracle::ScaleOracle brute(t);
      for (int tq = 1; tq <= 2; ++tq) {
        const auto bound = checked::pow(3 * d, tq) + 6;
        for (std::int64_t k = -bound; k <= bound; ++k) {
          EXPECT_EQ(unital_joint_scale_contains(t, {k, tq}).contains, brute.first_level(k, tq).has_value())
              << "d=" << d << " s=" << s << " k=" << k << " t=" << tq;
        }
      }
    }
  }
}

TEST(Scale, AgreesWithLevelScanOtherM) {
  for (int m : {4, 5}) {
    for (std::int64_t d = 1; d <= 3; ++d) {
      for (auto s : enumerate_S(m, d)) {
        const Tower t(m, d, s);
        oracle::ScaleOracle brute(t, 200'000);
        const auto bound = m * d + 2 * m;
        for (std::int64_t k = -bound; k <= bound; ++k) {
          EXPECT_EQ(unital_joint_scale_contains(t, {k, 1}).contains, brute.first_level(k, 1).has_value())
              << "m=" << m << " d=" << d << " s=" << s << " k=" << k;
        }
      }
    }
  }
}

TEST(Scale, LevelSetSourcesAgree) {
  // the rotation/reflection count and the full enumeration give the same
  // level H1 sets where both are available
  for (std::int64_t n : {1, 2, 3, 6, 9, 12}) {
    std::vector<bool> from_enum(static_cast<std::size_t>(2 * n + 1), false);
    for (const auto& e : joint_scale_finite(CycleAlgebraShape::uniform(CycleIndex(3), n), true)) {
      from_enum[static_cast<std::size_t>(e.h + n)] = true;
    }
    EXPECT_EQ(from_enum, oracle::unital_h_values(n)) << n;
  }
}

TEST(Truncate, Levels) {
  const auto tower = truncate(Tower(3, 2, 0), 3);
  ASSERT_EQ(tower.shapes.size(), 3u);
  EXPECT_EQ(tower.shapes[2], CycleAlgebraShape::uniform(CycleIndex(3), 36));
  const auto reps = finite_level_invariants(tower);
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_FALSE(reps[0].composite.has_value());
  EXPECT_EQ(*reps[2].h, 0);
  // (2 * ones per block)^2 = 12 * ones per block
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) EXPECT_EQ((*reps[2].k0)(i, j), (i < 3) == (j < 3) ? 12 : 0);
  }
  EXPECT_THROW(truncate(Tower(3, 2, 0), 0), InvalidInputError);
}

TEST(FiniteLevels, HMultiplicative) {
  for (std::int64_t d = 1; d <= 3; ++d) {
    for (auto s : enumerate_S(3, d)) {
      const auto reps = finite_level_invariants(truncate(Tower(3, d, s), 5));
      for (std::size_t i = 1; i < reps.size(); ++i) EXPECT_EQ(*reps[i].h, checked::pow(s, static_cast<std::int64_t>(i)));
    }
  }
  const auto reps = finite_level_invariants(truncate(Tower(3, 1, 3), 4));
  EXPECT_EQ(*reps[3].h, 27);
}

TEST(FiniteLevels, SingleLevelAndErrors) {
  const CycleIndex m(3);
  ExplicitTower one{m, {CycleAlgebraShape::uniform(m, 2)}, {}};
  const auto reps = finite_level_invariants(one);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_FALSE(reps[0].composite.has_value());
  EXPECT_EQ(reps[0].shape, CycleAlgebraShape::uniform(m, 2));

  ExplicitTower bad{m,
                    {CycleAlgebraShape::uniform(m, 1), CycleAlgebraShape::uniform(m, 2), CycleAlgebraShape::uniform(m, 3)},
                    {Signature::from_entries({1, 1, 0, 0, 0, 0}), Signature::from_entries({1, 1, 0, 0, 0, 0})}};
  try {
    finite_level_invariants(bad);
    FAIL() << "expected InvalidTowerError";
  } catch (const InvalidTowerError& e) {
    EXPECT_EQ(e.level(), 3u);
  }
  ExplicitTower miscount{m, {CycleAlgebraShape::uniform(m, 1)}, {Signature::identity(m)}};
  EXPECT_THROW(finite_level_invariants(miscount), InvalidTowerError);
}
