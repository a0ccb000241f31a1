#include "sdesign/design_io.hpp"
#include "sdesign/design_set.hpp"
#include "sdesign/multi_index.hpp"
#include "sdesign/point.hpp"
#include "sdesign/scalar.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <set>

using namespace sdesign;

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3/9"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Scalar, ExactArithmeticStaysExact) {
  Scalar a(Rational(1, 3)), b(Rational(1, 6));
  auto s = a + b;
  ASSERT_TRUE(s.is_exact());
  EXPECT_EQ(s.exact(), Rational(1, 2));
  EXPECT_TRUE((a * b).is_exact());
  EXPECT_THROW(a / Scalar(Rational(0)), std::domain_error);
  auto mixed = a + Scalar(0.5);
  EXPECT_FALSE(mixed.is_exact());
  EXPECT_NEAR(mixed.to_double(), 5.0 / 6.0, 1e-15);
}

TEST(Scalar, FormatsSeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(Scalar(Rational(1, 60)).to_string(), "1/60");
}

TEST(MultiIndex, Canonicalize) {
  EXPECT_EQ(canonicalize(MultiIndex{0, 1, 2}), (MultiIndex{2, 1, 0}));
  EXPECT_EQ(canonicalize(MultiIndex{1, 1, 1}), (MultiIndex{1, 1, 1}));
  EXPECT_EQ(canonicalize(MultiIndex{0, 3, 0, 1}), (MultiIndex{3, 1, 0, 0}));
  EXPECT_EQ(canonicalize(MultiIndex{0, 3, 0, 1}).degree(), 4);
  EXPECT_THROW(MultiIndex({1, -1}), std::invalid_argument);
  EXPECT_EQ((MultiIndex{2, 1, 1, 0}).partition_label(), "[2,1,1]");
}

TEST(MultiIndex, EnumerateExactDegree) {
  auto ks = enumerate_multi_indices(3, 2, true);
  ASSERT_EQ(ks.size(), 6u);
  std::set<MultiIndex> expected{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  EXPECT_EQ(std::set<MultiIndex>(ks.begin(), ks.end()), expected);
  EXPECT_TRUE(std::is_sorted(ks.begin(), ks.end(), std::greater<>()));

  EXPECT_EQ(enumerate_multi_indices(3, 3, true).size(), 10u);
  auto zero = enumerate_multi_indices(2, 0, true);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], (MultiIndex{0, 0}));
}

TEST(MultiIndex, EnumerateUpToDegreeMatchesStarsAndBars) {
  // sum_{j<=t} C(j+d-1, d-1) = C(t+d, d)
  auto binom = [](int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::size_t>(std::lround(r));
  };
  for (int d = 1; d <= 5; ++d) {
    for (int t = 0; t <= 5; ++t) {
      auto ks = enumerate_multi_indices(d, t, false);
      EXPECT_EQ(ks.size(), binom(t + d, d)) << d << "," << t;
      EXPECT_EQ(std::set<MultiIndex>(ks.begin(), ks.end()).size(), ks.size());
    }
  }
}

TEST(MultiIndex, PartitionsAscending) {
  auto ps = partitions(4, 4);
  std::vector<MultiIndex> expected{{1, 1, 1, 1}, {2, 1, 1, 0}, {2, 2, 0, 0}, {3, 1, 0, 0}, {4, 0, 0, 0}};
  EXPECT_EQ(ps, expected);
  EXPECT_EQ(partitions(4, 2).size(), 3u);  // 4, 31, 22
}

TEST(PointVector, ExactSumInvariant) {
  auto p = PointVector::exact({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  EXPECT_TRUE(p.is_exact());
  EXPECT_TRUE(p.is_proper());
  EXPECT_THROW(PointVector::exact({Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
  auto q = PointVector::exact({Rational(3, 2), Rational(-1, 2)});
  EXPECT_FALSE(q.is_proper());
}

TEST(PointVector, FloatingSumTolerance) {
  EXPECT_NO_THROW(PointVector::floating({0.5, 0.5 + 5e-13}));
  EXPECT_THROW(PointVector::floating({0.5, 0.5 + 1e-11}), std::invalid_argument);
  EXPECT_FALSE(PointVector::floating({1.2, -0.2}).is_proper());
}

TEST(DesignSet, ExpandDistinctValuesUnderS3) {
  auto p = PointVector::exact({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  auto x = DesignSet::orbit({p}, PermGroup::symmetric(3));
  EXPECT_EQ(x.size(), 6u);
  EXPECT_EQ(x.expand().size(), 6u);
  EXPECT_EQ(x.dedup().size(), 6u);
}

TEST(DesignSet, ExpandRepeatedValueKeepsMultiplicity) {
  auto p = PointVector::exact({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  auto x = DesignSet::orbit({p}, PermGroup::symmetric(3));
  EXPECT_EQ(x.expand().size(), 6u);
  auto distinct = x.dedup();
  ASSERT_EQ(distinct.size(), 3u);
  for (const auto& w : distinct) EXPECT_EQ(w.multiplicity, 2u);
}

TEST(DesignSet, ExpandCyclicGivesThreePoints) {
  auto p = PointVector::floating({0.6590276223740922, 0.2319333685530306, 0.1090390090728772});
  auto x = DesignSet::orbit({p}, PermGroup::cyclic(3));
  EXPECT_EQ(x.expand().size(), 3u);
}

TEST(DesignSet, ExpansionCap) {
  auto p = PointVector::floating(std::vector<double>(10, 0.1));
  auto x = DesignSet::orbit({p}, PermGroup::symmetric(10));
  EXPECT_EQ(x.size(), 3628800u);
  EXPECT_THROW(x.expand(), std::length_error);
  auto y = DesignSet::orbit({PointVector::floating(std::vector<double>(7, 1.0 / 7))}, PermGroup::symmetric(7));
  EXPECT_THROW(y.expand(1000), std::length_error);
  EXPECT_EQ(y.expand(5040).size(), 5040u);
}

TEST(DesignSet, MixedDimensionsRejected) {
  EXPECT_THROW(DesignSet::explicit_points({PointVector::floating({1.0}), PointVector::floating({0.5, 0.5})}),
               std::invalid_argument);
  EXPECT_THROW(DesignSet::explicit_points({}), std::invalid_argument);
}

TEST(DesignSet, OrbitSizesMatchOrbitStabilizer) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> digit(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    // coordinates drawn from a small set so that ties occur
    std::vector<Rational> c(4);
    Rational sum = 0;
    for (auto& v : c) sum += (v = Rational(digit(rng)));
    for (auto& v : c) v /= sum;
    auto p = PointVector::exact(c);
    for (const auto& g : {PermGroup::symmetric(4), PermGroup::cyclic(4)}) {
      auto x = DesignSet::orbit({p}, g);
      auto expanded = x.expand();
      EXPECT_EQ(expanded.size(), g.order());
      std::size_t stab = 0;
      for (const auto& q : expanded) stab += q.approx_equal(p) ? 1 : 0;
      EXPECT_EQ(x.dedup().size() * stab, g.order());
      for (const auto& q : expanded) {
        Rational s = 0;
        for (const auto& v : q.exact_values()) s += v;
        EXPECT_EQ(s, 1);
        auto a = std::vector<Rational>(q.exact_values().begin(), q.exact_values().end());
        std::sort(a.begin(), a.end());
        auto b = c;
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
      }
    }
  }
}

TEST(DesignIo, ParsesRationalStringsExactly) {
  auto j = nlohmann::json::parse(R"({"d": 3, "mode": "explicit", "points": [["1/3","1/3","1/3"]]})");
  auto x = design_from_json(j);
  EXPECT_TRUE(x.is_exact());
  EXPECT_EQ(x.points()[0].exact_values()[0], Rational(1, 3));
}

TEST(DesignIo, NumbersGiveFloatingMode) {
  auto j = nlohmann::json::parse(R"({"d": 2, "mode": "orbit", "points": [[0.25, 0.75]], "group": "sym"})");
  auto x = design_from_json(j);
  EXPECT_FALSE(x.is_exact());
  EXPECT_TRUE(x.is_orbit());
  EXPECT_EQ(x.size(), 2u);
}

TEST(DesignIo, GeneratorGroup) {
  auto j = nlohmann::json::parse(
      R"({"d": 3, "mode": "orbit", "points": [["1/2","1/3","1/6"]], "group": {"generators": [[2,1,3]]}})");
  auto x = design_from_json(j);
  EXPECT_EQ(x.size(), 2u);
}

TEST(DesignIo, RejectsMalformed) {
  using nlohmann::json;
  EXPECT_THROW(design_from_json(json::parse(R"({"mode":"explicit","points":[]})")), std::invalid_argument);
  EXPECT_THROW(design_from_json(json::parse(R"({"d":2,"points":[[0.5]]})")), std::invalid_argument);
  EXPECT_THROW(design_from_json(json::parse(R"({"d":2,"mode":"orbit","points":[[0.5,0.5]]})")),
               std::invalid_argument);
  EXPECT_THROW(design_from_json(json::parse(R"({"d":2,"points":[["a","b"]]})")), std::invalid_argument);
  EXPECT_THROW(design_from_json(json::parse(R"({"d":2,"mode":"orbit","points":[[0.5,0.5]],"group":"xyz"})")),
               std::invalid_argument);
}

TEST(DesignIo, RoundTripThroughFile) {
  auto p = PointVector::exact({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  auto x = DesignSet::orbit({p}, PermGroup::cyclic(3));
  auto path = std::filesystem::temp_directory_path() / "sdesign_roundtrip.json";
  write_text_file(path, dump_json(design_to_json(x)));
  auto y = read_design_file(path);
  EXPECT_EQ(design_to_json(y), design_to_json(x));
  std::filesystem::remove(path);
}
