#include "oracles.hpp"

#include "sdesign/algebra.hpp"
#include "sdesign/exact_linalg.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace sdesign;

namespace {

// {F_G(j,0,...,0) : 1 <= j <= j_max}, without the constant term.
std::vector<SymPoly> power_span(const PermGroup& g, int j_max) {
  std::vector<SymPoly> basis;
  for (int j = 1; j <= j_max; ++j) {
    std::vector<int> e(g.dim(), 0);
    e[0] = j;
    basis.push_back(symmetrized_monomial(g, MultiIndex(e)));
  }
  return basis;
}

MultiIndex random_index(std::size_t d, int max_exp, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> k(d);
  for (auto& v : k) v = e(rng);
  return MultiIndex(k);
}

PermGroup transposition_subgroup(std::size_t d) {
  std::vector<int> img(d);
  for (std::size_t i = 0; i < d; ++i) img[i] = static_cast<int>(i) + 1;
  std::swap(img[0], img[1]);
  return PermGroup::generated(d, {Permutation::from_one_based(img)});
}

}  // namespace

TEST(ExactLinalg, RankAndSolve) {
  RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m), 2u);
  auto x = solve(m, {Rational(6), Rational(12), Rational(2)});
  ASSERT_TRUE(x.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += m[i][j] * (*x)[j];
    EXPECT_EQ(s, (std::vector<Rational>{6, 12, 2})[i]);
  }
  EXPECT_FALSE(solve(m, {Rational(1), Rational(1), Rational(0)}).has_value());
}

TEST(SymmetrizedMonomial, Examples) {
  auto c3 = symmetrized_monomial(PermGroup::cyclic(3), MultiIndex{2, 1, 0});
  EXPECT_EQ(c3.terms().size(), 3u);
  EXPECT_EQ(c3.coefficient(MultiIndex{2, 1, 0}), 1);
  EXPECT_EQ(c3.coefficient(MultiIndex{0, 2, 1}), 1);
  EXPECT_EQ(c3.coefficient(MultiIndex{1, 0, 2}), 1);
  EXPECT_EQ(c3.coefficient(MultiIndex{1, 2, 0}), 0);

  auto s111 = symmetrized_monomial(PermGroup::symmetric(3), MultiIndex{1, 1, 1});
  EXPECT_EQ(s111.terms().size(), 1u);
  EXPECT_EQ(s111.coefficient(MultiIndex{1, 1, 1}), 6);

  auto s210 = symmetrized_monomial(PermGroup::symmetric(3), MultiIndex{2, 1, 0});
  EXPECT_EQ(s210.terms().size(), 6u);
  for (const auto& [k, c] : s210.terms()) EXPECT_EQ(c, 1);
}

TEST(SymmetrizedMonomial, InvariantUnderGroup) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 3 + trial % 3;
    auto k = random_index(d, 2, rng);
    for (const auto& g : {PermGroup::cyclic(d), transposition_subgroup(d)}) {
      auto f = symmetrized_monomial(g, k);
      for (const auto& p : g.elements()) EXPECT_EQ(symmetrized_monomial(g, apply(p, k)), f);
    }
  }
}

TEST(SymmetrizedMonomial, CosetDecomposition) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 3 + trial % 4;
    auto k = random_index(d, 2, rng);
    auto full = symmetrized_monomial(PermGroup::symmetric(d), k);
    for (const auto& g : {PermGroup::cyclic(d), transposition_subgroup(d)}) {
      SymPoly sum(d, k.degree());
      for (const auto& r : coset_representatives(g)) sum = sum + symmetrized_monomial(g, apply(r, k));
      EXPECT_EQ(sum, full) << k.to_string() << " " << g.tag();
    }
  }
}

TEST(SymmetrizedMonomial, GInvariantIndexScalesByIndex) {
  for (std::size_t d = 3; d <= 5; ++d) {
    auto g = PermGroup::cyclic(d);
    std::uint64_t index = PermGroup::symmetric(d).order() / g.order();
    for (const auto& k : enumerate_multi_indices(static_cast<int>(d), 3, false)) {
      if (!is_G_invariant(g, k)) continue;
      EXPECT_EQ(symmetrized_monomial(PermGroup::symmetric(d), k),
                Rational(static_cast<long long>(index)) * symmetrized_monomial(g, k))
          << k.to_string();
    }
  }
}

TEST(Homogenize, Examples) {
  SymPoly x1(3, 1);
  x1.add_term(MultiIndex{1, 0, 0}, 1);
  auto h = homogenize_to(x1, 2);
  EXPECT_EQ(h.terms().size(), 3u);
  EXPECT_EQ(h.coefficient(MultiIndex{2, 0, 0}), 1);
  EXPECT_EQ(h.coefficient(MultiIndex{1, 1, 0}), 1);
  EXPECT_EQ(h.coefficient(MultiIndex{1, 0, 1}), 1);
  EXPECT_EQ(homogenize_to(x1, 1), x1);
  EXPECT_THROW(homogenize_to(h, 1), std::invalid_argument);
}

TEST(Homogenize, CyclicDegreeThreeExpansion) {
  // F_C3(1,0,0) (x1+x2+x3)^2 = F(3,0,0) + 3[F(2,1,0) + F(1,2,0)] + 2 F(1,1,1),
  // where F_C3(1,1,1) = 3 x1x2x3.
  auto c3 = PermGroup::cyclic(3);
  auto lhs = homogenize_to(symmetrized_monomial(c3, MultiIndex{1, 0, 0}), 3);
  auto rhs = symmetrized_monomial(c3, MultiIndex{3, 0, 0}) +
             Rational(3) * (symmetrized_monomial(c3, MultiIndex{2, 1, 0}) +
                            symmetrized_monomial(c3, MultiIndex{1, 2, 0})) +
             Rational(2) * symmetrized_monomial(c3, MultiIndex{1, 1, 1});
  EXPECT_EQ(lhs, rhs);
}

TEST(Homogenize, AgreesOnTheSimplex) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = 3 + trial % 3;
    auto k = random_index(d, 2, rng);
    auto f = symmetrized_monomial(PermGroup::cyclic(d), k);
    auto h = homogenize_to(f, k.degree() + 2);
    for (int i = 0; i < 20; ++i) {
      auto x = oracle::random_simplex_point(static_cast<int>(d), rng);
      EXPECT_NEAR(f.evaluate(x), h.evaluate(x), 1e-12);
    }
  }
}

TEST(SymPoly, EvaluationMatchesDirectSum) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = 3 + trial % 3;
    auto k = random_index(d, 3, rng);
    auto g = PermGroup::cyclic(d);
    auto f = symmetrized_monomial(g, k);
    for (int i = 0; i < 20; ++i) {
      auto x = oracle::random_simplex_point(static_cast<int>(d), rng);
      double direct = 0;
      for (const auto& p : g.elements()) {
        auto pk = apply(p, k);
        direct += oracle::monomial(x, std::vector<int>(pk.exponents().begin(), pk.exponents().end()));
      }
      EXPECT_NEAR(f.evaluate(x), direct, 1e-12);
    }
  }
}

TEST(SymPoly, RejectsWrongDegree) {
  SymPoly p(3, 2);
  EXPECT_THROW(p.add_term(MultiIndex{1, 0, 0}, 1), std::invalid_argument);
  EXPECT_THROW(p.add_term(MultiIndex{1, 1}, 1), std::invalid_argument);
  p.add_term(MultiIndex{1, 1, 0}, 0);
  EXPECT_TRUE(p.is_zero());
}

TEST(InSpan, CyclicCounterexampleD3) {
  auto c3 = PermGroup::cyclic(3);
  auto r = in_span(symmetrized_monomial(c3, MultiIndex{2, 1, 0}), power_span(c3, 3));
  EXPECT_FALSE(r.in_span);
}

TEST(InSpan, CyclicCounterexampleD4) {
  auto c4 = PermGroup::cyclic(4);
  auto r = in_span(symmetrized_monomial(c4, MultiIndex{1, 0, 1, 0}), power_span(c4, 2));
  EXPECT_FALSE(r.in_span);
}

TEST(InSpan, SymmetricGroupRepairsD3) {
  auto s3 = PermGroup::symmetric(3);
  auto basis = power_span(s3, 3);
  auto cand = symmetrized_monomial(s3, MultiIndex{2, 1, 0});
  auto r = in_span(cand, basis);
  ASSERT_TRUE(r.in_span);
  ASSERT_EQ(r.coefficients.size(), 3u);
  SymPoly sum(3, 3);
  for (std::size_t i = 0; i < 3; ++i) sum = sum + r.coefficients[i] * homogenize_to(basis[i], 3);
  EXPECT_EQ(sum, cand);
}

TEST(InSpan, DimensionMismatch) {
  EXPECT_THROW(in_span(SymPoly(3, 1), std::vector<SymPoly>{SymPoly(4, 1)}), std::invalid_argument);
}

// Homogenized, F(j,0,...,0) becomes p1^(t-j) p_j. Up to degree 3 these
// products exhaust the symmetric slice.
TEST(InSpan, PowerBasisSpansUpToDegreeThree) {
  for (std::size_t d = 3; d <= 5; ++d) {
    auto s = PermGroup::symmetric(d);
    for (int t = 1; t <= 3; ++t) {
      auto basis = power_basis(s, t);
      for (const auto& lam : partitions(t, static_cast<int>(d))) {
        EXPECT_TRUE(in_span(symmetrized_monomial(s, lam), basis).in_span) << d << " " << lam.to_string();
      }
    }
  }
}

TEST(InSpan, DegreeFourInThreeVariables) {
  auto s = PermGroup::symmetric(3);
  auto basis = power_basis(s, 4);
  for (const auto& lam : partitions(4, 3)) {
    EXPECT_TRUE(in_span(symmetrized_monomial(s, lam), basis).in_span) << lam.to_string();
  }
}

// With d >= 4 the degree-4 symmetric slice has dimension 5 while the power
// basis spans only p1^4, p1^2 p2, p1 p3, p4; p2^2 is missing.
TEST(InSpan, DegreeFourNeedsSquareOfP2) {
  for (std::size_t d = 4; d <= 5; ++d) {
    auto s = PermGroup::symmetric(d);
    auto basis = power_basis(s, 4);
    RationalMatrix m;
    for (const auto& b : basis) {
      auto h = homogenize_to(b, 4);
      std::vector<Rational> row;
      for (const auto& lam : partitions(4, static_cast<int>(d))) row.push_back(h.coefficient(lam));
      m.push_back(row);
    }
    EXPECT_EQ(rank(m), 4u);
    std::vector<int> e4(d, 0);
    e4[0] = 4;
    EXPECT_TRUE(in_span(symmetrized_monomial(s, MultiIndex(e4)), basis).in_span);
    std::vector<int> e22(d, 0);
    e22[0] = e22[1] = 2;
    EXPECT_FALSE(in_span(symmetrized_monomial(s, MultiIndex(e22)), basis).in_span);
  }
}

TEST(Kostka, SmallValues) {
  EXPECT_EQ(kostka_number(MultiIndex{2, 1, 0}, MultiIndex{1, 1, 1}), 2);
  EXPECT_EQ(kostka_number(MultiIndex{3, 0, 0}, MultiIndex{1, 1, 1}), 1);
  EXPECT_EQ(kostka_number(MultiIndex{1, 1, 1}, MultiIndex{3, 0, 0}), 0);
  EXPECT_EQ(kostka_number(MultiIndex{2, 2, 0, 0}, MultiIndex{1, 1, 1, 1}), 2);
  EXPECT_EQ(kostka_number(MultiIndex{3, 1, 0, 0}, MultiIndex{1, 1, 1, 1}), 3);
}

TEST(DecompositionTable, SymmetricD4T4) {
  auto table = decomposition_table(4, 4, PermGroup::symmetric(4), DecompositionBasis::schur);
  ASSERT_EQ(table.columns.size(), 5u);
  EXPECT_EQ(table.label(table.columns[0]), "[1,1,1,1]");
  EXPECT_EQ(table.label(table.columns[4]), "[4]");
  ASSERT_GE(table.rows.size(), 7u);
  EXPECT_EQ(table.rows[0], (MultiIndex{1, 0, 0, 0}));
  // Young-rule rows on columns [1,1,1,1], [2,1,1], [2,2], [3,1], [4]
  std::vector<std::vector<Rational>> expected{
      {1, 3, 2, 3, 1},  // [1]
      {1, 2, 1, 1, 0},  // [1,1]
      {0, 1, 1, 2, 1},  // [2]
      {1, 1, 0, 0, 0},  // [1,1,1]
      {0, 1, 1, 1, 0},  // [2,1]
      {0, 0, 0, 1, 1},  // [3]
      {1, 0, 0, 0, 0},  // [1,1,1,1]
  };
  for (std::size_t r = 0; r < expected.size(); ++r) EXPECT_EQ(table.coefficients[r], expected[r]) << r;
  std::vector<std::size_t> first7{0, 1, 2, 3, 4, 5, 6};
  EXPECT_EQ(table.rank_of_rows(first7), 4u);
  EXPECT_EQ(table.rank, 5u);
}

TEST(DecompositionTable, BasesAgreeOnRank) {
  auto schur = decomposition_table(4, 4, PermGroup::symmetric(4), DecompositionBasis::schur);
  auto sym = decomposition_table(4, 4, PermGroup::symmetric(4));
  ASSERT_EQ(schur.rows, sym.rows);
  for (std::size_t n = 1; n <= sym.rows.size(); ++n) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    EXPECT_EQ(schur.rank_of_rows(ids), sym.rank_of_rows(ids)) << n;
  }
}

TEST(DecompositionTable, SymmetrizedBasisRowsReconstruct) {
  auto g = PermGroup::symmetric(4);
  auto table = decomposition_table(4, 4, g);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    SymPoly sum(4, 4);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      sum = sum + table.coefficients[r][c] * symmetrized_monomial(g, table.columns[c]);
    }
    EXPECT_EQ(sum, homogenize_to(symmetrized_monomial(g, table.rows[r]), 4));
  }
}

TEST(DecompositionTable, CyclicD3T3) {
  auto table = decomposition_table(3, 3, PermGroup::cyclic(3));
  // C3-orbits of degree 3: (3,0,0), (2,1,0), (2,0,1), (1,1,1)
  EXPECT_EQ(table.columns.size(), 4u);
  EXPECT_FALSE(table.to_csv().empty());
}

TEST(DecompositionTable, Trivial) {
  auto table = decomposition_table(3, 1, PermGroup::cyclic(3));
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(table.rank, 1u);
  EXPECT_EQ(table.coefficients[0], std::vector<Rational>{1});
}
