#include "coreblocks/multipartition.hpp"

#include <gtest/gtest.h>

#include <bit>

#include "coreblocks/enumerate.hpp"

namespace {

using namespace coreblocks;

Multipartition mp(std::vector<Partition> comps) { return Multipartition(std::move(comps)); }

TEST(Multipartition, LiteralRoundTrip) {
  Multipartition m = Multipartition::parse("4,3,3,1|-|2,1");
  EXPECT_EQ(m.level(), 3);
  EXPECT_EQ(m.component(0), Partition({4, 3, 3, 1}));
  EXPECT_EQ(m.component(1), Partition{});
  EXPECT_EQ(m.component(2), Partition({2, 1}));
  EXPECT_EQ(m.size(), 14);
  EXPECT_EQ(m.to_string(), "4,3,3,1|-|2,1");
  EXPECT_EQ(Multipartition::parse(m.to_string()), m);
  EXPECT_EQ(Multipartition::parse("").level(), 1);
  EXPECT_EQ(Multipartition::parse("-|-").level(), 2);
  EXPECT_THROW(Multipartition(std::vector<Partition>{}), std::invalid_argument);
  EXPECT_THROW(m.component(3), std::invalid_argument);
}

TEST(Multipartition, ComponentwiseCores) {
  Multipartition m = mp({Partition({4, 3, 3, 1}), Partition({2})});
  EXPECT_FALSE(is_multicore(m, 3));
  Multipartition c = multicore_of(m, 3);
  EXPECT_EQ(c.component(0), Partition({4, 2, 1, 1}));
  EXPECT_EQ(c.component(1), Partition({2}));
  EXPECT_TRUE(is_multicore(c, 3));
}

std::vector<Partition> cores_up_to(long long n, long long e) {
  std::vector<Partition> out;
  for (long long k = 0; k <= n; ++k)
    for (const Partition& c : e_cores_of(k, e)) out.push_back(c);
  return out;
}

TEST(Weights, PairwiseFormulaMatchesDefinition) {
  for (long long e : {2LL, 3LL}) {
    auto cs = cores_up_to(5, e);
    for (const Partition& a : cs)
      for (const Partition& b : cs)
        for (const Multicharge& S : {Multicharge{0, 0}, Multicharge{0, 1}})
          EXPECT_EQ(multi_weight_pairwise(mp({a, b}), S, e), multi_weight(mp({a, b}), S, e))
              << a.to_string() << "|" << b.to_string() << " e=" << e;
    // Three components, smaller pool.
    auto small = cores_up_to(3, e);
    for (const Partition& a : small)
      for (const Partition& b : small)
        for (const Partition& c : small) {
          Multicharge S{0, 1, 0};
          EXPECT_EQ(multi_weight_pairwise(mp({a, b, c}), S, e), multi_weight(mp({a, b, c}), S, e));
        }
  }
  EXPECT_THROW(multi_weight_pairwise(mp({Partition({2}), Partition{}}), Multicharge{0, 0}, 2),
               std::domain_error);
}

TEST(Weights, MinSetsEvaluatorOnBicores) {
  for (long long e : {2LL, 3LL}) {
    auto cs = cores_up_to(6, e);
    for (const Partition& a : cs)
      for (const Partition& b : cs)
        for (const Multicharge& S : {Multicharge{0, 0}, Multicharge{0, 1}}) {
          GammaTable g(mp({a, b}), S, e);
          long long lo = g.gamma(0, 0, 1), hi = lo;
          for (long long i = 1; i < e; ++i) {
            lo = std::min(lo, g.gamma(i, 0, 1));
            hi = std::max(hi, g.gamma(i, 0, 1));
          }
          if (hi - lo > 2) continue;  // outside the evaluator's domain
          EXPECT_EQ(multi_weight_min_sets(mp({a, b}), S, e), multi_weight(mp({a, b}), S, e))
              << a.to_string() << "|" << b.to_string() << " e=" << e;
        }
  }
  // Range 4 at e = 2: (3,2,1) against the empty partition.
  EXPECT_THROW(multi_weight_min_sets(mp({Partition({3, 2, 1}), Partition{}}), Multicharge{0, 0}, 2),
               std::domain_error);
}

TEST(GammaTable, RunningValues) {
  GammaTable g(mp({Partition({3, 2, 1}), Partition({1})}), Multicharge{0, 0}, 2);
  EXPECT_EQ(g.x(0, 0), 2);
  EXPECT_EQ(g.x(1, 0), -2);
  EXPECT_EQ(g.x(0, 1), 1);
  EXPECT_EQ(g.x(1, 1), -1);
  EXPECT_EQ(g.gamma(0, 0, 1), 1);
  EXPECT_EQ(g.gamma(1, 0, 1), -1);
  EXPECT_EQ(g.max_gamma(0, 1), 1);
  EXPECT_EQ(g.max_gamma(1, 0), 1);
  EXPECT_EQ(g.gamma_pair(0, 1, 0, 1), 2);
  EXPECT_EQ(g.u(0, 1), 0);  // equal charges
}

TEST(Reduced, MatchesCoreBlockCharacterisation) {
  // A multicore is reduced exactly when its block label is a core block.
  for (long long e : {2LL, 3LL}) {
    auto cs = cores_up_to(5, e);
    for (const Partition& a : cs)
      for (const Partition& b : cs)
        for (const Multicharge& S : {Multicharge{0, 0}, Multicharge{0, 1}})
          EXPECT_EQ(is_reduced_multicore(mp({a, b}), S, e),
                    is_core_block(multi_block(mp({a, b}), S, e), S))
              << a.to_string() << "|" << b.to_string() << " e=" << e << " S=(" << S[0] << ","
              << S[1] << ")";
  }
  auto cs2 = cores_up_to(3, 2);
  for (const Partition& a : cs2)
    for (const Partition& b : cs2)
      for (const Partition& c : cs2) {
        Multicharge S{0, 1, 0};
        EXPECT_EQ(is_reduced_multicore(mp({a, b, c}), S, 2),
                  is_core_block(multi_block(mp({a, b, c}), S, 2), S));
      }
}

TEST(Reduced, KnownInstances) {
  EXPECT_FALSE(is_reduced_multicore(mp({Partition({1}), Partition({1})}), Multicharge{0, 1}, 2));
  EXPECT_TRUE(is_reduced_multicore(mp({Partition({1}), Partition({1})}), Multicharge{0, 0}, 2));
  EXPECT_TRUE(is_reduced_multicore(mp({Partition({3, 2, 1})}), Multicharge{0}, 2));
}

long long mask_pair_weight(std::uint32_t a, std::uint32_t b) {
  long long pa = std::popcount(a), pb = std::popcount(b);
  return std::min(pa, pb) - std::popcount(a & b);
}

std::vector<long long> default_offsets(long long e) {
  std::vector<long long> b;
  for (long long i = 1; i <= e; ++i) b.push_back(i);
  return b;
}

TEST(MatrixConstruction, PairWeightCountsColumnOverlap) {
  // Exhaustive over column pairs for small e: the bicore weight is
  // min(|E|,|F|) - |E cap F|.
  for (long long e : {2LL, 3LL, 4LL})
    for (std::uint32_t a = 0; a < (1u << e); ++a)
      for (std::uint32_t b = 0; b < (1u << e); ++b) {
        auto [S, m] = build_reduced_multicore({a, b}, default_offsets(e), e);
        EXPECT_TRUE(is_multicore(m, e));
        EXPECT_EQ(multi_weight(m, S, e), mask_pair_weight(a, b))
            << "e=" << e << " masks " << a << "," << b;
      }
}

TEST(MatrixConstruction, ResultIsReduced) {
  for (long long e : {2LL, 3LL})
    for (std::uint32_t a = 0; a < (1u << e); ++a)
      for (std::uint32_t b = 0; b < (1u << e); ++b) {
        auto [S, m] = build_reduced_multicore({a, b}, default_offsets(e), e);
        EXPECT_TRUE(is_reduced_multicore(m, S, e)) << "e=" << e << " masks " << a << "," << b;
      }
}

TEST(MatrixConstruction, PentagonWitness) {
  // Five 2-element subsets of {1..5} arranged in a cycle; total weight 15.
  std::vector<std::uint32_t> masks{3, 5, 20, 24, 10};
  auto [S, m] = build_reduced_multicore(masks, default_offsets(5), 5);
  EXPECT_TRUE(is_reduced_multicore(m, S, 5));
  long long pair_sum = 0;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      pair_sum += mask_pair_weight(masks[i], masks[j]);
  EXPECT_EQ(pair_sum, 15);
  EXPECT_EQ(multi_weight(m, S, 5), 15);
  EXPECT_EQ(multi_weight_pairwise(m, S, 5), 15);
}

TEST(MatrixConstruction, FourSetWitness) {
  std::vector<std::uint32_t> masks{5, 10, 17, 18};
  auto [S, m] = build_reduced_multicore(masks, default_offsets(5), 5);
  EXPECT_TRUE(is_reduced_multicore(m, S, 5));
  EXPECT_EQ(multi_weight(m, S, 5), 9);
}

TEST(MatrixConstruction, ValidatesInput) {
  // b must satisfy b_i = i mod e.
  EXPECT_THROW(build_reduced_multicore({1, 2}, {2, 2}, 2), std::invalid_argument);
  EXPECT_THROW(build_reduced_multicore({4}, {1, 2}, 2), std::invalid_argument);  // mask >= 2^e
  EXPECT_THROW(build_reduced_multicore({}, {1, 2}, 2), std::invalid_argument);
  EXPECT_THROW(build_reduced_multicore({0}, {1}, 33), std::invalid_argument);
}

}  // namespace
