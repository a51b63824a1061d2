#include "coreblocks/shift.hpp"

#include <gtest/gtest.h>

#include "coreblocks/enumerate.hpp"
#include "coreblocks/residues.hpp"

namespace {

using namespace coreblocks;

TEST(ShiftParam, OrderAndFolding) {
  EXPECT_EQ(ShiftParam(6, 2).d(), 3);
  EXPECT_EQ(ShiftParam(6, 4).d(), 3);
  EXPECT_EQ(ShiftParam(6, 3).d(), 2);
  EXPECT_EQ(ShiftParam(5, 2).d(), 5);
  EXPECT_EQ(ShiftParam(4, 1).d(), 4);
  EXPECT_TRUE(ShiftParam(6, 2).folds());
  EXPECT_TRUE(ShiftParam(6, 3).folds());
  EXPECT_FALSE(ShiftParam(6, 4).folds());
  EXPECT_THROW(ShiftParam(1, 1), std::invalid_argument);
  EXPECT_THROW(ShiftParam(4, 0), std::invalid_argument);
  EXPECT_THROW(ShiftParam(4, 4), std::invalid_argument);
}

BlockVector bv(long long e, std::vector<long long> coeffs) {
  BlockVector v(e);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    v.set_coeff(static_cast<long long>(i), coeffs[i]);
  return v;
}

TEST(SigmaBlock, RotatesCoefficients) {
  BlockVector alpha = bv(4, {1, 2, 3, 4});
  EXPECT_EQ(sigma_block(alpha, ShiftParam(4, 1)), bv(4, {2, 3, 4, 1}));
  EXPECT_EQ(sigma_block(alpha, ShiftParam(4, 3)), bv(4, {4, 1, 2, 3}));
  // Order d, and the constant vector is fixed.
  for (long long e : {4LL, 6LL})
    for (long long ehat = 1; ehat < e; ++ehat) {
      ShiftParam p(e, ehat);
      BlockVector cur = bv(e, {5, 0, 2, 1});
      for (long long t = 0; t < p.d(); ++t) cur = sigma_block(cur, p);
      EXPECT_EQ(cur, bv(e, {5, 0, 2, 1})) << "e=" << e << " ehat=" << ehat;
      EXPECT_EQ(sigma_block(const_one(e), p), const_one(e));
    }
}

TEST(SigmaBlock, WeightShiftsByCoefficientDifference) {
  for (const Partition& lam : partitions_up_to(10))
    for (long long e : {2LL, 3LL, 4LL})
      for (long long ehat = 1; ehat < e; ++ehat) {
        ShiftParam p(e, ehat);
        BlockVector alpha = block_of_partition(lam, 0, e);
        EXPECT_EQ(block_weight(sigma_block(alpha, p), {0}),
                  block_weight(alpha, {0}) + alpha.coeff(ehat) - alpha.coeff(0))
            << lam.to_string() << " e=" << e << " ehat=" << ehat;
      }
}

TEST(SigmaCore, HandComputedInstance) {
  EXPECT_EQ(sigma_core(Partition({3, 2, 1}), ShiftParam(2, 1)), Partition({4, 3, 2, 1}));
  EXPECT_THROW(sigma_core(Partition({2}), ShiftParam(2, 1)), std::domain_error);
}

TEST(SigmaCore, RotatesTheFirstGapVector) {
  for (long long e : {2LL, 3LL, 4LL})
    for (long long n = 0; n <= 10; ++n)
      for (const Partition& c : e_cores_of(n, e))
        for (long long ehat = 1; ehat < e; ++ehat) {
          ShiftParam p(e, ehat);
          Partition mu = sigma_core(c, p);
          std::vector<long long> x = x_vector(c, 0, e), xs = x_vector(mu, 0, e);
          for (long long i = 0; i < e; ++i)
            EXPECT_EQ(xs[static_cast<std::size_t>(i)],
                      x[static_cast<std::size_t>(math_mod(i + ehat, e))])
                << c.to_string() << " e=" << e << " ehat=" << ehat;
          // Block identity: alpha(sigma-tilde) = sigma(alpha) + (c_0 - c_ehat) * 1.
          BlockVector alpha = block_of_partition(c, 0, e);
          EXPECT_EQ(block_of_partition(mu, 0, e),
                    sigma_block(alpha, p) + const_one(e) * (alpha.coeff(0) - alpha.coeff(ehat)));
        }
}

TEST(SigmaCore, HasOrderD) {
  for (long long e : {2LL, 3LL, 6LL})
    for (long long n = 0; n <= 8; ++n)
      for (const Partition& c : e_cores_of(n, e))
        for (long long ehat = 1; ehat < e; ++ehat) {
          ShiftParam p(e, ehat);
          Partition cur = c;
          for (long long t = 0; t < p.d(); ++t) cur = sigma_core(cur, p);
          EXPECT_EQ(cur, c) << c.to_string() << " e=" << e << " ehat=" << ehat;
        }
}

TEST(SigmaPartition, HandComputedInstance) {
  EXPECT_EQ(sigma_partition(Partition({2}), ShiftParam(2, 1)), Partition({1, 1}));
  EXPECT_EQ(sigma_partition(Partition({1, 1}), ShiftParam(2, 1)), Partition({2}));
}

TEST(SigmaPartition, RunnerRotationInvariants) {
  for (const Partition& lam : partitions_up_to(10))
    for (long long e : {2LL, 3LL, 6LL})
      for (long long ehat = 1; ehat < e; ++ehat) {
        ShiftParam p(e, ehat);
        Partition mu = sigma_partition(lam, p);
        EXPECT_EQ(e_weight(mu, e), e_weight(lam, e));
        EXPECT_EQ(e_core(mu, e), sigma_core(e_core(lam, e), p));
        auto q = e_quotient(lam, 0, e), qs = e_quotient(mu, 0, e);
        for (long long i = 0; i < e; ++i)
          EXPECT_EQ(qs[static_cast<std::size_t>(i)],
                    q[static_cast<std::size_t>(math_mod(i + ehat, e))]);
        // Block identity and the size criterion.
        BlockVector alpha = block_of_partition(lam, 0, e);
        BlockVector expect = sigma_block(alpha, p) + const_one(e) * (alpha.coeff(0) - alpha.coeff(ehat));
        EXPECT_EQ(block_of_partition(mu, 0, e), expect);
        EXPECT_EQ(mu.size() == lam.size(), alpha.coeff(0) == alpha.coeff(ehat));
        Partition cur = lam;
        for (long long t = 0; t < p.d(); ++t) cur = sigma_partition(cur, p);
        EXPECT_EQ(cur, lam);
      }
}

TEST(Membership, HandComputedInstances) {
  ShiftParam p(2, 1);
  EXPECT_EQ(shift_block_membership(block_of_partition(Partition({3, 2, 1}), 0, 2), p),
            ShiftMembership::not_block);
  EXPECT_EQ(shift_block_membership(block_of_partition(Partition({2}), 0, 2), p),
            ShiftMembership::block_not_core);
  EXPECT_EQ(shift_block_membership(block_of_partition(Partition{}, 0, 2), p),
            ShiftMembership::block_and_core);
  EXPECT_EQ(shift_block_membership(block_of_partition(Partition({2, 1, 1}), 0, 3), ShiftParam(3, 2)),
            ShiftMembership::block_and_core);
  EXPECT_EQ(to_string(ShiftMembership::not_block), "not-block");
  EXPECT_THROW(shift_block_membership(bv(2, {0, 1}), p), std::domain_error);
}

TEST(Membership, AgreesWithDirectTests) {
  for (const Partition& lam : partitions_up_to(10))
    for (long long e : {2LL, 3LL})
      for (long long ehat = 1; ehat < e; ++ehat) {
        ShiftParam p(e, ehat);
        BlockVector alpha = block_of_partition(lam, 0, e);
        BlockVector shifted = sigma_block(alpha, p);
        ShiftMembership m = shift_block_membership(alpha, p);
        EXPECT_EQ(m != ShiftMembership::not_block, is_level_one_block(shifted, 0))
            << lam.to_string() << " e=" << e;
        if (m != ShiftMembership::not_block) {
          EXPECT_EQ(m == ShiftMembership::block_and_core, block_weight(shifted, {0}) == 0);
          // The landing block's core partition is sigma-tilde of lambda's core.
          EXPECT_EQ(core_partition_of_block(shifted, 0), sigma_core(e_core(lam, e), p));
        }
      }
}

TEST(Projection, FoldsResidueCounts) {
  for (const Partition& lam : partitions_up_to(8))
    for (auto [e, ehat] : std::vector<std::pair<long long, long long>>{{4, 2}, {6, 3}, {6, 2}, {2, 1}}) {
      ShiftParam p(e, ehat);
      BlockVector alpha = block_of_partition(lam, 0, e);
      EXPECT_EQ(pi_project(alpha, p), block_of_partition(lam, 0, ehat))
          << lam.to_string() << " e=" << e << " ehat=" << ehat;
      EXPECT_EQ(pi_project(sigma_block(alpha, p), p), pi_project(alpha, p));
    }
  EXPECT_THROW(pi_project(bv(6, {1, 1, 1, 1, 1, 1}), ShiftParam(6, 4)), std::invalid_argument);
}

TEST(Stuttering, WitnessForTheSquareBlock) {
  // alpha = 2*alpha_0 + 2*alpha_1 is sigma-fixed with weight 2 = d * 1.
  ShiftParam p(2, 1);
  BlockVector alpha = bv(2, {2, 2});
  ASSERT_TRUE(is_stuttering_block(alpha, p));
  Partition mu = stuttering_witness(alpha, p);
  EXPECT_EQ(mu, Partition({2, 2}));
  EXPECT_TRUE(is_stuttering_partition(mu, p));
  EXPECT_EQ(block_of_partition(mu, 0, 2), alpha);
}

TEST(Stuttering, WitnessLiesInTheBlockAndIsFixed) {
  for (auto [e, ehat] : std::vector<std::pair<long long, long long>>{{2, 1}, {4, 2}, {4, 1}, {6, 3}}) {
    ShiftParam p(e, ehat);
    long long found = 0;
    for (const Partition& lam : partitions_up_to(10)) {
      BlockVector alpha = block_of_partition(lam, 0, e);
      if (!is_stuttering_block(alpha, p)) continue;
      if (block_weight(alpha, {0}) % p.d() != 0) continue;
      Partition mu = stuttering_witness(alpha, p);
      EXPECT_TRUE(is_stuttering_partition(mu, p)) << alpha.to_string();
      EXPECT_EQ(block_of_partition(mu, 0, e), alpha);
      ++found;
    }
    EXPECT_GT(found, 0) << "e=" << e << " ehat=" << ehat;
  }
}

TEST(Stuttering, WitnessErrorPaths) {
  ShiftParam p(2, 1);
  EXPECT_THROW(stuttering_witness(bv(2, {2, 1}), p), std::domain_error);  // not sigma-fixed
  EXPECT_THROW(stuttering_witness(bv(2, {1, 1}), p), std::domain_error);  // w = 1, d = 2
  EXPECT_THROW(stuttering_witness(bv(6, {1, 1, 1, 1, 1, 1}), ShiftParam(6, 4)),
               std::invalid_argument);  // needs ehat | e
}

TEST(Stuttering, FixedPartitionsForceFixedBlocksAndDivisibleWeight) {
  for (const Partition& lam : partitions_up_to(12))
    for (long long e : {2LL, 3LL, 4LL, 6LL})
      for (long long ehat = 1; ehat < e; ++ehat) {
        ShiftParam p(e, ehat);
        if (!is_stuttering_partition(lam, p)) continue;
        EXPECT_TRUE(is_stuttering_block(block_of_partition(lam, 0, e), p)) << lam.to_string();
        EXPECT_EQ(e_weight(lam, e) % p.d(), 0) << lam.to_string() << " e=" << e;
      }
}

TEST(Stuttering, SizesAreMultiplesOfFourAtModTwo) {
  ShiftParam p(2, 1);
  for (const Partition& lam : partitions_up_to(12))
    if (is_stuttering_partition(lam, p)) EXPECT_EQ(lam.size() % 4, 0) << lam.to_string();
}

TEST(EhatCores, StatementsHoldOnTheWindow) {
  long long core_cases = 0, member_cases = 0;
  for (auto [e, ehat] : std::vector<std::pair<long long, long long>>{{4, 2}, {6, 2}, {6, 3}, {4, 1}}) {
    ShiftParam p(e, ehat);
    for (const Partition& lam : partitions_up_to(10)) {
      EhatCoreReport rep = ehat_core_checks(lam, p);
      EXPECT_TRUE(rep.ok()) << lam.to_string() << " e=" << e << " ehat=" << ehat;
      core_cases += rep.core_case_applies ? 1 : 0;
      member_cases += rep.sigma_block_member ? 1 : 0;
    }
  }
  EXPECT_GT(core_cases, 0);
  EXPECT_GT(member_cases, 0);
}

}  // namespace
