#pragma once

#include <map>

#include "coreblocks/blockvector.hpp"
#include "coreblocks/common.hpp"
#include "coreblocks/partition.hpp"

namespace coreblocks {

/// res(a, b) = b - a + s, reduced mod e when e >= 1 and taken in Z when e = 0.
inline long long residue(const Node& nd, Charge s, long long e) {
  require(e >= 0, "modulus must be >= 0");
  long long raw = checked_add(checked_sub(nd.col, nd.row), s);
  return e >= 1 ? math_mod(raw, e) : raw;
}

/// c_i^s(lambda): number of nodes of each residue. Row a contributes the
/// consecutive residues s+1-a .. s+lambda_a-a, so rows are added as ranges
/// rather than node by node.
inline BlockVector residue_counts(const Partition& lambda, Charge s, long long e) {
  require(e >= 0, "modulus must be >= 0");
  BlockVector c(e);
  if (e >= 1) {
    for (long long a = 1; a <= lambda.height(); ++a) {
      long long len = lambda.part(a);
      long long full = len / e, rem = len % e;
      if (full > 0)
        for (long long i = 0; i < e; ++i) c.add_coeff(i, full);
      long long lo = math_mod(checked_add(checked_sub(s, a), 1), e);
      for (long long t = 0; t < rem; ++t) c.add_coeff(lo + t, 1);
    }
    return c;
  }
  check_resource(lambda.empty() || checked_add(lambda.part(1), lambda.height()) <= 1000000,
                 "e = 0 residue support too large");
  for (long long a = 1; a <= lambda.height(); ++a)
    for (long long b = 1; b <= lambda.part(a); ++b) c.add_coeff(b - a + s, 1);
  return c;
}

/// w_s(lambda) = c_s - (1/2) sum_i (c_i - c_{i+1})^2, the level-one weight of
/// the partition's residue counts.
inline long long charge_weight(const Partition& lambda, Charge s, long long e) {
  return block_weight(residue_counts(lambda, s, e), Multicharge{s});
}

}  // namespace coreblocks
