#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "coreblocks/abacus.hpp"
#include "coreblocks/blockvector.hpp"
#include "coreblocks/common.hpp"
#include "coreblocks/enumerate.hpp"
#include "coreblocks/partition.hpp"
#include "coreblocks/residues.hpp"

namespace coreblocks {

/// alpha^s(lambda) = sum_i c_i alpha_i, the block label of a partition.
inline BlockVector block_of_partition(const Partition& lambda, Charge s, long long e) {
  return residue_counts(lambda, s, e);
}

/// alpha^S(Lambda) for a multipartition: componentwise sum of block labels.
inline BlockVector multi_block(const std::vector<Partition>& comps, const Multicharge& charges,
                               long long e) {
  require(comps.size() == charges.size() && !comps.empty(),
          "multipartition and multicharge sizes must match");
  BlockVector alpha(e);
  for (std::size_t j = 0; j < comps.size(); ++j)
    alpha += residue_counts(comps[j], charges[j], e);
  return alpha;
}

/// Level-one membership test: alpha is the block label of some partition at
/// charge s. For e >= 1 this is exactly w_s(alpha) >= 0 over the whole
/// lattice; for e = 0 it is the difference conditions c_i - c_{i+1} in {0,1}
/// for i >= s and {0,-1} for i < s (which force w = 0).
inline bool is_level_one_block(const BlockVector& alpha, Charge s) {
  long long e = alpha.modulus();
  if (e >= 1) return block_weight(alpha, Multicharge{s}) >= 0;
  std::set<long long> idx;
  for (long long i : alpha.support()) {
    idx.insert(i);
    idx.insert(i - 1);
  }
  for (long long i : idx) {
    long long d = alpha.coeff(i) - alpha.coeff(i + 1);
    if (i >= s ? (d != 0 && d != 1) : (d != 0 && d != -1)) return false;
  }
  return true;
}

/// The unique e-core whose block is the weight-zero shift of alpha (the
/// partition lying in alpha - w(alpha)*1; for e = 0 the unique partition in
/// alpha itself). Requires level-one membership.
inline Partition core_partition_of_block(const BlockVector& alpha, Charge s) {
  require_domain(is_level_one_block(alpha, s), "not a level-one block");
  long long e = alpha.modulus();
  YVector y(e);
  if (e >= 1) {
    for (long long i = 0; i < e; ++i)
      y.set_coeff(i, checked_sub(alpha.coeff(i), alpha.coeff(i + 1)));
  } else {
    for (long long i : alpha.support()) {
      y.set_coeff(i, checked_sub(alpha.coeff(i), alpha.coeff(i + 1)));
      y.set_coeff(i - 1, checked_sub(alpha.coeff(i - 1), alpha.coeff(i)));
    }
  }
  return core_from_y(y, s, e);
}

/// (y, w) coordinates of a level-one block: y from consecutive differences,
/// w the weight. Bijective onto {sum y = 0} x {w >= 0} for e >= 1.
inline std::pair<YVector, long long> parametrise(const BlockVector& alpha, Charge s) {
  require(alpha.modulus() >= 1, "parametrise needs e >= 1");
  require_domain(is_level_one_block(alpha, s), "not a level-one block");
  long long e = alpha.modulus();
  YVector y(e);
  for (long long i = 0; i < e; ++i)
    y.set_coeff(i, checked_sub(alpha.coeff(i), alpha.coeff(i + 1)));
  return {y, block_weight(alpha, Multicharge{s})};
}

/// Inverse of parametrise:
/// alpha = (|y|^2/2 + w) * 1 - sum_{i=1}^{e-1} (y_s + ... + y_{s+i-1}) alpha_{s+i}.
inline BlockVector deparametrise(const YVector& y, long long w, Charge s) {
  long long e = y.modulus();
  require(e >= 1, "deparametrise needs e >= 1");
  validate_y(y, s);
  require_domain(w >= 0, "weight must be >= 0");
  long long norm2 = 0;
  for (long long i = 0; i < e; ++i)
    norm2 = checked_add(norm2, checked_mul(y.coeff(i), y.coeff(i)));
  BlockVector alpha = const_one(e) * checked_add(norm2 / 2, w);
  long long acc = 0;
  for (long long i = 1; i < e; ++i) {
    acc = checked_add(acc, y.coeff(s + i - 1));
    alpha.add_coeff(s + i, -acc);
  }
  return alpha;
}

namespace detail {

// Enumerates all componentwise 0 <= gamma <= beta (e >= 1) or all sparse
// vectors 0 <= gamma <= beta (e = 0) and feeds them to fn.
template <typename Fn>
void for_each_subvector(const BlockVector& beta, Fn&& fn) {
  std::vector<long long> idx = beta.support();
  BlockVector cur(beta.modulus());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == idx.size()) {
      fn(cur);
      return;
    }
    long long cap = beta.coeff(idx[pos]);
    for (long long v = 0; v <= cap; ++v) {
      cur.set_coeff(idx[pos], v);
      self(self, pos + 1);
    }
    cur.set_coeff(idx[pos], 0);
  };
  rec(rec, 0);
}

}  // namespace detail

/// Membership of alpha in the set of block labels of r-multipartitions with
/// multicharge S. Decided by decomposing alpha into level-one blocks, one per
/// component, over the componentwise-dominated lattice vectors.
/// Desk-scale guard on |alpha|.
inline bool is_block(const BlockVector& alpha, const Multicharge& charges,
                     long long size_limit = 64) {
  require(!charges.empty(), "multicharge must be nonempty");
  if (!alpha.all_nonnegative()) return false;
  check_resource(alpha.total() <= size_limit, "is_block: |alpha| exceeds guard");
  std::size_t r = charges.size();
  if (r == 1) return is_level_one_block(alpha, charges[0]);
  std::map<std::pair<std::size_t, BlockVector>, bool> memo;
  auto rec = [&](auto&& self, std::size_t j, const BlockVector& rest) -> bool {
    if (j + 1 == r) return is_level_one_block(rest, charges[j]);
    auto key = std::make_pair(j, rest);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool found = false;
    detail::for_each_subvector(rest, [&](const BlockVector& gamma) {
      if (found || !is_level_one_block(gamma, charges[j])) return;
      if (self(self, j + 1, rest - gamma)) found = true;
    });
    memo.emplace(key, found);
    return found;
  };
  return rec(rec, 0, alpha);
}

/// The s-core of alpha: the unique core block alpha - h*1 together with
/// h = max{k : alpha - k*1 is a block}. alpha is a block iff h >= 0.
/// Requires e >= 1 (for e = 0 adding 1 is a no-op and every block is core).
inline std::pair<BlockVector, long long> s_core_of_block(const BlockVector& alpha,
                                                         const Multicharge& charges,
                                                         long long size_limit = 64) {
  long long e = alpha.modulus();
  require(e >= 1, "s-core needs e >= 1");
  require(!charges.empty(), "multicharge must be nonempty");
  long long r = static_cast<long long>(charges.size());
  // alpha - k*1 is a block for every k <= max_j w_{s_j}(alpha), and fails
  // whenever the weight w(alpha) - r*k turns negative; walk the gap upward.
  long long k0 = block_weight(alpha, Multicharge{charges[0]});
  for (Charge s : charges) k0 = std::max(k0, block_weight(alpha, Multicharge{s}));
  long long w = block_weight(alpha, charges);
  long long kmax = floor_div(checked_sub(w, checked_mul(r, k0)) >= 0 ? w : checked_mul(r, k0), r);
  long long h = k0;
  for (long long k = k0 + 1; k <= kmax; ++k) {
    BlockVector cand = alpha - const_one(e) * k;
    if (!cand.all_nonnegative() || !is_block(cand, charges, size_limit)) break;
    h = k;
  }
  return {alpha - const_one(e) * h, h};
}

/// Core blocks: blocks alpha with alpha - 1 not a block (e >= 1), or any
/// block at all (e = 0, where no multipartition has an e-rim-hook).
inline bool is_core_block(const BlockVector& alpha, const Multicharge& charges,
                          long long size_limit = 64) {
  if (!is_block(alpha, charges, size_limit)) return false;
  if (alpha.modulus() == 0) return true;
  BlockVector down = alpha - const_one(alpha.modulus());
  return !(down.all_nonnegative() && is_block(down, charges, size_limit));
}

/// All block labels of r-multipartitions of n (deduplicated).
inline std::set<BlockVector> enumerate_blocks(const Multicharge& charges, long long e,
                                              long long n, long long n_limit = 24) {
  require(!charges.empty(), "multicharge must be nonempty");
  check_resource(n <= n_limit, "enumerate_blocks: n exceeds guard");
  std::set<BlockVector> out;
  for (const auto& comps : multipartitions_of(n, static_cast<long long>(charges.size())))
    out.insert(multi_block(comps, charges, e));
  return out;
}

}  // namespace coreblocks
