#pragma once

#include <algorithm>
#include <vector>

#include "coreblocks/abacus.hpp"
#include "coreblocks/common.hpp"
#include "coreblocks/partition.hpp"

namespace coreblocks {

/// A removable rim hook, identified by its corner node (topmost row,
/// leftmost column of the strip) together with the partition left behind.
struct RimHookRemoval {
  Node corner;
  Partition result;
  auto operator<=>(const RimHookRemoval&) const = default;
};

namespace detail {

// Applies the beta-move b -> b' to the head of a charge-0 beta-sequence.
inline Partition beta_move(const BetaSequence& beta, long long b, long long bp) {
  std::vector<long long> head(beta.head());
  head.erase(std::remove(head.begin(), head.end(), b), head.end());
  // Tail entries can move too: materialise enough of the tail to cover b.
  long long m = static_cast<long long>(beta.head().size());
  Charge s = beta.charge();
  for (long long a = m + 1; s - a >= std::min(b, bp); ++a)
    if (s - a != b) head.push_back(s - a);
  head.push_back(bp);
  std::sort(head.begin(), head.end(), std::greater<>());
  return BetaSequence(s, std::move(head)).partition();
}

inline Node hook_corner(const Partition& lambda, const Partition& mu) {
  long long first = 0, last = 0;
  for (long long a = 1; a <= lambda.height(); ++a) {
    if (lambda.part(a) != mu.part(a)) {
      if (first == 0) first = a;
      last = a;
    }
  }
  return Node{first, mu.part(last) + 1};
}

}  // namespace detail

/// All ways to remove an l-rim-hook: beta-numbers b with b - l absent.
/// Results are sorted by corner node (top to bottom).
inline std::vector<RimHookRemoval> removable_rim_hooks(const Partition& lambda, long long l) {
  require(l >= 1, "rim hook length must be >= 1");
  BetaSequence beta = BetaSequence::of(lambda, 0);
  std::vector<RimHookRemoval> out;
  for (long long b : beta.head()) {
    if (beta.contains(b - l)) continue;
    Partition mu = detail::beta_move(beta, b, b - l);
    out.push_back(RimHookRemoval{detail::hook_corner(lambda, mu), mu});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All partitions obtained by wrapping an l-rim-hook onto lambda: beta-moves
/// b -> b + l with b present and b + l absent. There are always at least l of
/// them. Sorted.
inline std::vector<Partition> add_rim_hook_results(const Partition& lambda, long long l) {
  require(l >= 1, "rim hook length must be >= 1");
  BetaSequence beta = BetaSequence::of(lambda, 0);
  long long m = static_cast<long long>(beta.head().size());
  std::vector<long long> candidates(beta.head());
  for (long long a = m + 1; a <= m + l; ++a) candidates.push_back(beta.charge() - a);
  std::vector<Partition> out;
  for (long long b : candidates) {
    if (beta.contains(b + l)) continue;
    out.push_back(detail::beta_move(beta, b, b + l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coreblocks
