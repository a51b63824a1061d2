#pragma once

// Slow reference implementations used to compute expected values for the
// fast library code. Everything here works directly on Young diagrams and
// deliberately avoids beta-numbers and abaci.

#include <algorithm>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "coreblocks/blockvector.hpp"
#include "coreblocks/partition.hpp"

namespace oracles {

using coreblocks::BlockVector;
using coreblocks::Charge;
using coreblocks::Partition;

inline std::set<std::pair<long long, long long>> cells(const Partition& lam) {
  std::set<std::pair<long long, long long>> out;
  for (long long a = 1; a <= lam.height(); ++a)
    for (long long b = 1; b <= lam.part(a); ++b) out.insert({a, b});
  return out;
}

// All partitions mu inside lambda with |mu| = m.
inline std::vector<Partition> subpartitions_of_size(const Partition& lam, long long m) {
  std::vector<Partition> out;
  std::vector<long long> rows;
  auto rec = [&](auto&& self, long long a, long long prev, long long rest) -> void {
    if (rest == 0) {
      out.push_back(Partition(rows));
      return;
    }
    if (a > lam.height()) return;
    long long cap = std::min(prev, lam.part(a));
    for (long long v = std::min(cap, rest); v >= 1; --v) {
      rows.push_back(v);
      self(self, a + 1, v, rest - v);
      rows.pop_back();
    }
  };
  if (m == 0) return {Partition{}};
  rec(rec, 1, lam.height() > 0 ? lam.part(1) : 0, m);
  return out;
}

// Is the skew diagram lambda/mu a single border strip: connected, no 2x2 block?
inline bool is_border_strip(const Partition& lam, const Partition& mu) {
  auto big = cells(lam), small = cells(mu);
  for (const auto& c : small)
    if (!big.count(c)) return false;
  std::set<std::pair<long long, long long>> skew;
  for (const auto& c : big)
    if (!small.count(c)) skew.insert(c);
  if (skew.empty()) return false;
  for (const auto& [a, b] : skew)
    if (skew.count({a, b + 1}) && skew.count({a + 1, b}) && skew.count({a + 1, b + 1}))
      return false;
  std::deque<std::pair<long long, long long>> queue = {*skew.begin()};
  std::set<std::pair<long long, long long>> seen = {*skew.begin()};
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (auto [da, db] : {std::pair{1LL, 0LL}, {-1LL, 0LL}, {0LL, 1LL}, {0LL, -1LL}}) {
      std::pair<long long, long long> next{a + da, b + db};
      if (skew.count(next) && !seen.count(next)) {
        seen.insert(next);
        queue.push_back(next);
      }
    }
  }
  return seen.size() == skew.size();
}

// All results of removing one l-rim hook, by brute force over subdiagrams.
inline std::vector<Partition> rim_hook_removals(const Partition& lam, long long l) {
  std::vector<Partition> out;
  if (l < 1 || l > lam.size()) return out;
  for (const Partition& mu : subpartitions_of_size(lam, lam.size() - l))
    if (is_border_strip(lam, mu)) out.push_back(mu);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_e_core(const Partition& lam, long long e) {
  return e == 0 || rim_hook_removals(lam, e).empty();
}

// Repeated removal; the endpoint is removal-order independent.
inline std::pair<Partition, long long> core_and_weight(Partition lam, long long e) {
  long long steps = 0;
  if (e == 0) return {lam, 0};
  for (;;) {
    auto next = rim_hook_removals(lam, e);
    if (next.empty()) return {lam, steps};
    lam = next.front();
    ++steps;
  }
}

// Node-by-node residue multiset.
inline BlockVector residue_counts(const Partition& lam, Charge s, long long e) {
  BlockVector out(e);
  for (long long a = 1; a <= lam.height(); ++a)
    for (long long b = 1; b <= lam.part(a); ++b) {
      long long res = b - a + s;
      out.add_coeff(e >= 1 ? coreblocks::math_mod(res, e) : res, 1);
    }
  return out;
}

}  // namespace oracles
