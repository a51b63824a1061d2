#pragma once

#include <vector>

#include "coreblocks/abacus.hpp"
#include "coreblocks/partition.hpp"

namespace coreblocks {

/// All partitions of n, in lexicographically decreasing part order.
inline std::vector<Partition> partitions_of(long long n) {
  require(n >= 0, "partition size must be >= 0");
  std::vector<Partition> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long rest, long long maxp) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (long long p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// All partitions of 0..n.
inline std::vector<Partition> partitions_up_to(long long n) {
  std::vector<Partition> out;
  for (long long k = 0; k <= n; ++k) {
    auto pk = partitions_of(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

/// The e-cores among the partitions of n.
inline std::vector<Partition> e_cores_of(long long n, long long e) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_of(n))
    if (is_e_core(p, e)) out.push_back(p);
  return out;
}

/// All r-component multipartitions of total size n.
inline std::vector<std::vector<Partition>> multipartitions_of(long long n, long long r) {
  require(r >= 1, "need at least one component");
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur;
  auto rec = [&](auto&& self, long long rest, long long comp) -> void {
    if (comp == r) {
      for (const Partition& p : partitions_of(rest)) {
        cur.push_back(p);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (long long k = 0; k <= rest; ++k)
      for (const Partition& p : partitions_of(k)) {
        cur.push_back(p);
        self(self, rest - k, comp + 1);
        cur.pop_back();
      }
  };
  rec(rec, n, 1);
  return out;
}

}  // namespace coreblocks
