#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "coreblocks/abacus.hpp"
#include "coreblocks/blocks.hpp"
#include "coreblocks/blockvector.hpp"
#include "coreblocks/common.hpp"
#include "coreblocks/partition.hpp"

namespace coreblocks {

/// An r-tuple of partitions. Literal form joins component literals with '|':
/// "4,3,3,1|-|2,1".
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
    require(!comps_.empty(), "multipartition needs at least one component");
  }

  const std::vector<Partition>& components() const { return comps_; }
  long long level() const { return static_cast<long long>(comps_.size()); }
  const Partition& component(long long j) const {
    require(j >= 0 && j < level(), "component index out of range");
    return comps_[static_cast<std::size_t>(j)];
  }

  long long size() const {
    long long n = 0;
    for (const Partition& p : comps_) n = checked_add(n, p.size());
    return n;
  }

  auto operator<=>(const Multipartition&) const = default;

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      if (j) os << '|';
      os << comps_[j].to_string();
    }
    return os.str();
  }

  static Multipartition parse(const std::string& text) {
    std::vector<Partition> comps;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, '|')) comps.push_back(Partition::parse(tok));
    if (comps.empty()) comps.push_back(Partition{});
    return Multipartition(std::move(comps));
  }

 private:
  std::vector<Partition> comps_;
};

inline bool is_multicore(const Multipartition& mp, long long e) {
  for (const Partition& p : mp.components())
    if (!is_e_core(p, e)) return false;
  return true;
}

/// Componentwise e-core.
inline Multipartition multicore_of(const Multipartition& mp, long long e) {
  std::vector<Partition> comps;
  for (const Partition& p : mp.components()) comps.push_back(e_core(p, e));
  return Multipartition(std::move(comps));
}

inline BlockVector multi_block(const Multipartition& mp, const Multicharge& charges,
                               long long e) {
  return multi_block(mp.components(), charges, e);
}

/// w^S(Lambda) computed from the definition on the summed block label.
inline long long multi_weight(const Multipartition& mp, const Multicharge& charges,
                              long long e) {
  require(static_cast<long long>(charges.size()) == mp.level(),
          "multicharge and multipartition sizes must match");
  return block_weight(multi_block(mp, charges, e), charges);
}

/// Pairwise evaluator for multicores: the weight is the sum over component
/// pairs of the corresponding bipartition weights.
inline long long multi_weight_pairwise(const Multipartition& mp, const Multicharge& charges,
                                       long long e) {
  require(static_cast<long long>(charges.size()) == mp.level(),
          "multicharge and multipartition sizes must match");
  require_domain(is_multicore(mp, e), "pairwise weight formula needs a multicore");
  long long w = 0;
  for (long long j = 0; j < mp.level(); ++j)
    for (long long k = j + 1; k < mp.level(); ++k) {
      std::vector<Partition> pair{mp.component(j), mp.component(k)};
      Multicharge pc{charges[static_cast<std::size_t>(j)], charges[static_cast<std::size_t>(k)]};
      w = checked_add(w, block_weight(multi_block(pair, pc, e), pc));
    }
  return w;
}

/// x-vectors of all components of a multicore, with the derived quantities
/// gamma_{i,jk} = x_{ij} - x_{ik} and u_{j,k}.
class GammaTable {
 public:
  GammaTable(const Multipartition& mp, const Multicharge& charges, long long e)
      : e_(e), charges_(charges) {
    require(e >= 1, "gamma table needs e >= 1");
    require(static_cast<long long>(charges.size()) == mp.level(),
            "multicharge and multipartition sizes must match");
    require_domain(is_multicore(mp, e), "gamma table is defined for multicores");
    for (long long j = 0; j < mp.level(); ++j)
      x_.push_back(x_vector(mp.component(j), charges[static_cast<std::size_t>(j)], e));
  }

  long long level() const { return static_cast<long long>(x_.size()); }
  long long modulus() const { return e_; }

  long long x(long long i, long long j) const {
    return x_[static_cast<std::size_t>(j)][static_cast<std::size_t>(math_mod(i, e_))];
  }

  /// gamma_{i,jk} = x_{ij} - x_{ik}; depends on the multicharge.
  long long gamma(long long i, long long j, long long k) const { return x(i, j) - x(i, k); }

  /// gamma_{il,jk} = gamma_{i,jk} - gamma_{l,jk}; invariant under compatible
  /// multicharge shifts.
  long long gamma_pair(long long i, long long l, long long j, long long k) const {
    return gamma(i, j, k) - gamma(l, j, k);
  }

  long long max_gamma(long long j, long long k) const {
    long long m = gamma(0, j, k);
    for (long long i = 1; i < e_; ++i) m = std::max(m, gamma(i, j, k));
    return m;
  }

  /// u_{j,k} = 0 if s_j = s_k, else -(y_{s_j} + ... + y_{s_j+i-1}) of
  /// component j, where i >= 1 and i = s_k - s_j mod e. A full cycle of y
  /// sums to zero, so congruent charges give u = 0 as well.
  long long u(long long j, long long k) const {
    Charge sj = charges_[static_cast<std::size_t>(j)], sk = charges_[static_cast<std::size_t>(k)];
    if (sj == sk) return 0;
    long long i = math_mod(sk - sj, e_);
    if (i == 0) return 0;
    std::vector<long long> x0 = x_empty(sj, e_);
    long long acc = 0;
    for (long long t = 0; t < i; ++t) {
      long long idx = math_mod(sj + t, e_);
      acc = checked_add(acc, x(idx, j) - x0[static_cast<std::size_t>(idx)]);
    }
    return -acc;
  }

 private:
  long long e_;
  Multicharge charges_;
  std::vector<std::vector<long long>> x_;
};

/// Bicore evaluator: valid when every gamma_{il,12} <= 2, i.e. the x-vector
/// differences have range at most 2. The weight is then
/// min(#{i : gamma_i maximal}, #{l : gamma_l minimal}) if the range is
/// exactly 2, and 0 otherwise.
inline long long multi_weight_min_sets(const Multipartition& mp, const Multicharge& charges,
                                       long long e) {
  require(mp.level() == 2 && charges.size() == 2, "min-sets evaluator needs a bipartition");
  GammaTable g(mp, charges, e);
  long long lo = g.gamma(0, 0, 1), hi = lo;
  for (long long i = 1; i < e; ++i) {
    lo = std::min(lo, g.gamma(i, 0, 1));
    hi = std::max(hi, g.gamma(i, 0, 1));
  }
  require_domain(hi - lo <= 2, "min-sets evaluator needs all gamma_{il,12} <= 2");
  if (hi - lo < 2) return 0;
  long long a = 0, b = 0;
  for (long long i = 0; i < e; ++i) {
    if (g.gamma(i, 0, 1) == hi) ++a;
    if (g.gamma(i, 0, 1) == lo) ++b;
  }
  return std::min(a, b);
}

/// Reduced multicores: multicores whose block is a core block. Characterised
/// by the existence of integers t_j with max_i gamma_{i,jk} + t_j - t_k <= 1
/// for all j != k; decided as a difference-constraint system by negative-
/// cycle detection (Bellman-Ford).
inline bool is_reduced_multicore(const Multipartition& mp, const Multicharge& charges,
                                 long long e) {
  GammaTable g(mp, charges, e);
  long long r = g.level();
  if (r == 1) return true;
  // Constraint t_j - t_k <= 1 - max_i gamma_{i,jk}: edge k -> j of that weight.
  std::vector<long long> dist(static_cast<std::size_t>(r), 0);
  for (long long pass = 0; pass < r; ++pass) {
    bool changed = false;
    for (long long j = 0; j < r; ++j)
      for (long long k = 0; k < r; ++k) {
        if (j == k) continue;
        long long w = 1 - g.max_gamma(j, k);
        if (dist[static_cast<std::size_t>(k)] + w < dist[static_cast<std::size_t>(j)]) {
          dist[static_cast<std::size_t>(j)] = dist[static_cast<std::size_t>(k)] + w;
          changed = true;
        }
      }
    if (!changed) return true;
  }
  return false;
}

/// Builds the reduced multicore attached to an e x r binary matrix (columns
/// given as bitmasks over elements 1..e) and integers b_1..b_e with
/// b_i = i (mod e). Component j's abacus has, on the runner of residue
/// i mod e, all beads at values <= b_i + e*(bit i of mask_j). Returns the
/// multicharge (forced by the bead counts) and the multicore.
inline std::pair<Multicharge, Multipartition> build_reduced_multicore(
    const std::vector<std::uint32_t>& masks, const std::vector<long long>& b, long long e) {
  require(e >= 1 && e <= 32, "matrix construction needs 1 <= e <= 32");
  require(!masks.empty(), "need at least one column");
  require(static_cast<long long>(b.size()) == e, "need exactly e row offsets");
  for (long long t = 0; t < e; ++t)
    require(math_mod(b[static_cast<std::size_t>(t)] - (t + 1), e) == 0,
            "row offset b_i must be congruent to i mod e");
  for (std::uint32_t m : masks)
    require(e == 32 || m < (std::uint32_t{1} << e), "column mask out of range");
  Multicharge charges;
  std::vector<Partition> comps;
  for (std::uint32_t m : masks) {
    std::vector<Runner> runners(static_cast<std::size_t>(e));
    for (long long t = 0; t < e; ++t) {
      long long top = b[static_cast<std::size_t>(t)] + (((m >> t) & 1u) ? e : 0);
      long long c = math_mod(t + 1, e);
      // Gap-free runner: beads at every value <= top in this class.
      runners[static_cast<std::size_t>(c)] = Runner{floor_div(top - c, e) + 1, Partition{}};
    }
    auto [core, s] = AbacusProfile::from_runners(e, std::move(runners)).to_partition();
    charges.push_back(s);
    comps.push_back(core);
  }
  return {charges, Multipartition(std::move(comps))};
}

}  // namespace coreblocks
