#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coreblocks/blocks.hpp"
#include "coreblocks/blockvector.hpp"
#include "coreblocks/common.hpp"
#include "coreblocks/residues.hpp"

namespace coreblocks {

/// A tuple of subsets of {1..e}, element i stored as bit i-1.
struct SubsetTuple {
  long long e = 0;
  std::vector<std::uint32_t> masks;

  auto operator<=>(const SubsetTuple&) const = default;

  /// "1,2|1,3|3,5"; the empty subset prints "-".
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (j) os << '|';
      bool any = false;
      for (long long i = 0; i < e; ++i)
        if ((masks[j] >> i) & 1u) {
          if (any) os << ',';
          os << (i + 1);
          any = true;
        }
      if (!any) os << '-';
    }
    return os.str();
  }
};

/// w(E, F) = min(|E|, |F|) - |E int F|: the weight of the bicore built from
/// columns E and F. Zero iff one of the sets contains the other.
inline long long pair_weight(std::uint32_t ea, std::uint32_t fb) {
  int pa = std::popcount(ea), pb = std::popcount(fb);
  return std::min(pa, pb) - std::popcount(ea & fb);
}

/// Sum of pair weights over all unordered column pairs.
inline long long tuple_weight(const SubsetTuple& t) {
  long long w = 0;
  for (std::size_t j = 0; j < t.masks.size(); ++j)
    for (std::size_t k = j + 1; k < t.masks.size(); ++k)
      w = checked_add(w, pair_weight(t.masks[j], t.masks[k]));
  return w;
}

/// q_e(x) = (1/2) <x, A x> for a sparse multiplicity vector over subsets.
inline long long q_form(const std::map<std::uint32_t, long long>& x, long long e) {
  require(e >= 1 && e <= 32, "q_form needs 1 <= e <= 32");
  long long q = 0;
  for (auto it = x.begin(); it != x.end(); ++it) {
    require(it->second >= 0, "multiplicities must be >= 0");
    for (auto jt = std::next(it); jt != x.end(); ++jt)
      q = checked_add(q,
                      checked_mul(checked_mul(it->second, jt->second),
                                  pair_weight(it->first, jt->first)));
  }
  return q;  // diagonal terms vanish: w(E, E) = 0
}

struct NExactResult {
  long long value = 0;
  SubsetTuple witness;
};

enum class NStrategy { full, equal_size };

struct NGuard {
  long long full_e = 6;
  long long full_r = 6;
  long long equal_e = 12;
  long long equal_r = 8;
};

namespace detail {

// Maximises the tuple weight over multisets of size r drawn from the pool,
// in non-decreasing pool order; records the first maximiser encountered.
inline void max_multiset_weight(const std::vector<std::uint32_t>& pool, long long r,
                                long long& best, std::vector<std::uint32_t>& best_tuple) {
  std::size_t m = pool.size();
  std::vector<long long> pw(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) pw[a * m + b] = pair_weight(pool[a], pool[b]);
  std::vector<long long> gain(m, 0);  // gain[f] = sum of pw[chosen][f]
  std::vector<std::size_t> cur;
  // chosen = |cur|, acc = tuple weight of cur, gain[f] = sum of pw[cur][f].
  auto rec = [&](auto&& self, std::size_t start, long long chosen, long long acc) -> void {
    if (chosen + 1 == r) {
      for (std::size_t f = start; f < m; ++f) {
        if (acc + gain[f] > best) {
          best = acc + gain[f];
          best_tuple.clear();
          for (std::size_t c : cur) best_tuple.push_back(pool[c]);
          best_tuple.push_back(pool[f]);
        }
      }
      return;
    }
    for (std::size_t f = start; f < m; ++f) {
      long long acc2 = acc + gain[f];
      cur.push_back(f);
      for (std::size_t g = 0; g < m; ++g) gain[g] += pw[f * m + g];
      self(self, f, chosen + 1, acc2);
      for (std::size_t g = 0; g < m; ++g) gain[g] -= pw[f * m + g];
      cur.pop_back();
    }
  };
  if (r == 1) {
    if (best < 0 && !pool.empty()) {
      best = 0;
      best_tuple = {pool[0]};
    }
    return;
  }
  rec(rec, 0, 0, 0);
}

inline std::vector<std::uint32_t> subsets_of_size(long long e, long long k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << e); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

}  // namespace detail

/// N(r, e): the maximal weight of a reduced e-multicore of level r, computed
/// as the maximum of q_e over multiplicity vectors of mass r.
///
/// full: scans all multisets of size r over the 2^e subsets.
/// equal_size: scans single-size pools k = floor(e/2) .. 1 (complements cover
/// k > e/2), skipping any k whose spectral cap floor(r^2 k (e-k) / 2e) cannot
/// beat the best value so far. Both strategies agree.
inline NExactResult n_exact(long long r, long long e, NStrategy strategy,
                            const NGuard& guard = {}) {
  require(r >= 1 && e >= 1, "need r >= 1 and e >= 1");
  NExactResult res;
  res.witness.e = e;
  long long best = -1;
  std::vector<std::uint32_t> best_tuple;
  if (strategy == NStrategy::full) {
    check_resource(e <= guard.full_e && r <= guard.full_r,
                   "n_exact(full): r or e exceeds guard");
    std::vector<std::uint32_t> pool;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << e); ++m) pool.push_back(m);
    detail::max_multiset_weight(pool, r, best, best_tuple);
  } else {
    check_resource(e <= guard.equal_e && r <= guard.equal_r,
                   "n_exact(equal_size): r or e exceeds guard");
    best = 0;
    best_tuple.assign(static_cast<std::size_t>(r), 0u);  // the all-empty tuple
    for (long long k = e / 2; k >= 1; --k) {
      long long cap = floor_div(checked_mul(checked_mul(r, r), checked_mul(k, e - k)), 2 * e);
      if (cap <= best) continue;
      detail::max_multiset_weight(detail::subsets_of_size(e, k), r, best, best_tuple);
    }
  }
  res.value = best;
  res.witness.masks = best_tuple;
  return res;
}

/// Q(r, e): same maximisation restricted to the single pool k = floor(e/2).
inline long long q_max_half(long long r, long long e, const NGuard& guard = {}) {
  require(r >= 1 && e >= 1, "need r >= 1 and e >= 1");
  check_resource(e <= guard.equal_e && r <= guard.equal_r, "q_max_half: r or e exceeds guard");
  if (e == 1) return 0;
  long long best = 0;
  std::vector<std::uint32_t> tup;
  detail::max_multiset_weight(detail::subsets_of_size(e, e / 2), r, best, tup);
  return best;
}

/// Maximum of the tuple weight over r DISTINCT subsets of size k (0/1
/// multiplicity vectors). Used by the complement-shift instances.
inline long long max_distinct_weight(long long r, long long e, long long k) {
  require(r >= 1 && e >= 1 && k >= 0 && k <= e, "bad distinct-weight arguments");
  auto pool = detail::subsets_of_size(e, k);
  require_domain(r <= static_cast<long long>(pool.size()), "not enough subsets");
  long long best = -1;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::size_t start, long long acc) -> void {
    if (static_cast<long long>(cur.size()) == r) {
      best = std::max(best, acc);
      return;
    }
    for (std::size_t f = start; f < pool.size(); ++f) {
      long long add = 0;
      for (std::uint32_t c : cur) add += pair_weight(c, pool[f]);
      cur.push_back(pool[f]);
      self(self, f + 1, acc + add);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

/// The ideal upper bound N'(r, e) = floor((r^2 / 2e) * floor(e^2 / 4)).
inline long long ideal_bound(long long r, long long e) {
  return floor_div(checked_mul(checked_mul(r, r), (e * e) / 4), 2 * e);
}

/// Proven closed forms: all cells with r in {2,3,4} or e in {1..6}, plus
/// e*r^2/8 when r and e are both even. Returns nothing outside those cells.
/// Overlapping rules are evaluated defensively and must agree.
inline std::optional<long long> n_closed_form(long long r, long long e) {
  require(r >= 2 && e >= 1, "closed forms cover r >= 2, e >= 1");
  std::vector<long long> vals;
  if (e == 1) vals.push_back(0);
  if (e >= 2 && r == 2) vals.push_back(e / 2);
  if (e >= 2 && r == 3) vals.push_back(e);
  if (e >= 2 && r == 4) vals.push_back(e % 2 == 0 ? 2 * e : 2 * e - 1);
  if (e == 2) vals.push_back((r * r) / 4);
  if (e == 3) vals.push_back((r * r) / 3);
  if (e == 4) vals.push_back((r * r) / 2);
  if (e == 5) vals.push_back((3 * r * r) / 5);
  if (e == 6) vals.push_back(3 * ((r * r) / 4));
  if (r % 2 == 0 && e % 2 == 0) vals.push_back((e * r * r) / 8);
  if (vals.empty()) return std::nullopt;
  for (long long v : vals) require(v == vals[0], "internal: closed forms disagree");
  return vals[0];
}

/// Proven sandwich: floor(e/2)*floor(r^2/4) <= N(r,e) <= min(N'(r,e), and for
/// r >= 3 also floor((r-1)re/6)).
inline std::pair<long long, long long> n_bounds(long long r, long long e) {
  require(r >= 2 && e >= 1, "bounds cover r >= 2, e >= 1");
  long long lower = checked_mul(e / 2, (r * r) / 4);
  long long upper = ideal_bound(r, e);
  if (r >= 3) upper = std::min(upper, floor_div(checked_mul(checked_mul(r - 1, r), e), 6));
  return {lower, upper};
}

/// Exact spectrum of A_{e,k} = (k - |E int F|) on the size-k subsets:
/// eigenvalue k*C(e-1,k) once, 0 with multiplicity C(e,k)-e, and
/// -C(e-2,k-1) with multiplicity e-1.
struct SpectrumReport {
  long long e = 0, k = 0, dim = 0;
  std::vector<std::pair<long long, long long>> eigenvalues;  // (value, multiplicity)
};

inline SpectrumReport spectrum(long long e, long long k) {
  require(e >= 2 && k >= 1 && k <= e - 1, "spectrum needs e >= 2, 1 <= k <= e-1");
  SpectrumReport rep;
  rep.e = e;
  rep.k = k;
  rep.dim = binomial(e, k);
  rep.eigenvalues = {{checked_mul(k, binomial(e - 1, k)), 1},
                     {0, rep.dim - e},
                     {-binomial(e - 2, k - 1), e - 1}};
  return rep;
}

struct SpectrumCheck {
  bool row_sums_ok = false;      // A*1 = k C(e-1,k) * 1
  bool trace_ok = false;         // tr A = 0
  bool annihilator_ok = false;   // A^2 + C(e-2,k-1) A is a multiple of J
  bool trace_square_ok = false;  // tr A^2 = sum of eigenvalue^2 * multiplicity
  bool multiplicity_ok = false;  // multiplicities sum to C(e,k)
  bool ok() const {
    return row_sums_ok && trace_ok && annihilator_ok && trace_square_ok && multiplicity_ok;
  }
};

/// Verifies the claimed spectrum by exact integer identities on the matrix
/// itself (no floating point).
inline SpectrumCheck verify_spectrum(long long e, long long k, long long dim_guard = 300) {
  SpectrumReport rep = spectrum(e, k);
  check_resource(rep.dim <= dim_guard, "verify_spectrum: dimension exceeds guard");
  auto pool = detail::subsets_of_size(e, k);
  long long n = static_cast<long long>(pool.size());
  std::vector<long long> a(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i * n + j)] =
          k - std::popcount(pool[static_cast<std::size_t>(i)] & pool[static_cast<std::size_t>(j)]);
  SpectrumCheck chk;
  long long lead = checked_mul(k, binomial(e - 1, k));
  long long c = binomial(e - 2, k - 1);
  chk.row_sums_ok = true;
  long long trace = 0;
  for (long long i = 0; i < n; ++i) {
    long long row = 0;
    for (long long j = 0; j < n; ++j) row += a[static_cast<std::size_t>(i * n + j)];
    if (row != lead) chk.row_sums_ok = false;
    trace += a[static_cast<std::size_t>(i * n + i)];
  }
  chk.trace_ok = trace == 0;
  // A^2 + c*A entrywise; all entries must coincide (multiple of J), and the
  // shared value gamma must satisfy gamma * dim = lead * (lead + c).
  chk.annihilator_ok = true;
  long long gamma = 0;
  long long trace_sq = 0;
  for (long long i = 0; i < n && chk.annihilator_ok; ++i)
    for (long long j = 0; j < n; ++j) {
      long long s = 0;
      for (long long t = 0; t < n; ++t)
        s += a[static_cast<std::size_t>(i * n + t)] * a[static_cast<std::size_t>(t * n + j)];
      if (i == j) trace_sq += s;
      long long entry = s + c * a[static_cast<std::size_t>(i * n + j)];
      if (i == 0 && j == 0) gamma = entry;
      if (entry != gamma) {
        chk.annihilator_ok = false;
        break;
      }
    }
  if (chk.annihilator_ok && checked_mul(gamma, n) != checked_mul(lead, checked_add(lead, c)))
    chk.annihilator_ok = false;
  long long expect_sq = 0, mults = 0;
  for (auto& [val, mult] : rep.eigenvalues) {
    expect_sq = checked_add(expect_sq, checked_mul(mult, checked_mul(val, val)));
    mults += mult;
  }
  chk.trace_square_ok = trace_sq == expect_sq;
  chk.multiplicity_ok = mults == rep.dim;
  return chk;
}

/// N(r, e+e') >= N(r, e) + N(r, e') for every split inside [1, e_max].
inline bool superadditivity_check(long long r, long long e_max, const NGuard& guard = {},
                                  std::string* failure = nullptr) {
  std::vector<long long> n(static_cast<std::size_t>(e_max) + 1, 0);
  for (long long e = 1; e <= e_max; ++e)
    n[static_cast<std::size_t>(e)] = n_exact(r, e, NStrategy::equal_size, guard).value;
  for (long long e1 = 1; e1 <= e_max; ++e1)
    for (long long e2 = e1; e1 + e2 <= e_max; ++e2)
      if (n[static_cast<std::size_t>(e1 + e2)] <
          n[static_cast<std::size_t>(e1)] + n[static_cast<std::size_t>(e2)]) {
        if (failure) {
          std::ostringstream os;
          os << "N(" << r << "," << e1 + e2 << ") < N(" << r << "," << e1 << ") + N(" << r
             << "," << e2 << ")";
          *failure = os.str();
        }
        return false;
      }
  return true;
}

struct WindowCheck {
  bool ok = true;
  std::optional<BlockVector> counterexample;
};

/// Every alpha with coefficients in [-bound, bound] and w(alpha) > N - r must
/// be a block (e >= 1).
inline WindowCheck high_weight_blocks_check(const Multicharge& charges, long long e,
                                            long long coeff_bound, long long n_value,
                                            long long size_limit = 64) {
  require(e >= 1 && coeff_bound >= 0, "window check needs e >= 1");
  long long r = static_cast<long long>(charges.size());
  WindowCheck out;
  BlockVector alpha(e);
  auto rec = [&](auto&& self, long long i) -> void {
    if (!out.ok) return;
    if (i == e) {
      if (block_weight(alpha, charges) > n_value - r && !is_block(alpha, charges, size_limit)) {
        out.ok = false;
        out.counterexample = alpha;
      }
      return;
    }
    for (long long v = -coeff_bound; v <= coeff_bound; ++v) {
      alpha.set_coeff(i, v);
      self(self, i + 1);
    }
    alpha.set_coeff(i, 0);
  };
  rec(rec, 0);
  return out;
}

/// The e = 0 negative control: with S = (0, s), s >= 0, the vector
/// alpha = alpha(h, ..., h (h times)) + alpha_{h+s+1} is never a block (its
/// coefficients rise from 0 at h+s to 1 at h+s+1, which no sum of two
/// partition blocks can do), yet at s = 0 its weight is h-1. So no weight
/// threshold can force membership at e = 0.
inline BlockVector superlevel_counterexample(long long h, Charge s) {
  require(h >= 1 && s >= 0, "need h >= 1 and s >= 0");
  Partition square(std::vector<long long>(static_cast<std::size_t>(h), h));
  BlockVector alpha = residue_counts(square, 0, 0);
  alpha.add_coeff(h + s + 1, 1);
  return alpha;
}

}  // namespace coreblocks
