#pragma once

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coreblocks/blockvector.hpp"
#include "coreblocks/common.hpp"
#include "coreblocks/partition.hpp"

namespace coreblocks {

/// The y-vector shares its shape with a block vector: one integer per residue
/// class, cyclic for e >= 1 and finitely supported over Z for e = 0.
using YVector = BlockVector;

/// The beta-numbers of a charged partition: beta_a = s + lambda_a - a, a
/// strictly decreasing sequence that eventually agrees with s - a. Stored as
/// the charge plus the minimal head of entries above the tail.
class BetaSequence {
 public:
  BetaSequence(Charge s, std::vector<long long> head) : s_(s), head_(std::move(head)) {
    for (std::size_t a = 0; a < head_.size(); ++a) {
      require(a == 0 || head_[a - 1] > head_[a], "beta-numbers must be strictly decreasing");
      require(head_[a] >= s_ - static_cast<long long>(a) - 1,
              "beta-number below the charge tail");
    }
    while (!head_.empty() && head_.back() == s_ - static_cast<long long>(head_.size()))
      head_.pop_back();
  }

  static BetaSequence of(const Partition& lambda, Charge s) {
    std::vector<long long> head;
    for (long long a = 1; a <= lambda.height(); ++a)
      head.push_back(checked_sub(checked_add(s, lambda.part(a)), a));
    return BetaSequence(s, std::move(head));
  }

  /// Interprets a nonempty strictly decreasing list as the beta-numbers above
  /// the tail: after the last listed entry every smaller integer is present.
  /// The charge is forced: s = last + length.
  static BetaSequence from_prefix(const std::vector<long long>& entries) {
    require(!entries.empty(), "beta prefix must be nonempty");
    Charge s = checked_add(entries.back(), static_cast<long long>(entries.size()));
    return BetaSequence(s, entries);
  }

  Charge charge() const { return s_; }
  const std::vector<long long>& head() const { return head_; }

  long long at(long long a) const {
    require(a >= 1, "beta index is 1-based");
    if (a <= static_cast<long long>(head_.size())) return head_[static_cast<std::size_t>(a - 1)];
    return s_ - a;
  }

  bool contains(long long b) const {
    if (b <= s_ - 1 - static_cast<long long>(head_.size())) return true;
    return std::binary_search(head_.rbegin(), head_.rend(), b);
  }

  Partition partition() const {
    std::vector<long long> parts;
    for (std::size_t a = 0; a < head_.size(); ++a)
      parts.push_back(head_[a] - s_ + static_cast<long long>(a) + 1);
    return Partition(std::move(parts));
  }

  auto operator<=>(const BetaSequence&) const = default;

 private:
  Charge s_;
  std::vector<long long> head_;
};

inline BetaSequence beta_number(const Partition& lambda, Charge s) {
  return BetaSequence::of(lambda, s);
}

inline std::pair<Partition, Charge> partition_from_beta(const BetaSequence& beta) {
  return {beta.partition(), beta.charge()};
}

/// One runner of a charged e-abacus, read as a level-one abacus in its own
/// right: tau is the runner's charge and quotient the partition it encodes.
struct Runner {
  Charge tau = 0;
  Partition quotient;
  auto operator<=>(const Runner&) const = default;

  /// Largest occupied position on the runner.
  long long top_bead() const {
    return quotient.empty() ? tau - 1 : tau + quotient.part(1) - 1;
  }

  bool occupied(long long j) const { return BetaSequence::of(quotient, tau).contains(j); }

  /// Gap-free runners are exactly those encoding the empty partition; their
  /// first gap sits at position tau.
  bool gap_free() const { return quotient.empty(); }
};

/// The charged e-abacus of a partition, stored runner by runner. Bead at
/// (runner i, position j) iff i + j*e is a beta-number. Runner i collects the
/// beta-numbers congruent to i mod e.
class AbacusProfile {
 public:
  /// Decomposes beta(lambda, s) into e runners.
  static AbacusProfile of(const Partition& lambda, Charge s, long long e) {
    require(e >= 1, "abacus needs modulus e >= 1");
    BetaSequence beta = BetaSequence::of(lambda, s);
    long long h = lambda.height();
    long long tail_top = s - h;  // every beta-number < tail_top is present
    AbacusProfile prof;
    prof.e_ = e;
    prof.s_ = s;
    prof.runners_.resize(static_cast<std::size_t>(e));
    std::vector<std::vector<long long>> explicit_js(static_cast<std::size_t>(e));
    for (long long b : beta.head()) {
      long long i = math_mod(b, e);
      explicit_js[static_cast<std::size_t>(i)].push_back(floor_div(b - i, e));
    }
    for (long long i = 0; i < e; ++i) {
      auto& js = explicit_js[static_cast<std::size_t>(i)];
      // Runner i is solid strictly below J_i and carries the explicit beads on top.
      long long J = floor_div(tail_top - 1 - i, e) + 1;
      Charge tau = checked_add(J, static_cast<long long>(js.size()));
      std::sort(js.begin(), js.end(), std::greater<>());
      std::vector<long long> parts;
      for (std::size_t a = 0; a < js.size(); ++a)
        parts.push_back(js[a] - tau + static_cast<long long>(a) + 1);
      prof.runners_[static_cast<std::size_t>(i)] = Runner{tau, Partition(std::move(parts))};
    }
    return prof;
  }

  /// Rebuilds the abacus from raw runner data; the charge is determined by
  /// the runners (it equals the sum of the runner charges).
  static AbacusProfile from_runners(long long e, std::vector<Runner> runners) {
    require(e >= 1 && static_cast<long long>(runners.size()) == e,
            "need exactly e runners");
    AbacusProfile prof;
    prof.e_ = e;
    prof.runners_ = std::move(runners);
    Charge s = 0;
    for (const Runner& r : prof.runners_) s = checked_add(s, r.tau);
    prof.s_ = s;
    return prof;
  }

  long long modulus() const { return e_; }
  Charge charge() const { return s_; }
  const Runner& runner(long long i) const {
    return runners_[static_cast<std::size_t>(math_mod(i, e_))];
  }

  bool occupied(long long i, long long j) const { return runner(i).occupied(j); }

  /// Largest beta-number congruent to i mod e (the b_i of the x-vector).
  long long largest_beta(long long i) const {
    long long im = math_mod(i, e_);
    return checked_add(im, checked_mul(runner(im).top_bead(), e_));
  }

  bool is_core() const {
    for (const Runner& r : runners_)
      if (!r.gap_free()) return false;
    return true;
  }

  /// Total displacement of beads from their compacted positions; equals the
  /// number of e-rim-hooks removed on the way to the core.
  long long weight() const {
    long long w = 0;
    for (const Runner& r : runners_) w = checked_add(w, r.quotient.size());
    return w;
  }

  std::vector<Partition> quotient() const {
    std::vector<Partition> out;
    for (const Runner& r : runners_) out.push_back(r.quotient);
    return out;
  }

  /// Slides every bead down into the gaps: the e-core.
  AbacusProfile compacted() const {
    std::vector<Runner> rs;
    for (const Runner& r : runners_) rs.push_back(Runner{r.tau, Partition{}});
    return from_runners(e_, std::move(rs));
  }

  /// Reassembles the partition encoded by the runners.
  std::pair<Partition, Charge> to_partition() const {
    long long j0 = runners_[0].tau - runners_[0].quotient.height();
    for (const Runner& r : runners_) j0 = std::min(j0, r.tau - r.quotient.height());
    // Below position j0 every runner is solid, so every value < e*j0 is a
    // beta-number; the explicit beads above produce the head.
    std::vector<long long> head;
    for (long long i = 0; i < e_; ++i) {
      const Runner& r = runner(i);
      long long h = r.quotient.height();
      for (long long a = 1; a <= h; ++a)
        head.push_back(checked_add(i, checked_mul(e_, r.tau + r.quotient.part(a) - a)));
      for (long long j = r.tau - h - 1; j >= j0; --j)
        head.push_back(checked_add(i, checked_mul(e_, j)));
    }
    std::sort(head.begin(), head.end(), std::greater<>());
    Charge s = checked_add(checked_mul(e_, j0), static_cast<long long>(head.size()));
    BetaSequence beta(s, std::move(head));
    return {beta.partition(), s};
  }

  /// Text rendering: one line per runner, runner 0 at the bottom, beads "O",
  /// gaps "·", and a caret marking the origin column j = 0.
  std::string render() const {
    long long jmin = 0, jmax = 0;
    for (const Runner& r : runners_) {
      jmin = std::min(jmin, r.tau - r.quotient.height() - 1);
      jmax = std::max(jmax, r.top_bead() + 1);
    }
    int label_w = static_cast<int>(std::to_string(e_ - 1).size());
    std::ostringstream os;
    for (long long i = e_ - 1; i >= 0; --i) {
      os << std::setw(label_w) << i << " |";
      for (long long j = jmin; j <= jmax; ++j)
        os << ' ' << (occupied(i, j) ? "O" : "·");
      os << '\n';
    }
    os << std::string(static_cast<std::size_t>(label_w + 2 + 2 * (0 - jmin) + 1), ' ') << "^\n";
    return os.str();
  }

 private:
  long long e_ = 1;
  Charge s_ = 0;
  std::vector<Runner> runners_;
};

inline AbacusProfile abacus_profile(const Partition& lambda, Charge s, long long e) {
  return AbacusProfile::of(lambda, s, e);
}

/// The e-core: what remains after removing e-rim-hooks while possible.
/// Independent of the order of removal and of any charge. For e = 0 no hook
/// is removable, so the partition is its own core.
inline Partition e_core(const Partition& lambda, long long e) {
  require(e >= 0, "modulus must be >= 0");
  if (e == 0) return lambda;
  return AbacusProfile::of(lambda, 0, e).compacted().to_partition().first;
}

/// Number of e-rim-hooks removed on the way to the e-core.
inline long long e_weight(const Partition& lambda, long long e) {
  require(e >= 0, "modulus must be >= 0");
  if (e == 0) return 0;
  return AbacusProfile::of(lambda, 0, e).weight();
}

inline bool is_e_core(const Partition& lambda, long long e) {
  require(e >= 0, "modulus must be >= 0");
  if (e == 0) return true;
  return AbacusProfile::of(lambda, 0, e).is_core();
}

/// The e-quotient at charge s: runner i of the e-abacus read as a level-one
/// abacus. Depends on the charge only through a cyclic rotation (raising s by
/// one rotates the tuple one step).
inline std::vector<Partition> e_quotient(const Partition& lambda, Charge s, long long e) {
  return AbacusProfile::of(lambda, s, e).quotient();
}

/// Inverse of (e_core, e_quotient) at charge s.
inline Partition from_core_and_quotient(const Partition& core,
                                        const std::vector<Partition>& quotient, Charge s,
                                        long long e) {
  require(e >= 1, "modulus must be >= 1");
  require(static_cast<long long>(quotient.size()) == e, "quotient must have e components");
  require_domain(is_e_core(core, e), "from_core_and_quotient needs an e-core");
  AbacusProfile prof = AbacusProfile::of(core, s, e);
  std::vector<Runner> rs;
  for (long long i = 0; i < e; ++i)
    rs.push_back(Runner{prof.runner(i).tau, quotient[static_cast<std::size_t>(i)]});
  auto [lambda, charge] = AbacusProfile::from_runners(e, std::move(rs)).to_partition();
  require(charge == s, "internal: charge drift in reassembly");
  return lambda;
}

/// x_i = (b_i - i)/e + 1 with b_i the largest beta-number congruent to i;
/// for an e-core this is the position of the first gap on runner i, and the
/// entries sum to the charge.
inline std::vector<long long> x_vector(const Partition& lambda, Charge s, long long e) {
  require(e >= 1, "x-vector needs e >= 1");
  AbacusProfile prof = AbacusProfile::of(lambda, s, e);
  require_domain(prof.is_core(), "x-vector is defined for e-cores only");
  std::vector<long long> x;
  for (long long i = 0; i < e; ++i) x.push_back(prof.runner(i).tau);
  return x;
}

/// x-vector of the empty partition: with s = qe + s' (floor division,
/// 0 <= s' < e), x_i = q + 1 for i < s' and q otherwise.
inline std::vector<long long> x_empty(Charge s, long long e) {
  require(e >= 1, "x-vector needs e >= 1");
  long long q = floor_div(s, e), sp = math_mod(s, e);
  std::vector<long long> x;
  for (long long i = 0; i < e; ++i) x.push_back(i < sp ? q + 1 : q);
  return x;
}

/// y = x - x(empty) for e >= 1 (e-cores only); for e = 0 the differences of
/// residue counts y_i = c_i - c_{i+1}, supported on finitely many i in Z and
/// valued in {0,1} for i >= s, {0,-1} for i < s. Sums to zero.
inline YVector y_vector(const Partition& lambda, Charge s, long long e) {
  require(e >= 0, "modulus must be >= 0");
  YVector y(e);
  if (e >= 1) {
    std::vector<long long> x = x_vector(lambda, s, e), x0 = x_empty(s, e);
    for (long long i = 0; i < e; ++i)
      y.set_coeff(i, x[static_cast<std::size_t>(i)] - x0[static_cast<std::size_t>(i)]);
    return y;
  }
  // e = 0: y_{s+k} = [k in D] for k >= 0 and [k in D] - 1 for k < 0, where
  // D = {lambda_a - a : a >= 1} is the content profile of the first column.
  long long h = lambda.height();
  std::vector<long long> diag;
  for (long long a = 1; a <= h; ++a) diag.push_back(lambda.part(a) - a);
  auto in_diag = [&](long long k) {
    if (k <= -h - 1) return true;  // tail -a for a > h
    return std::binary_search(diag.rbegin(), diag.rend(), k);
  };
  long long kmax = h > 0 ? lambda.part(1) - 1 : -1;
  for (long long k = 0; k <= kmax; ++k)
    if (in_diag(k)) y.set_coeff(s + k, 1);
  for (long long k = -1; k >= -h; --k)
    if (!in_diag(k)) y.set_coeff(s + k, -1);
  return y;
}

inline void validate_y(const YVector& y, Charge s) {
  long long e = y.modulus();
  long long sum = 0;
  for (long long i : y.support()) sum = checked_add(sum, y.coeff(i));
  require_domain(sum == 0, "y-vector entries must sum to zero");
  if (e == 0) {
    for (long long i : y.support()) {
      long long v = y.coeff(i);
      if (i >= s)
        require_domain(v == 0 || v == 1, "y_i must lie in {0,1} for i >= s when e = 0");
      else
        require_domain(v == 0 || v == -1, "y_i must lie in {0,-1} for i < s when e = 0");
    }
  }
}

/// Rebuilds the unique e-core with the given y-vector at charge s.
inline Partition core_from_y(const YVector& y, Charge s, long long e) {
  require(e == y.modulus(), "modulus mismatch");
  validate_y(y, s);
  if (e >= 1) {
    std::vector<long long> x0 = x_empty(s, e);
    std::vector<Runner> rs;
    for (long long i = 0; i < e; ++i)
      rs.push_back(Runner{checked_add(y.coeff(i), x0[static_cast<std::size_t>(i)]), Partition{}});
    auto [core, charge] = AbacusProfile::from_runners(e, std::move(rs)).to_partition();
    require(charge == s, "internal: charge drift in core_from_y");
    return core;
  }
  // e = 0: the beta-numbers at charge s are s+k for the k >= 0 with y = 1
  // together with the s+k, k < 0, where y = 0.
  long long lo = -1, hi = 0;
  for (long long i : y.support()) {
    lo = std::min(lo, i - s - 1);
    hi = std::max(hi, i - s);
  }
  std::vector<long long> entries;
  for (long long k = hi; k >= lo; --k) {
    bool in = k >= 0 ? y.coeff(s + k) == 1 : y.coeff(s + k) == 0;
    if (in) entries.push_back(s + k);
  }
  // k = lo is below the support, so y = 0 there and s+lo is present: the
  // prefix convention closes the tail correctly.
  BetaSequence beta = BetaSequence::from_prefix(entries);
  require(beta.charge() == s, "internal: charge drift in core_from_y");
  return beta.partition();
}

/// Residue counts of the core determined by y: c_s = |y|^2/2 and consecutive
/// entries differ by y. For e = 0 the telescoping runs both ways from s.
inline BlockVector ci_from_y(const YVector& y, Charge s, long long e) {
  require(e == y.modulus(), "modulus mismatch");
  validate_y(y, s);
  long long norm2 = 0;
  for (long long i : y.support())
    norm2 = checked_add(norm2, checked_mul(y.coeff(i), y.coeff(i)));
  BlockVector c(e);
  c.set_coeff(s, norm2 / 2);
  if (e >= 1) {
    for (long long i = 1; i < e; ++i)
      c.set_coeff(s + i, checked_sub(c.coeff(s + i - 1), y.coeff(s + i - 1)));
    return c;
  }
  long long lo = 0, hi = 0;
  for (long long i : y.support()) {
    lo = std::min(lo, i - s - 1);
    hi = std::max(hi, i - s + 1);
  }
  for (long long k = 1; k <= hi; ++k)
    c.set_coeff(s + k, checked_sub(c.coeff(s + k - 1), y.coeff(s + k - 1)));
  for (long long k = -1; k >= lo; --k)
    c.set_coeff(s + k, checked_add(c.coeff(s + k + 1), y.coeff(s + k)));
  return c;
}

}  // namespace coreblocks
