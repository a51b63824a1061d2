#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "coreblocks/abacus.hpp"
#include "coreblocks/blocks.hpp"
#include "coreblocks/bounds.hpp"
#include "coreblocks/enumerate.hpp"
#include "coreblocks/multipartition.hpp"
#include "coreblocks/residues.hpp"
#include "coreblocks/shift.hpp"

namespace coreblocks {

struct VerifyConfig {
  long long max_n = 12;
  long long max_e = 8;
  long long max_r = 6;
  unsigned long long seed = 20240829;
  long long jobs = 1;
};

struct CheckResult {
  std::string suite;
  std::string id;
  bool passed = true;
  std::string detail;
};

inline void to_json(nlohmann::json& j, const CheckResult& c) {
  j = nlohmann::json{{"suite", c.suite}, {"id", c.id}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
}

namespace detail {

// Accumulates one result per case id; the first counterexample wins.
class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  bool check(const std::string& id, bool ok, const std::string& cex = "") {
    auto [it, fresh] = index_.try_emplace(id, results_.size());
    if (fresh) results_.push_back(CheckResult{suite_, id, true, ""});
    CheckResult& r = results_[it->second];
    if (!ok && r.passed) {
      r.passed = false;
      r.detail = cex;
    }
    return ok;
  }

  bool failed(const std::string& id) const {
    auto it = index_.find(id);
    return it != index_.end() && !results_[it->second].passed;
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::map<std::string, std::size_t> index_;
  std::vector<CheckResult> results_;
};

// Every length-e vector with entries in [lo, hi] and the given sum.
template <typename Fn>
void for_each_window_vector(long long e, long long lo, long long hi, long long total, Fn&& fn) {
  BlockVector cur(e);
  auto rec = [&](auto&& self, long long i, long long rest) -> void {
    long long slots = e - i;
    if (slots == 0) {
      if (rest == 0) fn(cur);
      return;
    }
    if (rest < lo * slots || rest > hi * slots) return;
    for (long long v = lo; v <= hi; ++v) {
      cur.set_coeff(i, v);
      self(self, i + 1, rest - v);
    }
    cur.set_coeff(i, 0);
  };
  rec(rec, 0, total);
}

// Every sparse nonnegative vector supported on [base, base+slots) with the
// given sum (e = 0 windows).
template <typename Fn>
void for_each_sparse_window(long long base, long long slots, long long total, Fn&& fn) {
  BlockVector cur(0);
  auto rec = [&](auto&& self, long long i, long long rest) -> void {
    if (i == slots) {
      if (rest == 0) fn(cur);
      return;
    }
    for (long long v = 0; v <= rest; ++v) {
      if (v > 0) cur.set_coeff(base + i, v);
      self(self, i + 1, rest - v);
      if (v > 0) cur.set_coeff(base + i, 0);
    }
  };
  rec(rec, 0, total);
}

inline std::string describe(const Partition& lambda, Charge s, long long e) {
  std::ostringstream os;
  os << "lambda=" << lambda.to_string() << " s=" << s << " e=" << e;
  return os.str();
}

}  // namespace detail

/// beta <-> partition, (core, quotient) <-> partition, y <-> core and the
/// residue-count telescoping, parametrise <-> deparametrise.
inline std::vector<CheckResult> verify_roundtrips(const VerifyConfig& cfg) {
  detail::Recorder rec("roundtrips");
  for (long long n = 0; n <= cfg.max_n; ++n)
    for (const Partition& lam : partitions_of(n))
      for (Charge s = -2; s <= 2; ++s) {
        auto [back, charge] = partition_from_beta(BetaSequence::of(lam, s));
        rec.check("beta-partition", back == lam && charge == s, detail::describe(lam, s, 0));
        for (long long e = 1; e <= cfg.max_e; ++e) {
          const std::string where = detail::describe(lam, s, e);
          AbacusProfile prof = AbacusProfile::of(lam, s, e);
          Partition core = prof.compacted().to_partition().first;
          rec.check("core-quotient",
                    from_core_and_quotient(core, prof.quotient(), s, e) == lam, where);
          rec.check("weight-additivity", prof.weight() == e_weight(lam, e), where);
          if (prof.is_core()) {
            YVector y = y_vector(lam, s, e);
            rec.check("y-core", core_from_y(y, s, e) == lam, where);
            rec.check("ci-telescoping", ci_from_y(y, s, e) == residue_counts(lam, s, e), where);
          }
          BlockVector alpha = residue_counts(lam, s, e);
          auto [y, w] = parametrise(alpha, s);
          rec.check("parametrise", deparametrise(y, w, s) == alpha && w == e_weight(lam, e),
                    where);
        }
        const std::string where0 = detail::describe(lam, s, 0);
        YVector y0 = y_vector(lam, s, 0);
        rec.check("y-core", core_from_y(y0, s, 0) == lam, where0);
        rec.check("ci-telescoping", ci_from_y(y0, s, 0) == residue_counts(lam, s, 0), where0);
      }
  return rec.take();
}

/// The abacus e-weight equals the lattice weight of the partition's block,
/// for every charge; at e = 0 both vanish.
inline std::vector<CheckResult> verify_weights(const VerifyConfig& cfg) {
  detail::Recorder rec("weights");
  for (long long n = 0; n <= cfg.max_n; ++n)
    for (const Partition& lam : partitions_of(n)) {
      for (long long e = 1; e <= cfg.max_e; ++e) {
        long long we = e_weight(lam, e);
        for (Charge s = -2; s <= 2; ++s)
          rec.check("abacus-vs-block", charge_weight(lam, s, e) == we,
                    detail::describe(lam, s, e));
      }
      for (Charge s = -2; s <= 2; ++s)
        rec.check("e0-zero", charge_weight(lam, s, 0) == 0 && e_weight(lam, 0) == 0,
                  detail::describe(lam, s, 0));
    }
  return rec.take();
}

/// Level one: inside the coefficient window, the nonnegative-weight vectors
/// are exactly the blocks of partitions (per size); e = 0 uses the
/// difference-condition membership test.
inline std::vector<CheckResult> verify_level_one(const VerifyConfig& cfg) {
  detail::Recorder rec("level-one");
  for (long long e = 2; e <= std::min<long long>(5, cfg.max_e); ++e)
    for (Charge s : {0, 1}) {
      std::ostringstream idos;
      idos << "window-e" << e << "-s" << s;
      const std::string id = idos.str();
      for (long long n = 0; n <= cfg.max_n && !rec.failed(id); ++n) {
        std::set<BlockVector> expected;
        for (const Partition& lam : partitions_of(n))
          expected.insert(residue_counts(lam, s, e));
        std::size_t hits = 0;
        detail::for_each_window_vector(e, -2, n, n, [&](const BlockVector& alpha) {
          bool mem = is_level_one_block(alpha, s);
          if (mem) ++hits;
          if (mem != (expected.count(alpha) > 0))
            rec.check(id, false, "alpha=" + alpha.to_string());
        });
        rec.check(id, hits == expected.size(), "block count mismatch");
      }
    }
  for (Charge s : {0, 1}) {
    std::ostringstream idos;
    idos << "window-e0-s" << s;
    const std::string id = idos.str();
    for (long long n = 0; n <= std::min<long long>(7, cfg.max_n) && !rec.failed(id); ++n) {
      std::set<BlockVector> expected;
      for (const Partition& lam : partitions_of(n))
        expected.insert(residue_counts(lam, s, 0));
      std::size_t hits = 0;
      detail::for_each_sparse_window(s - n, 2 * n + 1, n, [&](const BlockVector& alpha) {
        bool mem = is_level_one_block(alpha, s);
        if (mem) ++hits;
        if (mem != (expected.count(alpha) > 0))
          rec.check(id, false, "alpha=" + alpha.to_string());
      });
      rec.check(id, hits == expected.size(), "block count mismatch");
    }
  }
  return rec.take();
}

/// Small (r, e): membership in the block set is exactly nonnegative weight.
inline std::vector<CheckResult> verify_membership(const VerifyConfig& cfg) {
  detail::Recorder rec("membership");
  struct Case {
    long long e;
    Multicharge charges;
  };
  const std::vector<Case> cases = {{2, {0, 0}}, {2, {0, 1}}, {3, {0, 0}}, {3, {0, 2}},
                                   {2, {0, 0, 0}}, {2, {0, 1, 1}}};
  for (const Case& c : cases) {
    long long r = static_cast<long long>(c.charges.size());
    std::ostringstream idos;
    idos << "r" << r << "-e" << c.e << "-S";
    for (Charge s : c.charges) idos << s;
    const std::string id = idos.str();
    for (long long n = 0; n <= std::min<long long>(8, cfg.max_n) && !rec.failed(id); ++n)
      detail::for_each_window_vector(c.e, -2, n, n, [&](const BlockVector& alpha) {
        bool semialg = block_weight(alpha, c.charges) >= 0;
        if (semialg != is_block(alpha, c.charges))
          rec.check(id, false, "alpha=" + alpha.to_string());
      });
    rec.check(id, true);
  }
  return rec.take();
}

/// High weight forces membership: w(alpha) > N(r,e) - r implies alpha is a
/// block (small r, e); the e = 0 family shows no such threshold exists there.
inline std::vector<CheckResult> verify_high_weight(const VerifyConfig& cfg) {
  detail::Recorder rec("high-weight");
  struct Case {
    long long e;
    Multicharge charges;
    long long bound;
  };
  const std::vector<Case> cases = {
      {2, {0, 0}, 4}, {2, {0, 1}, 4}, {3, {0, 1}, 4}, {2, {0, 1, 0}, 4}, {4, {0, 2}, 3}};
  for (const Case& c : cases) {
    long long r = static_cast<long long>(c.charges.size());
    std::ostringstream idos;
    idos << "r" << r << "-e" << c.e;
    const std::string id = idos.str();
    long long nval = n_exact(r, c.e, NStrategy::equal_size).value;
    WindowCheck wc = high_weight_blocks_check(c.charges, c.e, c.bound, nval);
    rec.check(id, wc.ok,
              wc.counterexample ? "alpha=" + wc.counterexample->to_string() : "");
  }
  for (long long h : {2, 3, 4}) {
    std::ostringstream idos;
    idos << "e0-control-h" << h;
    const std::string id = idos.str();
    BlockVector alpha = superlevel_counterexample(h, 0);
    bool w_ok = block_weight(alpha, {0, 0}) == h - 1;
    bool never = true;
    for (Charge s : {0, 1, 2})
      if (is_block(superlevel_counterexample(h, s), {0, s})) never = false;
    rec.check(id, w_ok && never, "alpha=" + alpha.to_string());
  }
  return rec.take();
}

/// Exact integer identities certifying the spectrum of the intersection
/// matrices A_{e,k}.
inline std::vector<CheckResult> verify_spectra(const VerifyConfig& cfg) {
  detail::Recorder rec("spectra");
  for (long long e = 2; e <= cfg.max_e; ++e)
    for (long long k = 1; k <= e - 1; ++k) {
      std::ostringstream idos;
      idos << "e" << e << "-k" << k;
      SpectrumCheck chk = verify_spectrum(e, k);
      std::string what;
      if (!chk.row_sums_ok) what = "row sums";
      else if (!chk.trace_ok) what = "trace";
      else if (!chk.annihilator_ok) what = "annihilating identity";
      else if (!chk.trace_square_ok) what = "trace of square";
      else if (!chk.multiplicity_ok) what = "multiplicities";
      rec.check(idos.str(), chk.ok(), what);
    }
  return rec.take();
}

/// The N(r,e) table against closed forms and the sandwich bounds, strategy
/// cross-agreement, superadditivity of e -> N(r,e), and the two hand
/// witnesses at e = 5.
inline std::vector<CheckResult> verify_bounds_table(const VerifyConfig& cfg) {
  detail::Recorder rec("bounds-table");
  std::vector<std::pair<long long, long long>> cells;
  for (long long e = 1; e <= std::min<long long>(8, cfg.max_e); ++e) cells.push_back({2, e});
  for (long long r : {3, 4})
    for (long long e = 2; e <= std::min<long long>(6, cfg.max_e); ++e)
      if (r <= cfg.max_r) cells.push_back({r, e});
  for (long long e = 2; e <= std::min<long long>(6, cfg.max_e); ++e)
    for (long long r = 5; r <= cfg.max_r; ++r) cells.push_back({r, e});
  for (auto [r, e] : cells) {
    std::ostringstream idos;
    idos << "cell-r" << r << "-e" << e;
    long long v = n_exact(r, e, NStrategy::equal_size).value;
    auto cf = n_closed_form(r, e);
    auto [lo, hi] = n_bounds(r, e);
    std::ostringstream cex;
    cex << "N=" << v << " closed=" << (cf ? std::to_string(*cf) : "-") << " lo=" << lo
        << " hi=" << hi;
    rec.check(idos.str(), cf && *cf == v && lo <= v && v <= hi, cex.str());
  }
  for (auto [r, e] : cells) {
    bool small = (r <= 4 && e <= 4) || (r <= 6 && e <= 3) || (r <= 3 && e <= 6);
    if (!small) continue;
    std::ostringstream idos;
    idos << "strategies-agree-r" << r << "-e" << e;
    rec.check(idos.str(), n_exact(r, e, NStrategy::full).value ==
                              n_exact(r, e, NStrategy::equal_size).value);
  }
  for (long long r = 2; r <= cfg.max_r; ++r) {
    long long e_max = r == 2 ? std::min<long long>(8, cfg.max_e) : std::min<long long>(6, cfg.max_e);
    std::ostringstream idos;
    idos << "superadditivity-r" << r;
    std::string why;
    rec.check(idos.str(), superadditivity_check(r, e_max, {}, &why), why);
  }
  {
    SubsetTuple pentagon{5, {0b00011, 0b00101, 0b10100, 0b11000, 0b01010}};
    rec.check("witness-pentagon", tuple_weight(pentagon) == 15 &&
                                      n_exact(5, 5, NStrategy::equal_size).value == 15);
    SubsetTuple foursets{5, {0b00101, 0b01010, 0b10001, 0b10010}};
    rec.check("witness-four-sets", tuple_weight(foursets) == 9 &&
                                       n_exact(4, 5, NStrategy::equal_size).value == 9);
  }
  return rec.take();
}

/// The sigma automorphism: order, interaction with 1 and with the weight,
/// the core identity, the s-core compatibility, and where sigma sends blocks.
inline std::vector<CheckResult> verify_shift(const VerifyConfig& cfg) {
  detail::Recorder rec("shift");
  for (long long e : {2, 4, 6}) {
    if (e > cfg.max_e) continue;
    std::mt19937_64 rng(cfg.seed + static_cast<unsigned long long>(e));
    std::uniform_int_distribution<long long> coeff(-5, 5);
    for (long long ehat = 1; ehat <= e - 1; ++ehat) {
      ShiftParam p(e, ehat);
      std::ostringstream tag;
      tag << "-e" << e << "-ehat" << ehat;
      for (int trial = 0; trial < 100; ++trial) {
        BlockVector alpha(e);
        for (long long i = 0; i < e; ++i) alpha.set_coeff(i, coeff(rng));
        BlockVector rotated = alpha;
        for (long long t = 0; t < p.d(); ++t) rotated = sigma_block(rotated, p);
        rec.check("order" + tag.str(), rotated == alpha, "alpha=" + alpha.to_string());
        rec.check("fixes-one" + tag.str(),
                  sigma_block(alpha + const_one(e), p) == sigma_block(alpha, p) + const_one(e));
        long long lhs = block_weight(sigma_block(alpha, p), {0});
        long long rhs = block_weight(alpha, {0}) + alpha.coeff(ehat) - alpha.coeff(0);
        rec.check("weight-shift" + tag.str(), lhs == rhs, "alpha=" + alpha.to_string());
      }
      for (long long n = 0; n <= cfg.max_n; ++n) {
        for (const Partition& core : e_cores_of(n, e)) {
          BlockVector alpha = residue_counts(core, 0, e);
          Charge delta = alpha.coeff(0) - alpha.coeff(ehat);
          Partition shifted = sigma_core(core, p);
          rec.check("core-identity" + tag.str(),
                    residue_counts(shifted, 0, e) ==
                        sigma_block(alpha, p) + const_one(e) * delta,
                    detail::describe(core, 0, e));
        }
        for (const Partition& lam : partitions_of(n)) {
          const std::string where = detail::describe(lam, 0, e);
          BlockVector alpha = residue_counts(lam, 0, e);
          BlockVector shifted = sigma_block(alpha, p);
          rec.check("core-shift" + tag.str(),
                    residue_counts(sigma_core(e_core(lam, e), p), 0, e) ==
                        s_core_of_block(shifted, {0}).first,
                    where);
          ShiftMembership m = shift_block_membership(alpha, p);
          bool member = is_level_one_block(shifted, 0);
          bool agree = (m != ShiftMembership::not_block) == member &&
                       (m == ShiftMembership::block_and_core) ==
                           (member && block_weight(shifted, {0}) == 0);
          rec.check("membership" + tag.str(), agree, where);
          Partition slam = sigma_partition(lam, p);
          bool good = e_weight(slam, e) == e_weight(lam, e) &&
                      e_core(slam, e) == sigma_core(e_core(lam, e), p);
          std::vector<Partition> q = e_quotient(lam, 0, e), sq = e_quotient(slam, 0, e);
          for (long long i = 0; i < e && good; ++i)
            good = sq[static_cast<std::size_t>(i)] ==
                   q[static_cast<std::size_t>(math_mod(i + ehat, e))];
          Partition order = lam;
          for (long long t = 0; t < p.d(); ++t) order = sigma_partition(order, p);
          good = good && order == lam;
          bool same_size = slam.size() == lam.size();
          good = good && same_size == (alpha.coeff(0) == alpha.coeff(ehat)) &&
                 same_size == (residue_counts(slam, 0, e) == shifted);
          rec.check("partition-shift" + tag.str(), good, where);
        }
      }
    }
  }
  return rec.take();
}

/// Stuttering: the fixed-point equivalence, the witness construction, the
/// necessary conditions, the fold projection, and the shared smaller cores.
inline std::vector<CheckResult> verify_stuttering(const VerifyConfig& cfg) {
  detail::Recorder rec("stuttering");
  for (long long e : {2, 4, 6}) {
    if (e > cfg.max_e) continue;
    for (long long ehat = 1; ehat <= e - 1; ++ehat) {
      if (e % ehat != 0) continue;
      ShiftParam p(e, ehat);
      long long d = p.d();
      std::ostringstream tag;
      tag << "-e" << e << "-ehat" << ehat;
      for (long long n = 0; n <= cfg.max_n; ++n) {
        std::map<BlockVector, bool> has_fixed;
        for (const Partition& lam : partitions_of(n)) {
          BlockVector alpha = residue_counts(lam, 0, e);
          bool fixed = is_stuttering_partition(lam, p);
          has_fixed[alpha] = has_fixed[alpha] || fixed;
          if (fixed)
            rec.check("fixed-necessary" + tag.str(),
                      is_stuttering_block(alpha, p) && e_weight(lam, e) % d == 0,
                      detail::describe(lam, 0, e));
          rec.check("pi-fold" + tag.str(),
                    pi_project(alpha, p) == residue_counts(lam, 0, ehat) &&
                        pi_project(sigma_block(alpha, p), p) == pi_project(alpha, p),
                    detail::describe(lam, 0, e));
          rec.check("ehat-cores" + tag.str(), ehat_core_checks(lam, p).ok(),
                    detail::describe(lam, 0, e));
        }
        for (const auto& [alpha, fixed] : has_fixed) {
          bool predicted =
              is_stuttering_block(alpha, p) && block_weight(alpha, {0}) % d == 0;
          rec.check("equivalence" + tag.str(), fixed == predicted,
                    "alpha=" + alpha.to_string());
          if (predicted) {
            Partition mu = stuttering_witness(alpha, p);
            rec.check("witness" + tag.str(),
                      residue_counts(mu, 0, e) == alpha && is_stuttering_partition(mu, p),
                      "alpha=" + alpha.to_string());
          }
        }
      }
      for (long long n = 0; n <= 20; ++n)
        for (const Partition& core : e_cores_of(n, e))
          if (is_stuttering_block(residue_counts(core, 0, e), p))
            rec.check("stuttering-core-is-ehat-core" + tag.str(), is_e_core(core, ehat),
                      detail::describe(core, 0, e));
      rec.check("stuttering-core-is-ehat-core" + tag.str(), true);
    }
  }
  return rec.take();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "roundtrips", "weights", "level-one", "membership", "high-weight",
      "spectra",    "bounds-table", "shift", "stuttering"};
  return names;
}

inline std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "roundtrips") return verify_roundtrips(cfg);
  if (name == "weights") return verify_weights(cfg);
  if (name == "level-one") return verify_level_one(cfg);
  if (name == "membership") return verify_membership(cfg);
  if (name == "high-weight") return verify_high_weight(cfg);
  if (name == "spectra") return verify_spectra(cfg);
  if (name == "bounds-table") return verify_bounds_table(cfg);
  if (name == "shift") return verify_shift(cfg);
  if (name == "stuttering") return verify_stuttering(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

/// Runs one suite, or all of them (possibly concurrently); the report order
/// is canonical regardless of schedule: suite list order, then case id.
inline std::vector<CheckResult> run_verification(const std::string& name,
                                                 const VerifyConfig& cfg) {
  std::vector<std::string> todo;
  if (name == "all")
    todo = suite_names();
  else
    todo.push_back(name);
  std::vector<CheckResult> all;
  if (cfg.jobs > 1 && todo.size() > 1) {
    std::vector<std::future<std::vector<CheckResult>>> futs;
    for (const std::string& s : todo)
      futs.push_back(std::async(std::launch::async, [s, &cfg] { return run_suite(s, cfg); }));
    for (auto& f : futs)
      for (CheckResult& r : f.get()) all.push_back(std::move(r));
  } else {
    for (const std::string& s : todo)
      for (CheckResult& r : run_suite(s, cfg)) all.push_back(std::move(r));
  }
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < suite_names().size(); ++i) rank[suite_names()[i]] = i;
  std::stable_sort(all.begin(), all.end(), [&](const CheckResult& a, const CheckResult& b) {
    if (a.suite != b.suite) return rank[a.suite] < rank[b.suite];
    return a.id < b.id;
  });
  return all;
}

}  // namespace coreblocks
