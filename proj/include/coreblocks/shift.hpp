#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "coreblocks/abacus.hpp"
#include "coreblocks/blocks.hpp"
#include "coreblocks/blockvector.hpp"
#include "coreblocks/common.hpp"
#include "coreblocks/partition.hpp"

namespace coreblocks {

/// Shift by ehat steps in Z/eZ. Everything here fixes charge 0; d is the
/// order of the rotation. The projection and stuttering-witness operations
/// additionally need ehat | e.
struct ShiftParam {
  long long e;
  long long ehat;

  ShiftParam(long long e_, long long ehat_) : e(e_), ehat(ehat_) {
    require(e >= 2, "shift needs modulus e >= 2");
    require(ehat >= 1 && ehat <= e - 1, "need 1 <= ehat <= e-1");
  }

  long long d() const { return e / std::gcd(e, ehat); }
  bool folds() const { return e % ehat == 0; }
};

/// sigma on the block lattice: coefficient at i of the result is the
/// coefficient of alpha at i + ehat. Order-d automorphism fixing 1.
inline BlockVector sigma_block(const BlockVector& alpha, const ShiftParam& p) {
  require(alpha.modulus() == p.e, "modulus mismatch");
  BlockVector out(p.e);
  for (long long i = 0; i < p.e; ++i) out.set_coeff(i, alpha.coeff(i + p.ehat));
  return out;
}

/// sigma-tilde on e-cores: the unique e-core whose x-vector is the x-vector
/// of lambda rotated by ehat. Satisfies
/// alpha(sigma-tilde lambda) = sigma(alpha(lambda)) + (c_0 - c_ehat) * 1.
inline Partition sigma_core(const Partition& lambda, const ShiftParam& p) {
  require_domain(is_e_core(lambda, p.e), "sigma_core needs an e-core");
  std::vector<long long> x = x_vector(lambda, 0, p.e);
  YVector y(p.e);
  for (long long i = 0; i < p.e; ++i)
    y.set_coeff(i, x[static_cast<std::size_t>(math_mod(i + p.ehat, p.e))]);
  return core_from_y(y, 0, p.e);
}

/// sigma on partitions: runner i of the new 0-charged e-abacus is runner
/// i + ehat of the old one. Rotates the e-quotient, preserves the e-weight,
/// and sends the e-core to sigma_core of the e-core.
inline Partition sigma_partition(const Partition& lambda, const ShiftParam& p) {
  AbacusProfile prof = AbacusProfile::of(lambda, 0, p.e);
  std::vector<Runner> rs;
  for (long long i = 0; i < p.e; ++i) rs.push_back(prof.runner(i + p.ehat));
  auto [mu, charge] = AbacusProfile::from_runners(p.e, std::move(rs)).to_partition();
  require(charge == 0, "internal: charge drift in sigma_partition");
  return mu;
}

enum class ShiftMembership { block_and_core, block_not_core, not_block };

inline std::string to_string(ShiftMembership m) {
  switch (m) {
    case ShiftMembership::block_and_core: return "block-and-core";
    case ShiftMembership::block_not_core: return "block-not-core";
    default: return "not-block";
  }
}

/// Where sigma(alpha) lands for a 0-charged level-one block alpha:
/// sigma(alpha) is again a block iff c_0 <= c_ehat + w(alpha), with equality
/// exactly when sigma(alpha) is a core block.
inline ShiftMembership shift_block_membership(const BlockVector& alpha, const ShiftParam& p) {
  require(alpha.modulus() == p.e, "modulus mismatch");
  require_domain(is_level_one_block(alpha, 0), "expected a block of charge 0");
  long long w = block_weight(alpha, {0});
  long long c0 = alpha.coeff(0), ce = alpha.coeff(p.ehat);
  if (c0 < ce + w) return ShiftMembership::block_not_core;
  if (c0 == ce + w) return ShiftMembership::block_and_core;
  return ShiftMembership::not_block;
}

/// Folds a modulus-e vector down to modulus ehat (needs ehat | e):
/// coefficient at j of the result is the sum of the coefficients at
/// j, j+ehat, j+2*ehat, ... Absorbs sigma: pi(sigma(alpha)) = pi(alpha).
inline BlockVector pi_project(const BlockVector& alpha, const ShiftParam& p) {
  require(alpha.modulus() == p.e, "modulus mismatch");
  require(p.folds(), "pi_project needs ehat | e");
  BlockVector out(p.ehat);
  for (long long i = 0; i < p.e; ++i) out.add_coeff(i % p.ehat, alpha.coeff(i));
  return out;
}

inline bool is_stuttering_block(const BlockVector& alpha, const ShiftParam& p) {
  return sigma_block(alpha, p) == alpha;
}

inline bool is_stuttering_partition(const Partition& lambda, const ShiftParam& p) {
  return sigma_partition(lambda, p) == lambda;
}

/// Builds a sigma-fixed partition lying in a stuttering block alpha with
/// d | w(alpha): take the core of alpha and slide w/d times the rightmost
/// bead on each runner 0, ehat, 2*ehat, ... of its abacus, i.e. attach the
/// one-part quotient (w/d) on those runners.
inline Partition stuttering_witness(const BlockVector& alpha, const ShiftParam& p) {
  require(alpha.modulus() == p.e, "modulus mismatch");
  require(p.folds(), "stuttering_witness needs ehat | e");
  require_domain(is_stuttering_block(alpha, p), "sigma(alpha) != alpha");
  require_domain(is_level_one_block(alpha, 0), "expected a block of charge 0");
  long long w = block_weight(alpha, {0});
  long long d = p.d();
  require_domain(w % d == 0, "d does not divide w(alpha)");
  Partition core = core_partition_of_block(alpha, 0);
  long long wbar = w / d;
  std::vector<Partition> quot(static_cast<std::size_t>(p.e));
  if (wbar > 0)
    for (long long i = 0; i < d; ++i)
      quot[static_cast<std::size_t>(i * p.ehat)] = Partition({wbar});
  return from_core_and_quotient(core, quot, 0, p.e);
}

struct EhatCoreReport {
  bool core_case_applies = false;   // lambda is an e-core with stuttering block
  bool core_is_ehat_core = true;    // ... and then lambda is an ehat-core
  bool sigma_block_member = false;  // sigma(alpha(lambda)) is again a block
  bool shared_ehat_core = true;     // ... whose partitions have lambda's ehat-core
  bool ok() const { return core_is_ehat_core && shared_ehat_core; }
};

/// Checks, for one partition, the two core statements that need ehat | e:
/// (a) an e-core with stuttering block is an ehat-core; (b) partitions lying
/// in alpha and in sigma(alpha) share the same ehat-core.
inline EhatCoreReport ehat_core_checks(const Partition& lambda, const ShiftParam& p) {
  require(p.folds(), "ehat_core_checks needs ehat | e");
  EhatCoreReport rep;
  BlockVector alpha = block_of_partition(lambda, 0, p.e);
  if (is_e_core(lambda, p.e) && is_stuttering_block(alpha, p)) {
    rep.core_case_applies = true;
    rep.core_is_ehat_core = is_e_core(lambda, p.ehat);
  }
  BlockVector shifted = sigma_block(alpha, p);
  if (is_level_one_block(shifted, 0)) {
    rep.sigma_block_member = true;
    long long w = block_weight(shifted, {0});
    Partition core = core_partition_of_block(shifted, 0);
    std::vector<Partition> quot(static_cast<std::size_t>(p.e));
    if (w > 0) quot[0] = Partition({w});
    Partition mu = from_core_and_quotient(core, quot, 0, p.e);
    rep.shared_ehat_core = e_core(mu, p.ehat) == e_core(lambda, p.ehat);
  }
  return rep;
}

}  // namespace coreblocks
