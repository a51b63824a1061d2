#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coreblocks/common.hpp"

namespace coreblocks {

using Multicharge = std::vector<Charge>;

/// An element of the free abelian group on the residue classes: one integer
/// coefficient per residue i. For modulus e >= 1 the index set is Z/e (a
/// length-e array); for e = 0 it is Z itself with finite support (a sparse
/// map holding the nonzero coefficients only). Coefficients may be negative.
class BlockVector {
 public:
  BlockVector() = default;

  explicit BlockVector(long long e) : e_(e) {
    require(e >= 0, "modulus must be >= 0");
    if (e >= 1) cyclic_.assign(static_cast<std::size_t>(e), 0);
  }

  static BlockVector zero(long long e) { return BlockVector(e); }

  long long modulus() const { return e_; }

  long long coeff(long long i) const {
    if (e_ >= 1) return cyclic_[static_cast<std::size_t>(math_mod(i, e_))];
    auto it = sparse_.find(i);
    return it == sparse_.end() ? 0 : it->second;
  }

  void set_coeff(long long i, long long v) {
    if (e_ >= 1) {
      cyclic_[static_cast<std::size_t>(math_mod(i, e_))] = v;
    } else if (v == 0) {
      sparse_.erase(i);
    } else {
      sparse_[i] = v;
    }
  }

  void add_coeff(long long i, long long v) { set_coeff(i, checked_add(coeff(i), v)); }

  /// |alpha| = sum of all coefficients.
  long long total() const {
    long long n = 0;
    if (e_ >= 1)
      for (long long c : cyclic_) n = checked_add(n, c);
    else
      for (auto& [i, c] : sparse_) n = checked_add(n, c);
    return n;
  }

  bool is_zero() const {
    if (e_ == 0) return sparse_.empty();
    for (long long c : cyclic_)
      if (c != 0) return false;
    return true;
  }

  bool all_nonnegative() const {
    if (e_ >= 1) {
      for (long long c : cyclic_)
        if (c < 0) return false;
      return true;
    }
    for (auto& [i, c] : sparse_)
      if (c < 0) return false;
    return true;
  }

  /// Indices that can carry a nonzero coefficient: 0..e-1, or the sparse
  /// support for e = 0.
  std::vector<long long> support() const {
    std::vector<long long> out;
    if (e_ >= 1) {
      for (long long i = 0; i < e_; ++i) out.push_back(i);
    } else {
      for (auto& [i, c] : sparse_) out.push_back(i);
    }
    return out;
  }

  BlockVector& operator+=(const BlockVector& o) {
    require(e_ == o.e_, "modulus mismatch");
    if (e_ >= 1) {
      for (long long i = 0; i < e_; ++i)
        cyclic_[static_cast<std::size_t>(i)] =
            checked_add(cyclic_[static_cast<std::size_t>(i)], o.cyclic_[static_cast<std::size_t>(i)]);
    } else {
      for (auto& [i, c] : o.sparse_) add_coeff(i, c);
    }
    return *this;
  }

  BlockVector& operator-=(const BlockVector& o) {
    require(e_ == o.e_, "modulus mismatch");
    if (e_ >= 1) {
      for (long long i = 0; i < e_; ++i)
        cyclic_[static_cast<std::size_t>(i)] =
            checked_sub(cyclic_[static_cast<std::size_t>(i)], o.cyclic_[static_cast<std::size_t>(i)]);
    } else {
      for (auto& [i, c] : o.sparse_) add_coeff(i, -c);
    }
    return *this;
  }

  friend BlockVector operator+(BlockVector a, const BlockVector& b) { return a += b; }
  friend BlockVector operator-(BlockVector a, const BlockVector& b) { return a -= b; }

  BlockVector operator*(long long k) const {
    BlockVector r(e_);
    if (e_ >= 1)
      for (long long i = 0; i < e_; ++i) r.set_coeff(i, checked_mul(coeff(i), k));
    else
      for (auto& [i, c] : sparse_) r.set_coeff(i, checked_mul(c, k));
    return r;
  }

  auto operator<=>(const BlockVector&) const = default;

  /// "3,5,3" for e >= 1 (coefficients c_0..c_{e-1}); "{i:c,...}" for e = 0.
  std::string to_string() const {
    std::ostringstream os;
    if (e_ >= 1) {
      for (long long i = 0; i < e_; ++i) {
        if (i) os << ',';
        os << coeff(i);
      }
    } else {
      os << '{';
      bool first = true;
      for (auto& [i, c] : sparse_) {
        if (!first) os << ',';
        first = false;
        os << i << ':' << c;
      }
      os << '}';
    }
    return os.str();
  }

 private:
  long long e_ = 0;
  std::vector<long long> cyclic_;       // e >= 1
  std::map<long long, long long> sparse_;  // e == 0, zero entries elided
};

/// The constant vector 1 = sum of all alpha_i. For e = 0 the sum is empty, so
/// 1 = 0 and adding multiples of it is a no-op.
inline BlockVector const_one(long long e) {
  BlockVector v(e);
  for (long long i = 0; i < e; ++i) v.set_coeff(i, 1);
  return v;
}

/// w^S(alpha) = sum_j c_{s_j} - (1/2) sum_i (c_i - c_{i+1})^2.
/// The quadratic sum runs over Z/e (cyclically) for e >= 1, and over all of Z
/// for e = 0, where it has finite support. Always an integer.
inline long long block_weight(const BlockVector& alpha, const Multicharge& charges) {
  require(!charges.empty(), "multicharge must be nonempty");
  long long lin = 0;
  for (Charge s : charges) lin = checked_add(lin, alpha.coeff(s));
  long long quad = 0;
  long long e = alpha.modulus();
  if (e >= 1) {
    for (long long i = 0; i < e; ++i) {
      long long d = checked_sub(alpha.coeff(i), alpha.coeff(i + 1));
      quad = checked_add(quad, checked_mul(d, d));
    }
  } else {
    // d_i = c_i - c_{i+1} is nonzero only when i or i+1 is in the support.
    std::map<long long, bool> idx;
    for (long long i : alpha.support()) {
      idx[i] = true;
      idx[i - 1] = true;
    }
    for (auto& [i, unused] : idx) {
      long long d = checked_sub(alpha.coeff(i), alpha.coeff(i + 1));
      quad = checked_add(quad, checked_mul(d, d));
    }
  }
  // The quadratic sum is even: it telescopes to twice a partial sum.
  return checked_sub(lin, quad / 2);
}

}  // namespace coreblocks
