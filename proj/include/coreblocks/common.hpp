#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coreblocks {

/// A charge: an arbitrary integer shifting residues and beta-numbers.
using Charge = long long;

/// Raised when a computation would exceed a configured desk-scale guard.
/// Distinct from a domain error: the answer is not "false", it is "not computed".
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline void check_resource(bool ok, const std::string& what) {
  if (!ok) throw ResourceLimitError(what);
}

// All arithmetic is 64-bit and checked: inputs large enough to wrap are
// rejected with std::overflow_error instead of producing garbage.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

/// Floor division (rounds toward -inf, unlike C++ '/').
inline long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

/// Mathematical mod: result in [0, |b|) for b > 0.
inline long long math_mod(long long a, long long b) {
  long long r = a % b;
  return r < 0 ? r + (b < 0 ? -b : b) : r;
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

inline void require_domain(bool cond, const std::string& what) {
  if (!cond) throw std::domain_error(what);
}

}  // namespace coreblocks
