#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "coreblocks/common.hpp"

namespace coreblocks {

/// A node (a, b) of a Young diagram: row a, column b, both 1-based.
struct Node {
  long long row = 0;
  long long col = 0;
  auto operator<=>(const Node&) const = default;
};

/// An integer partition: a weakly decreasing sequence of positive integers.
/// Immutable once constructed; the empty partition is Partition{}.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t a = 0; a < parts_.size(); ++a) {
      require(parts_[a] > 0, "partition parts must be positive");
      require(a == 0 || parts_[a - 1] >= parts_[a], "partition parts must be weakly decreasing");
    }
  }

  const std::vector<long long>& parts() const { return parts_; }

  /// Number of nonzero parts (the height h(lambda)).
  long long height() const { return static_cast<long long>(parts_.size()); }

  /// Row length with the trailing-zero convention: part(a) = 0 for a > height.
  long long part(long long a) const {
    require(a >= 1, "row index is 1-based");
    return a <= height() ? parts_[static_cast<std::size_t>(a - 1)] : 0;
  }

  /// |lambda|, the number of nodes.
  long long size() const {
    long long n = 0;
    for (long long p : parts_) n = checked_add(n, p);
    return n;
  }

  bool empty() const { return parts_.empty(); }

  bool contains(const Node& nd) const {
    return nd.row >= 1 && nd.col >= 1 && nd.col <= part(nd.row);
  }

  /// All nodes of the Young diagram, row by row.
  std::vector<Node> nodes() const {
    std::vector<Node> out;
    for (long long a = 1; a <= height(); ++a)
      for (long long b = 1; b <= part(a); ++b) out.push_back({a, b});
    return out;
  }

  auto operator<=>(const Partition&) const = default;

  /// Literal form: "4,3,3,1"; the empty partition prints as "-".
  std::string to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    return os.str();
  }

  /// Parses the literal form. Rejects non-numeric parts, zeros, negatives and
  /// increasing sequences.
  static Partition parse(const std::string& text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<long long> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      require(!tok.empty(), "empty part in partition literal");
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad partition literal: " + tok);
      }
      require(pos == tok.size(), "bad partition literal: " + tok);
      parts.push_back(v);
    }
    return Partition(std::move(parts));
  }

 private:
  std::vector<long long> parts_;
};

}  // namespace coreblocks
