#pragma once

#include <string>

#include "json.hpp"

#include "coreblocks/blockvector.hpp"
#include "coreblocks/multipartition.hpp"
#include "coreblocks/partition.hpp"

namespace coreblocks {

/// {"e": e, "coeffs": [c_0..c_{e-1}]} for e >= 1; for e = 0 the sparse form
/// {"e": 0, "coeffs": {"i": c_i, ...}} with the index as the key.
inline void to_json(nlohmann::json& j, const BlockVector& alpha) {
  long long e = alpha.modulus();
  j = nlohmann::json{{"e", e}};
  if (e >= 1) {
    std::vector<long long> cs;
    for (long long i = 0; i < e; ++i) cs.push_back(alpha.coeff(i));
    j["coeffs"] = cs;
  } else {
    nlohmann::json obj = nlohmann::json::object();
    for (long long i : alpha.support()) obj[std::to_string(i)] = alpha.coeff(i);
    j["coeffs"] = obj;
  }
}

inline void from_json(const nlohmann::json& j, BlockVector& alpha) {
  long long e = j.at("e").get<long long>();
  require(e >= 0, "modulus must be >= 0");
  alpha = BlockVector(e);
  const nlohmann::json& cs = j.at("coeffs");
  if (e >= 1) {
    require(cs.is_array() && static_cast<long long>(cs.size()) == e,
            "coeffs must be an array of length e");
    for (long long i = 0; i < e; ++i)
      alpha.set_coeff(i, cs[static_cast<std::size_t>(i)].get<long long>());
  } else {
    require(cs.is_object(), "coeffs must be an object when e = 0");
    for (auto it = cs.begin(); it != cs.end(); ++it)
      alpha.set_coeff(std::stoll(it.key()), it.value().get<long long>());
  }
}

inline void to_json(nlohmann::json& j, const Partition& lambda) {
  j = lambda.to_string();
}

inline void from_json(const nlohmann::json& j, Partition& lambda) {
  lambda = Partition::parse(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const Multipartition& blam) {
  j = blam.to_string();
}

inline void from_json(const nlohmann::json& j, Multipartition& blam) {
  blam = Multipartition::parse(j.get<std::string>());
}

}  // namespace coreblocks
