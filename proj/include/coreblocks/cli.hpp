#pragma once

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coreblocks/abacus.hpp"
#include "coreblocks/blocks.hpp"
#include "coreblocks/bounds.hpp"
#include "coreblocks/multipartition.hpp"
#include "coreblocks/residues.hpp"
#include "coreblocks/serialize.hpp"
#include "coreblocks/shift.hpp"
#include "coreblocks/verify.hpp"

namespace coreblocks {

namespace detail {

inline Multicharge parse_multicharge(const std::string& text) {
  Multicharge out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(!item.empty(), "empty entry in multicharge literal");
    std::size_t used = 0;
    out.push_back(std::stoll(item, &used));
    require(used == item.size(), "bad multicharge entry: " + item);
  }
  require(!out.empty(), "multicharge must be nonempty");
  return out;
}

inline BlockVector parse_block_literal(const std::string& text, long long e) {
  require(e >= 1, "block literals need e >= 1");
  BlockVector out(e);
  std::stringstream ss(text);
  std::string item;
  long long i = 0;
  while (std::getline(ss, item, ',')) {
    require(i < e, "too many coefficients for modulus e");
    std::size_t used = 0;
    out.set_coeff(i++, std::stoll(item, &used));
    require(used == item.size(), "bad coefficient: " + item);
  }
  require(i == e, "expected exactly e coefficients");
  return out;
}

inline void emit(std::ostream& out, const std::string& format, const std::string& key,
                 const nlohmann::json& value, const std::string& text) {
  if (format == "json")
    out << nlohmann::json{{key, value}}.dump() << "\n";
  else
    out << text << "\n";
}

}  // namespace detail

/// Full command-line driver; args exclude the program name. Exit codes:
/// 0 success, 1 domain error, 2 usage or parse error, 3 resource guard.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"integer partition core/block/bound calculator"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}));

  std::string lit, charges_lit, alpha_lit;
  long long e = 0;
  Charge s = 0;
  long long ehat = 1;

  auto add_common = [&](CLI::App* cmd, bool need_e) {
    auto* opt_e = cmd->add_option("-e", e, "modulus (0 = infinite)");
    if (need_e) opt_e->required();
    cmd->add_option("-s", s, "charge");
    return opt_e;
  };

  auto* cmd_core = app.add_subcommand("core", "e-core of a partition");
  add_common(cmd_core, true);
  cmd_core->add_option("partition", lit, "partition literal")->required();
  cmd_core->callback([&] {
    Partition lam = Partition::parse(lit);
    detail::emit(out, format, "core", e_core(lam, e).to_string(), e_core(lam, e).to_string());
  });

  auto* cmd_quotient = app.add_subcommand("quotient", "e-quotient at charge s");
  add_common(cmd_quotient, true);
  cmd_quotient->add_option("partition", lit, "partition literal")->required();
  cmd_quotient->callback([&] {
    require(e >= 1, "quotient needs e >= 1");
    Multipartition q(e_quotient(Partition::parse(lit), s, e));
    detail::emit(out, format, "quotient", q.to_string(), q.to_string());
  });

  auto* cmd_weight = app.add_subcommand("weight", "e-weight of a partition");
  add_common(cmd_weight, true);
  cmd_weight->add_option("partition", lit, "partition literal")->required();
  cmd_weight->callback([&] {
    long long w = e_weight(Partition::parse(lit), e);
    detail::emit(out, format, "weight", w, std::to_string(w));
  });

  auto* cmd_block = app.add_subcommand("block", "residue-count block vector");
  add_common(cmd_block, true);
  cmd_block->add_option("-S", charges_lit, "multicharge literal, e.g. 0,1");
  cmd_block->add_option("partition", lit, "partition or multipartition literal")->required();
  cmd_block->callback([&] {
    BlockVector alpha = charges_lit.empty()
                            ? residue_counts(Partition::parse(lit), s, e)
                            : multi_block(Multipartition::parse(lit).components(),
                                          detail::parse_multicharge(charges_lit), e);
    detail::emit(out, format, "block", alpha, alpha.to_string());
  });

  auto* cmd_score = app.add_subcommand("score", "s-core of a block");
  add_common(cmd_score, true);
  cmd_score->add_option("-S", charges_lit, "multicharge literal, e.g. 0,1");
  cmd_score->add_option("--alpha", alpha_lit, "block vector literal c0,c1,...");
  cmd_score->add_option("partition", lit, "partition or multipartition literal");
  cmd_score->callback([&] {
    Multicharge charges =
        charges_lit.empty() ? Multicharge{s} : detail::parse_multicharge(charges_lit);
    BlockVector alpha(e);
    if (!alpha_lit.empty())
      alpha = detail::parse_block_literal(alpha_lit, e);
    else if (!lit.empty())
      alpha = charges.size() == 1 && lit.find('|') == std::string::npos
                  ? residue_counts(Partition::parse(lit), charges[0], e)
                  : multi_block(Multipartition::parse(lit).components(), charges, e);
    else
      throw std::invalid_argument("score needs a partition literal or --alpha");
    auto [core, h] = s_core_of_block(alpha, charges);
    std::ostringstream text;
    text << core.to_string() << " " << h;
    detail::emit(out, format, "score", nlohmann::json{{"core", core}, {"h", h}}, text.str());
  });

  auto* cmd_shift = app.add_subcommand("shift", "rotation by ehat at charge 0");
  add_common(cmd_shift, true);
  cmd_shift->add_option("--ehat", ehat, "shift amount")->required();
  bool on_core = false, classify = false;
  cmd_shift->add_flag("--core", on_core, "use the e-core rotation (input must be an e-core)");
  cmd_shift->add_flag("--classify", classify, "classify where the rotated block lands");
  cmd_shift->add_option("--alpha", alpha_lit, "block vector literal c0,c1,...");
  cmd_shift->add_option("partition", lit, "partition literal");
  cmd_shift->callback([&] {
    ShiftParam p(e, ehat);
    if (!alpha_lit.empty()) {
      BlockVector alpha = detail::parse_block_literal(alpha_lit, e);
      if (classify) {
        std::string cls = to_string(shift_block_membership(alpha, p));
        detail::emit(out, format, "classification", cls, cls);
      } else {
        BlockVector res = sigma_block(alpha, p);
        detail::emit(out, format, "shift", res, res.to_string());
      }
      return;
    }
    require(!lit.empty(), "shift needs a partition literal or --alpha");
    require(!classify, "--classify needs --alpha (membership is a property of a block)");
    Partition lam = Partition::parse(lit);
    Partition res = on_core ? sigma_core(lam, p) : sigma_partition(lam, p);
    detail::emit(out, format, "shift", res.to_string(), res.to_string());
  });

  auto* cmd_bound = app.add_subcommand("bound", "maximal reduced-multicore weight N(r,e)");
  long long r_arg = 0, e_arg = 0;
  bool flag_exact = false, flag_closed = false, flag_bounds = false;
  std::string strategy = "equal";
  cmd_bound->add_option("r", r_arg, "level")->required();
  cmd_bound->add_option("e", e_arg, "modulus")->required();
  cmd_bound->add_flag("--exact", flag_exact, "print N(r,e) only");
  cmd_bound->add_flag("--closed", flag_closed, "print the closed form only");
  cmd_bound->add_flag("--bounds", flag_bounds, "print lower and upper bounds only");
  cmd_bound->add_option("--strategy", strategy, "search strategy")
      ->check(CLI::IsMember({"equal", "full"}));
  cmd_bound->callback([&] {
    NStrategy strat = strategy == "full" ? NStrategy::full : NStrategy::equal_size;
    if (flag_exact) {
      long long v = n_exact(r_arg, e_arg, strat).value;
      detail::emit(out, format, "exact", v, std::to_string(v));
      return;
    }
    if (flag_closed) {
      auto cf = n_closed_form(r_arg, e_arg);
      detail::emit(out, format, "closed", cf ? nlohmann::json(*cf) : nlohmann::json(),
                   cf ? std::to_string(*cf) : "-");
      return;
    }
    if (flag_bounds) {
      auto [lo, hi] = n_bounds(r_arg, e_arg);
      std::ostringstream text;
      text << lo << " " << hi;
      detail::emit(out, format, "bounds", nlohmann::json{{"lower", lo}, {"upper", hi}},
                   text.str());
      return;
    }
    NExactResult res = n_exact(r_arg, e_arg, strat);
    auto cf = n_closed_form(r_arg, e_arg);
    auto [lo, hi] = n_bounds(r_arg, e_arg);
    if (format == "json") {
      nlohmann::json j{{"r", r_arg},         {"e", e_arg},
                       {"N", res.value},     {"lower", lo},
                       {"upper", hi},        {"closed", cf ? nlohmann::json(*cf) : nlohmann::json()},
                       {"witness", res.witness.to_string()}};
      out << j.dump() << "\n";
    } else {
      out << r_arg << "\t" << e_arg << "\t" << res.value << "\t" << lo << "\t" << hi << "\t"
          << (cf ? std::to_string(*cf) : "-") << "\t" << res.witness.to_string() << "\n";
    }
  });

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  VerifyConfig vcfg;
  std::string suite;
  cmd_verify->add_option("suite", suite, "suite name or 'all'")->required();
  cmd_verify->add_option("--max-n", vcfg.max_n, "enumeration size limit");
  cmd_verify->add_option("--max-e", vcfg.max_e, "modulus limit");
  cmd_verify->add_option("--max-r", vcfg.max_r, "level limit");
  cmd_verify->add_option("--seed", vcfg.seed, "seed for randomized properties");
  cmd_verify->add_option("--jobs", vcfg.jobs, "parallel suite execution");
  int verify_exit = 0;
  cmd_verify->callback([&] {
    require(vcfg.max_n > 0 && vcfg.max_e > 0 && vcfg.max_r > 0, "limits must be positive");
    std::vector<CheckResult> results = run_verification(suite, vcfg);
    std::size_t passed = 0;
    for (const CheckResult& c : results)
      if (c.passed) ++passed;
    bool all_ok = passed == results.size();
    if (format == "json") {
      nlohmann::json j{{"cases", results}, {"passed", all_ok}};
      out << j.dump() << "\n";
    } else if (format == "tsv") {
      for (const CheckResult& c : results)
        out << c.suite << "\t" << c.id << "\t" << (c.passed ? "PASS" : "FAIL") << "\t"
            << c.detail << "\n";
    } else {
      for (const CheckResult& c : results) {
        out << c.suite << "/" << c.id << ": " << (c.passed ? "PASS" : "FAIL");
        if (!c.passed && !c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
      }
      out << "passed " << passed << "/" << results.size() << "\n";
    }
    if (!all_ok) verify_exit = 1;
  });

  auto* cmd_abacus = app.add_subcommand("abacus", "render the charged e-abacus");
  add_common(cmd_abacus, true);
  cmd_abacus->add_option("partition", lit, "partition literal")->required();
  cmd_abacus->callback([&] {
    require(e >= 1, "abacus rendering needs e >= 1");
    out << AbacusProfile::of(Partition::parse(lit), s, e).render();
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& pe) {
    int code = app.exit(pe, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ResourceLimitError& re) {
    err << re.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& ia) {
    err << ia.what() << "\n";
    return 2;
  } catch (const std::domain_error& de) {
    err << de.what() << "\n";
    return 1;
  } catch (const std::overflow_error& oe) {
    err << oe.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << ex.what() << "\n";
    return 1;
  }
  return verify_exit;
}

}  // namespace coreblocks
