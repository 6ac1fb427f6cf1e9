// Command-line front end: candidate tables, full classification, weighted
// projective space checks and golden-file comparison.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fano/curves.hpp"
#include "fano/report.hpp"
#include "fano/wps.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInvalid = 2;

struct Options {
  std::string format = "md";
  std::vector<std::string> window;
  bool emit_excluded = false;
  std::string weak_fano_bound = "324";
  std::string picard_one_bound = "72";
  std::int64_t suzuki_bound = 19;
};

fano::RunConfig make_config(const Options& opt) {
  fano::RunConfig cfg;
  if (opt.format == "md") {
    cfg.format = fano::OutputFormat::md;
  } else if (opt.format == "csv") {
    cfg.format = fano::OutputFormat::csv;
  } else if (opt.format == "json") {
    cfg.format = fano::OutputFormat::json;
  } else {
    throw std::invalid_argument("unknown format '" + opt.format + "'");
  }
  if (!opt.window.empty()) {
    cfg.window.lower = fano::Rational::parse(opt.window.at(0));
    cfg.window.upper = fano::Rational::parse(opt.window.at(1));
  }
  cfg.emit_excluded = opt.emit_excluded;
  cfg.constants.weak_fano_bound = fano::Rational::parse(opt.weak_fano_bound);
  cfg.constants.picard_one_bound = fano::Rational::parse(opt.picard_one_bound);
  cfg.constants.suzuki_bound = opt.suzuki_bound;
  cfg.validate();
  return cfg;
}

int run_wps(const std::vector<std::int64_t>& weights, const std::optional<std::string>& basket_text,
            fano::OutputFormat format) {
  fano::WeightedP3 w({weights.at(0), weights.at(1), weights.at(2), weights.at(3)});
  std::optional<fano::Basket> basket;
  if (basket_text) basket = fano::Basket::parse(*basket_text);

  const auto degree = fano::anticanonical_degree(w);
  const auto index = fano::weil_index(w);
  const auto h0 = fano::h0_monomials(w, index);
  std::vector<std::pair<std::string, std::string>> strata;
  for (const auto& s : fano::singular_strata(w)) {
    std::string label;
    try {
      label = std::string(fano::to_string(fano::reid_tai(s.type)));
    } catch (const fano::NotSupported&) {
      label = "NOT-SUPPORTED";
    }
    strata.emplace_back(s.str(), label);
  }
  std::optional<bool> consistent;
  if (basket) consistent = fano::basket_consistency(w, *basket);

  if (format == fano::OutputFormat::json) {
    nlohmann::json j{{"weights", w.str()}, {"degree", degree.str()}, {"weil_index", index}, {"h0", h0}};
    j["strata"] = nlohmann::json::array();
    for (const auto& [where, label] : strata) j["strata"].push_back({{"stratum", where}, {"reid_tai", label}});
    if (basket) {
      j["basket"] = basket->str();
      j["basket_consistent"] = *consistent;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "weights: " << w.str() << "\n"
              << "degree: " << degree.str() << "\n"
              << "weil_index: " << index << "\n"
              << "h0(-K): " << h0 << "\n";
    if (strata.empty()) std::cout << "strata: smooth\n";
    for (const auto& [where, label] : strata) std::cout << "stratum: " << where << " " << label << "\n";
    if (basket) std::cout << "basket " << basket->str() << ": " << (*consistent ? "consistent" : "inconsistent") << "\n";
  }
  return consistent.value_or(true) ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of degree candidates for non-Gorenstein canonical Fano threefolds"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format: md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
  app.add_option("--window", opt.window, "Open degree window LO HI (rationals)")->expected(2);
  app.add_flag("--emit-excluded", opt.emit_excluded, "Also print every candidate with its exclusion reason");
  app.add_option("--weak-fano-bound", opt.weak_fano_bound, "Degree bound for canonical weak Fano threefolds");
  app.add_option("--picard-bound", opt.picard_one_bound, "Degree bound for Picard number one");
  app.add_option("--suzuki-bound", opt.suzuki_bound, "Weil index bound for terminal Picard-one Fanos");

  auto* tables = app.add_subcommand("tables", "Regime candidate tables");
  auto* classify = app.add_subcommand("classify", "Full case analysis and exclusions");

  auto* wps = app.add_subcommand("wps", "Invariants of a weighted projective 3-space");
  std::vector<std::int64_t> weights;
  std::optional<std::string> basket_text;
  wps->add_option("weights", weights, "a0 a1 a2 a3")->required()->expected(4);
  wps->add_option("--basket", basket_text, "Basket to check, e.g. \"(3,1)\"");

  auto* reid_tai = app.add_subcommand("reid-tai", "Classify a cyclic quotient 1/r(w1,w2,w3)");
  std::vector<std::int64_t> quotient;
  reid_tai->add_option("r_and_weights", quotient, "r w1 w2 w3")->required()->expected(4);

  auto* curve_search = app.add_subcommand("curve-search", "Singular-curve configurations under a bound");
  std::string bound_text;
  std::optional<std::int64_t> lcm_divisor;
  bool allow_empty = false;
  curve_search->add_option("bound", bound_text, "Rational bound")->required();
  curve_search->add_option("--lcm-divisor", lcm_divisor, "Require J | lcm of the j values");
  curve_search->add_flag("--allow-empty", allow_empty, "Include the empty configuration");

  auto* diff = app.add_subcommand("diff", "Compare generated tables with golden CSV files");
  std::string golden_dir;
  diff->add_option("--golden", golden_dir, "Directory of golden CSV files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const auto cfg = make_config(opt);
    if (*tables) {
      std::cout << fano::render(fano::cmd_tables(cfg), cfg.format);
      return kOk;
    }
    if (*classify) {
      std::cout << fano::render(fano::cmd_classify(cfg), cfg.format);
      return kOk;
    }
    if (*wps) return run_wps(weights, basket_text, cfg.format);
    if (*reid_tai) {
      fano::QuotientPoint p(quotient[0], {quotient[1], quotient[2], quotient[3]});
      try {
        std::cout << p.str() << ": " << fano::to_string(fano::reid_tai(p)) << "\n";
      } catch (const fano::NotSupported&) {
        std::cout << p.str() << ": NOT-SUPPORTED\n";
      }
      return kOk;
    }
    if (*curve_search) {
      auto configs = fano::curve_config_search(fano::Rational::parse(bound_text), lcm_divisor, !allow_empty);
      for (const auto& c : configs) {
        std::cout << c.str() << " weight=" << c.weight().str() << " j_lcm=" << c.j_lcm() << "\n";
      }
      std::cout << configs.size() << " configuration(s)\n";
      return kOk;
    }
    if (*diff) {
      bool all = true;
      for (const auto& r : fano::cmd_diff(golden_dir, cfg)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << fano::to_string(r.id) << ": " << r.message << "\n";
        all = all && r.passed;
      }
      return all ? kOk : kMismatch;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}
