#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/rational.hpp"
#include "fano/sieve.hpp"

namespace fano {

/// Why a candidate was dropped. Each excluded candidate carries exactly one.
enum class Exclusion {
  rr_integrality,  // h0(-K) not a non-negative integer
  km_bound,        // Kawamata-Miyaoka inequality of the regime
  thm25_1,         // q^2 does not divide J_A * r_X c1^3
  qhat_div,        // q_W does not divide r_X c1^3
  ja_bound_24,     // prime-power sum of J_A above the q-specific bound
  ja_bound_25,     // prime-power sum of J_A not strictly below r_X c2c1 - r_X c1^3 / 4
  lemma_210,       // q = 1 and c1^3 > 3 c2c1
  torsion_324,     // index-one cover would exceed the weak Fano bound
  torsion_q7,      // torsion cover would exceed the Picard-one bound
  curve_prop41,
  torsion_prop42,
};

std::string_view to_string(Exclusion reason);
std::optional<Exclusion> exclusion_from_string(std::string_view text);

/// The branches of the case analysis, in the order they are run.
enum class SubCase {
  low_unequal,   // q <= 5, q != q_W
  low_ja_eq_q,   // q <= 5, q = q_W = J_A
  low_ja_ne_q,   // q <= 5, q = q_W, J_A != q
  six_unequal,   // q = 6, q != q_W
  six_equal,     // q = q_W = 6
  high_ja_eq_q,  // q >= 7, J_A = q
  high_ja_ne_q,  // q >= 7, J_A != q
};

std::string_view to_string(SubCase sub);
QRegime regime_of(SubCase sub);

/// Bounds quoted from external results; configuration, never derived here.
struct FilterConstants {
  Rational weak_fano_bound{324};
  Rational picard_one_bound{72};
  std::int64_t suzuki_bound = 19;

  void validate() const;
};

struct IndexedCase {
  SieveRow row;
  std::int64_t q = 0;
  std::int64_t q_hat = 0;
  std::int64_t ja = 0;
  SubCase origin = SubCase::low_unequal;
  std::optional<Exclusion> reason;  // first failing filter
  std::vector<Exclusion> failed;    // every failing filter, in filter order

  bool survivor() const { return !reason.has_value(); }
  bool fails(Exclusion e) const;
  std::string key() const;
};

/// Sum of (p^a - 1/p^a) over the prime-power components of J.
Rational prime_power_sum(std::int64_t J);

/// r_X c2c1 - km_reciprocal(q) * r_X c1^3.
Rational ja_bound(const SieveRow& row, std::int64_t q);

/// Every J >= 1 with prime_power_sum(J) <= bound (< bound when strict), ascending.
std::vector<std::int64_t> admissible_ja(const Rational& bound, bool strict);

/// True iff q^2 divides ja * rx_deg.
bool thm25_integrality(std::int64_t ja, std::int64_t rx_deg, std::int64_t q);

/// Index-one cover of order q/q_hat. Requires q != q_hat.
std::optional<Exclusion> torsion_cover_filter(const IndexedCase& c, const FilterConstants& consts);

/// Torsion in the class group once q >= 7. Requires q >= 7.
std::optional<Exclusion> torsion_q7_filter(const IndexedCase& c, const FilterConstants& consts);

/// Stability bound c1^3 <= 3 c2c1, applicable when q = 1.
std::optional<Exclusion> q1_stability_filter(const SieveRow& row);

/// Re-checks orbifold Riemann-Roch integrality and the regime inequality.
std::optional<Exclusion> audit_row(const SieveRow& row, QRegime regime);

struct QJaPair {
  std::int64_t q = 0;
  std::int64_t ja = 0;

  std::int64_t square_factor() const { return q / ja; }
  friend bool operator==(const QJaPair&, const QJaPair&) = default;
};

/// Pairs (q, J_A) with d = q/J_A > 1, d^2 | rx_deg, J_A | rx_deg/d^2 and
/// q in [q_min, q_max]. Sorted by d, then J_A.
std::vector<QJaPair> square_factor_pairs(std::int64_t rx_deg, std::int64_t q_min,
                                         std::optional<std::int64_t> q_max);

struct CaseFilter {
  Exclusion reason;
  std::function<bool(const IndexedCase&)> rejects;
};

struct SubcasePlan {
  SubCase id = SubCase::low_unequal;
  std::vector<IndexedCase> candidates;
  std::vector<CaseFilter> filters;
};

/// Runs the plan's filters over its candidates, recording reason and failed.
void apply_filters(SubcasePlan& plan);

struct Table2Ja {
  std::int64_t ja = 0;
  SubCase origin = SubCase::low_unequal;
};

/// One line of the survivor table: every J_A reached for (row, q, q_hat).
struct Table2Entry {
  SieveRow row;
  std::int64_t q = 0;
  std::int64_t q_hat = 0;
  std::vector<Table2Ja> ja;  // descending
  std::optional<Exclusion> removed_by;

  std::vector<std::int64_t> ja_values() const;
};

/// An argument that discharges a whole branch without enumerating it.
struct RuleCheck {
  std::string name;
  bool holds = false;
  std::string witness;
};

struct CaseAnalysis {
  Window window;
  FilterConstants consts;
  CaseTable low;
  CaseTable six;
  CaseTable high;
  std::vector<SubcasePlan> plans;
  std::vector<RuleCheck> rules;
  std::vector<Table2Entry> table2;

  const SubcasePlan& plan(SubCase id) const;
};

/// Candidate generation and filter order for every sub-case.
std::vector<SubcasePlan> plan_case_analysis(const CaseTable& low, const CaseTable& six,
                                            const CaseTable& high, const FilterConstants& consts);

/// Groups survivors by (row, q, q_hat); sorted by degree, q, q_hat, all descending.
std::vector<Table2Entry> assemble_table2(const std::vector<SubcasePlan>& plans);

CaseAnalysis run_case_analysis(const Window& window = {}, const FilterConstants& consts = {});

}  // namespace fano
