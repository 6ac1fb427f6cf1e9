#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fano/basket.hpp"
#include "fano/index_filters.hpp"
#include "fano/rational.hpp"
#include "fano/sieve.hpp"

namespace fano {

enum class DuValKind { A, D, E };

/// Transversal Du Val type of a curve in the singular locus.
///   e: 1 + number of exceptional curves of the minimal resolution
///   g: order of the local fundamental group
///   j: order of the local class group
struct CurveType {
  DuValKind kind = DuValKind::A;
  int index = 1;
  std::int64_t e = 0;
  std::int64_t g = 0;
  std::int64_t j = 0;

  std::string name() const;  // "A2", "D4", "E8"
  Rational weight() const { return Rational(e) - Rational(1, g); }
  Rational j_weight() const { return Rational(j) - Rational(1, j); }

  friend bool operator==(const CurveType& a, const CurveType& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend auto operator<=>(const CurveType& a, const CurveType& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.index <=> b.index;
  }
};

/// A_n (n >= 1), D_m (m >= 4), E_k (k in 6..8); anything else throws.
CurveType curve_type_data(DuValKind kind, int index);

/// Every curve type whose unit-degree weight e - 1/g is at most `bound`,
/// ordered A, D, E by index.
std::vector<CurveType> curve_types_within(const Rational& bound);

struct CurveEntry {
  CurveType type;
  std::int64_t degree = 1;  // r_X c1 . C

  friend bool operator==(const CurveEntry&, const CurveEntry&) = default;
  friend auto operator<=>(const CurveEntry& a, const CurveEntry& b) {
    if (auto c = a.type <=> b.type; c != 0) return c;
    return a.degree <=> b.degree;
  }
};

/// A multiset of singular curves, stored sorted.
struct CurveConfig {
  std::vector<CurveEntry> entries;

  Rational weight() const;    // sum (e - 1/g) * degree
  Rational j_weight() const;  // sum (j - 1/j) * degree
  std::int64_t j_lcm() const;
  std::string str() const;    // "{(A2,1),(A6,1)}"

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;
};

/// Upper bound on the curve sums: the same quantity as ja_bound.
Rational lemma27_rhs(const SieveRow& row, std::int64_t q);

/// All configurations with weight <= bound. When `ja_divides_lcm` is given it
/// must divide the lcm of the j values. Ordered by entry list.
std::vector<CurveConfig> curve_config_search(const Rational& bound,
                                             std::optional<std::int64_t> ja_divides_lcm,
                                             bool require_nonempty);

/// Possible values of the self-intersection (pullback of a torsion divisor)^2 . K_Y,
/// i.e. 4 - 2 * sum over basket points of (i b mod r)(r - i b mod r)/(2r) for
/// every choice of local indices i. Ascending.
std::vector<Rational> lemma211_values(const Basket& basket);

/// E_0^2 . f^*K_X for the crepant divisor over a unique A1 curve of degree 1.
inline const Rational kCrepantA1SelfIntersection{2, 3};

enum class Verdict { excluded, inconclusive };

struct TorsionExclusionRecord {
  std::string row_key;
  std::int64_t q = 0;
  std::int64_t q_hat = 0;
  Rational curve_bound;
  std::vector<CurveConfig> configs;
  std::vector<Rational> values;     // lemma211_values
  std::vector<Rational> quotients;  // values / E_0^2.f^*K_X, must be squares of a rational
  Verdict verdict = Verdict::inconclusive;
};

/// Decides the torsion argument from its ingredients. Excluded iff the only
/// curve configuration is a single A1 curve of degree 1 and no value divided
/// by the crepant constant is the square of a rational.
Verdict torsion_square_verdict(const std::vector<CurveConfig>& configs,
                               const std::vector<Rational>& values, const Rational& crepant);

/// Torsion exclusion for a q != q_W survivor with basket {(3,1)} and r_X c1^3 = 200.
TorsionExclusionRecord prop42_exclusion(const SieveRow& row, std::int64_t q, std::int64_t q_hat);

struct SubCheck {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct CurveExclusionRecord {
  std::string row_key;
  std::vector<SubCheck> checks;
  bool excluded = false;
};

/// Verifies every arithmetic step ruling out the degree-336/5 survivor
/// (basket {(5,2)}, q = q_W = 84, J_A = 21). When `table2` is given, also
/// checks that a non-Gorenstein contraction target with the same divisibility
/// can only be this row again. Throws std::runtime_error if any step fails.
CurveExclusionRecord prop41_checks(const SieveRow& row, std::int64_t q, std::int64_t ja,
                                   const FilterConstants& consts,
                                   std::span<const Table2Entry> table2 = {});

}  // namespace fano
