#pragma once

#include <cstdint>
#include <vector>

#include "fano/curves.hpp"
#include "fano/index_filters.hpp"

namespace fano {

/// Full pipeline: sieve, index filters, then the curve and torsion exclusions
/// applied to the survivor table.
struct Classification {
  CaseAnalysis analysis;
  std::vector<Table2Entry> table2;  // every survivor of the case analysis, removed_by set afterwards
  std::vector<CurveExclusionRecord> curve_exclusions;
  std::vector<TorsionExclusionRecord> torsion_exclusions;

  std::vector<Table2Entry> survivors() const;

  /// Largest surviving degree and the (q, q_W) pairs attaining it.
  Rational max_degree() const;
  std::vector<std::int64_t> q_set_at_max() const;
  bool q_equals_q_hat_at_max() const;
};

Classification classify(const Window& window = {}, const FilterConstants& consts = {});

}  // namespace fano
