#include "fano/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fano {

std::vector<Table2Entry> Classification::survivors() const {
  std::vector<Table2Entry> out;
  std::copy_if(table2.begin(), table2.end(), std::back_inserter(out),
               [](const Table2Entry& e) { return !e.removed_by; });
  return out;
}

Rational Classification::max_degree() const {
  auto alive = survivors();
  if (alive.empty()) throw std::logic_error("no surviving candidates");
  Rational best = alive.front().row.degree();
  for (const auto& e : alive) best = std::max(best, e.row.degree());
  return best;
}

std::vector<std::int64_t> Classification::q_set_at_max() const {
  const Rational top = max_degree();
  std::set<std::int64_t> qs;
  for (const auto& e : survivors()) {
    if (e.row.degree() == top) qs.insert(e.q);
  }
  return {qs.begin(), qs.end()};
}

bool Classification::q_equals_q_hat_at_max() const {
  const Rational top = max_degree();
  for (const auto& e : survivors()) {
    if (e.row.degree() == top && e.q != e.q_hat) return false;
  }
  return true;
}

Classification classify(const Window& window, const FilterConstants& consts) {
  Classification out;
  out.analysis = run_case_analysis(window, consts);
  out.table2 = out.analysis.table2;

  const Basket five_two{{5, 2}};
  for (auto& entry : out.table2) {
    if (entry.row.basket == five_two && entry.row.rx_deg == 336 && entry.q == entry.q_hat) {
      for (auto ja : entry.ja_values()) {
        out.curve_exclusions.push_back(prop41_checks(entry.row, entry.q, ja, consts, out.analysis.table2));
      }
      entry.removed_by = Exclusion::curve_prop41;
    }
  }
  for (auto& entry : out.table2) {
    if (entry.q == entry.q_hat) continue;
    auto rec = prop42_exclusion(entry.row, entry.q, entry.q_hat);
    if (rec.verdict == Verdict::excluded) entry.removed_by = Exclusion::torsion_prop42;
    out.torsion_exclusions.push_back(std::move(rec));
  }
  return out;
}

}  // namespace fano
