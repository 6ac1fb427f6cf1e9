#include "fano/sieve.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fano/number_theory.hpp"

namespace fano {

std::string_view to_string(QRegime regime) {
  switch (regime) {
    case QRegime::low: return "LOW";
    case QRegime::six: return "SIX";
    case QRegime::high: return "HIGH";
  }
  return "?";
}

QRegime regime_of(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("Fano index must be positive");
  if (q <= 5) return QRegime::low;
  if (q == 6) return QRegime::six;
  return QRegime::high;
}

Rational km_coefficient(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("Fano index must be positive");
  if (q <= 5) return Rational(16, 5);
  return Rational(4 * q * q, q * q + 2 * q - 4);
}

Rational km_reciprocal(std::int64_t q) { return km_coefficient(q).reciprocal(); }

Rational regime_reciprocal(QRegime regime) {
  switch (regime) {
    case QRegime::low: return Rational(5, 16);
    case QRegime::six: return Rational(11, 36);
    case QRegime::high: return Rational(1, 4);
  }
  throw std::logic_error("unknown regime");
}

Rational rsum_bound(QRegime regime, const Rational& deg_lower) {
  return Rational(24) - regime_reciprocal(regime) * deg_lower;
}

namespace {

void extend_multisets(const Rational& bound, std::vector<std::int64_t>& current, const Rational& used,
                      std::vector<std::vector<std::int64_t>>& out) {
  std::int64_t start = current.empty() ? 2 : current.back();
  for (std::int64_t r = start;; ++r) {
    Rational next = used + Rational(r) - Rational(1, r);
    if (next >= bound) break;  // r - 1/r is increasing in r
    current.push_back(r);
    out.push_back(current);
    extend_multisets(bound, current, next, out);
    current.pop_back();
  }
}

std::vector<std::int64_t> admissible_b(std::int64_t r) {
  std::vector<std::int64_t> out;
  for (std::int64_t b = 1; 2 * b <= r; ++b) {
    if (std::gcd(b, r) == 1) out.push_back(b);
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_rx_multisets(const Rational& bound) {
  if (bound <= 0) throw std::invalid_argument("enumerate_rx_multisets: bound must be positive");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current;
  extend_multisets(bound, current, Rational(0), out);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Basket> enumerate_baskets(std::span<const std::int64_t> rx) {
  std::set<Basket> seen;
  std::vector<BasketPoint> current;
  auto assign = [&](auto&& self, std::size_t i) -> void {
    if (i == rx.size()) {
      seen.insert(Basket(current));
      return;
    }
    if (rx[i] < 2) throw std::invalid_argument("basket r-values must be >= 2");
    for (auto b : admissible_b(rx[i])) {
      current.push_back({rx[i], b});
      self(self, i + 1);
      current.pop_back();
    }
  };
  assign(assign, 0);
  return {seen.begin(), seen.end()};
}

std::string SieveRow::key() const {
  return "RX=" + format_multiset(rx()) + ";deg=" + std::to_string(rx_deg);
}

Rational SieveGroup::max_slack() const {
  if (rows.empty()) throw std::logic_error("max_slack of an empty group");
  Rational best = rows.front().slack;
  for (const auto& row : rows) best = std::max(best, row.slack);
  return best;
}

std::vector<SieveRow> CaseTable::rows() const {
  std::vector<SieveRow> out;
  for (const auto& g : groups) out.insert(out.end(), g.rows.begin(), g.rows.end());
  return out;
}

CaseTable build_case_table(QRegime regime, const Window& window) {
  if (!(window.lower < window.upper)) throw std::invalid_argument("window must satisfy lower < upper");
  const Rational coeff = regime_reciprocal(regime);
  CaseTable table{regime, window, {}};

  for (const auto& rx : enumerate_rx_multisets(rsum_bound(regime, window.lower))) {
    SieveGroup group;
    group.rx = rx;
    group.r_x = lcm_list(rx);
    Rational rsum;
    for (auto r : rx) rsum += Rational(r) - Rational(1, r);
    group.rx_c2c1 = (Rational(24) - rsum) * group.r_x;

    for (const auto& basket : enumerate_baskets(rx)) {
      for (const auto& cand : degree_candidates(basket, window.lower, window.upper)) {
        Rational slack = group.rx_c2c1 - coeff * cand.rx_deg;
        // The high regime also needs c1^3 < 4*c2c1, i.e. a strictly positive slack.
        bool keep = regime == QRegime::high ? slack > 0 : !slack.is_negative();
        if (keep) {
          group.rows.push_back({basket, group.r_x, group.rx_c2c1, cand.rx_deg, slack});
        } else {
          group.rejected.push_back({basket, cand.rx_deg, slack});
        }
      }
    }
    std::sort(group.rows.begin(), group.rows.end(), [](const SieveRow& a, const SieveRow& b) {
      if (a.rx_deg != b.rx_deg) return a.rx_deg < b.rx_deg;
      return a.basket < b.basket;
    });
    table.groups.push_back(std::move(group));
  }
  return table;
}

}  // namespace fano
