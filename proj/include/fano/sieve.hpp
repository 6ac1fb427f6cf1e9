#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fano/basket.hpp"
#include "fano/rational.hpp"

namespace fano {

/// Coarse range of the Q-Fano index: q <= 5, q = 6, q >= 7.
enum class QRegime { low, six, high };

std::string_view to_string(QRegime regime);
QRegime regime_of(std::int64_t q);

/// Kawamata-Miyaoka coefficient: 16/5 for q <= 5, 4q^2/(q^2+2q-4) otherwise.
Rational km_coefficient(std::int64_t q);

/// 1 / km_coefficient(q).
Rational km_reciprocal(std::int64_t q);

/// Coefficient used when a whole regime is sieved at once: 5/16, 11/36, 1/4.
Rational regime_reciprocal(QRegime regime);

/// 24 - regime_reciprocal * deg_lower.
Rational rsum_bound(QRegime regime, const Rational& deg_lower);

/// Multisets of integers >= 2 with sum (r - 1/r) < bound, ordered by size
/// and then lexicographically.
std::vector<std::vector<std::int64_t>> enumerate_rx_multisets(const Rational& bound);

/// Every basket whose r-values are exactly `rx`, symmetric duplicates removed.
std::vector<Basket> enumerate_baskets(std::span<const std::int64_t> rx);

struct Window {
  Rational lower{66};
  Rational upper{72};
};

struct SieveRow {
  Basket basket;
  std::int64_t r_x = 0;
  Rational rx_c2c1;
  std::int64_t rx_deg = 0;
  Rational slack;  // rx_c2c1 - regime_reciprocal * rx_deg

  Rational degree() const { return Rational(rx_deg, r_x); }
  Rational c2c1() const { return rx_c2c1 / r_x; }
  std::vector<std::int64_t> rx() const { return basket.r_values(); }

  /// Stable identifier "RX={2,2};deg=134".
  std::string key() const;

  friend bool operator==(const SieveRow&, const SieveRow&) = default;
};

/// Candidate that fell inside the window but failed the regime inequality.
struct SieveRejection {
  Basket basket;
  std::int64_t rx_deg = 0;
  Rational slack;
};

/// All rows sharing one R_X. An empty `rows` list is printed as "None".
struct SieveGroup {
  std::vector<std::int64_t> rx;
  std::int64_t r_x = 0;
  Rational rx_c2c1;
  std::vector<SieveRow> rows;
  std::vector<SieveRejection> rejected;

  bool none() const { return rows.empty(); }
  Rational max_slack() const;
};

struct CaseTable {
  QRegime regime = QRegime::low;
  Window window;
  std::vector<SieveGroup> groups;

  std::vector<SieveRow> rows() const;
};

/// Sieves every R_X under rsum_bound(regime, window.lower): degree candidates
/// inside the window (and below 4*c2c1 for the high regime) that satisfy the
/// regime's Kawamata-Miyaoka inequality.
CaseTable build_case_table(QRegime regime, const Window& window = {});

}  // namespace fano
