#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

/// An orbifold point of type 1/r(1,-1,b).
struct BasketPoint {
  std::int64_t r = 0;
  std::int64_t b = 0;

  /// Throws std::invalid_argument unless r >= 2, 1 <= b <= r/2, gcd(b,r) = 1.
  void validate() const;

  friend auto operator<=>(const BasketPoint&, const BasketPoint&) = default;
};

/// Multiset of basket points, kept sorted so equal baskets compare equal.
class Basket {
 public:
  Basket() = default;
  explicit Basket(std::vector<BasketPoint> points);
  Basket(std::initializer_list<BasketPoint> points);

  const std::vector<BasketPoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

  /// The multiset R_X of r-values, ascending.
  std::vector<std::int64_t> r_values() const;

  Basket with_point(BasketPoint p) const;

  /// "{(3,1)}", "{(2,1),(5,2)}", "{}".
  std::string str() const;

  /// Parses "(3,1)" or "{(2,1),(5,2)}"; "{}" is the empty basket.
  static Basket parse(const std::string& text);

  friend auto operator<=>(const Basket&, const Basket&) = default;

 private:
  std::vector<BasketPoint> points_;
};

/// "{2,2}" rendering of an r-value multiset.
std::string format_multiset(const std::vector<std::int64_t>& rx);

/// Sum of (r - 1/r) over the basket, with multiplicity.
Rational r_sum(const Basket& basket);

/// c2.c1 = 24 - r_sum. Throws std::domain_error when r_sum >= 24.
Rational c2c1_from_basket(const Basket& basket);

/// Sum of b(r-b)/(2r).
Rational genus_term(const Basket& basket);

/// lcm of the r-values. Throws on an empty basket.
std::int64_t gorenstein_index(const Basket& basket);

/// h0(-K) = deg/2 + 3 - genus_term when that is a non-negative integer,
/// otherwise nullopt.
std::optional<std::int64_t> h0_from_degree(const Rational& deg, const Basket& basket);

struct DegreeCandidate {
  Basket basket;
  std::int64_t rx_deg = 0;  // r_X * c1^3
  std::int64_t h0 = 0;

  Rational degree() const;
};

/// Every degree 2h0 - 6 + 2*genus_term with h0 >= 0 inside the open
/// interval (lower, upper), ascending.
std::vector<DegreeCandidate> degree_candidates(const Basket& basket, const Rational& lower,
                                               const Rational& upper);

}  // namespace fano
