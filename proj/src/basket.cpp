#include "fano/basket.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

#include "fano/number_theory.hpp"

namespace fano {

void BasketPoint::validate() const {
  if (r < 2) throw std::invalid_argument("basket point needs r >= 2");
  if (b < 1 || 2 * b > r) throw std::invalid_argument("basket point needs 1 <= b <= r/2");
  if (std::gcd(r, b) != 1) throw std::invalid_argument("basket point needs gcd(b, r) = 1");
}

Basket::Basket(std::vector<BasketPoint> points) : points_(std::move(points)) {
  for (const auto& p : points_) p.validate();
  std::sort(points_.begin(), points_.end());
}

Basket::Basket(std::initializer_list<BasketPoint> points)
    : Basket(std::vector<BasketPoint>(points)) {}

std::vector<std::int64_t> Basket::r_values() const {
  std::vector<std::int64_t> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.r);
  return out;
}

Basket Basket::with_point(BasketPoint p) const {
  auto pts = points_;
  pts.push_back(p);
  return Basket(std::move(pts));
}

std::string Basket::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(points_[i].r) + "," + std::to_string(points_[i].b) + ")";
  }
  return out + "}";
}

Basket Basket::parse(const std::string& text) {
  static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::vector<BasketPoint> pts;
  for (std::sregex_iterator it(text.begin(), text.end(), pair_re), end; it != end; ++it) {
    pts.push_back({std::stoll((*it)[1]), std::stoll((*it)[2])});
  }
  std::string stripped = std::regex_replace(text, pair_re, "");
  stripped.erase(std::remove_if(stripped.begin(), stripped.end(),
                                [](char c) { return c == ' ' || c == ',' || c == '{' || c == '}'; }),
                 stripped.end());
  if (!stripped.empty()) throw std::invalid_argument("cannot parse basket '" + text + "'");
  return Basket(std::move(pts));
}

std::string format_multiset(const std::vector<std::int64_t>& rx) {
  std::string out = "{";
  for (std::size_t i = 0; i < rx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rx[i]);
  }
  return out + "}";
}

Rational r_sum(const Basket& basket) {
  Rational sum;
  for (const auto& p : basket.points()) sum += Rational(p.r) - Rational(1, p.r);
  return sum;
}

Rational c2c1_from_basket(const Basket& basket) {
  Rational s = r_sum(basket);
  if (s >= 24) throw std::domain_error("basket " + basket.str() + " has r_sum >= 24");
  return Rational(24) - s;
}

Rational genus_term(const Basket& basket) {
  Rational sum;
  for (const auto& p : basket.points()) sum += Rational(p.b * (p.r - p.b), 2 * p.r);
  return sum;
}

std::int64_t gorenstein_index(const Basket& basket) {
  if (basket.empty()) throw std::invalid_argument("gorenstein_index: empty basket");
  auto rs = basket.r_values();
  return lcm_list(rs);
}

std::optional<std::int64_t> h0_from_degree(const Rational& deg, const Basket& basket) {
  Rational h0 = deg / 2 + 3 - genus_term(basket);
  if (!h0.is_integer() || h0.is_negative()) return std::nullopt;
  return h0.num();
}

Rational DegreeCandidate::degree() const {
  return basket.empty() ? Rational(rx_deg) : Rational(rx_deg, gorenstein_index(basket));
}

std::vector<DegreeCandidate> degree_candidates(const Basket& basket, const Rational& lower,
                                               const Rational& upper) {
  if (!(lower < upper)) throw std::invalid_argument("degree_candidates: lower must be < upper");
  const std::int64_t r_x = basket.empty() ? 1 : gorenstein_index(basket);
  const Rational shift = 2 * genus_term(basket) - 6;  // deg = 2*h0 + shift

  // smallest h0 >= 0 with 2*h0 + shift > lower
  std::int64_t h0 = std::max<std::int64_t>(0, ((lower - shift) / 2).floor() + 1);
  std::vector<DegreeCandidate> out;
  for (;; ++h0) {
    Rational deg = Rational(2 * h0) + shift;
    if (deg >= upper) break;
    Rational scaled = deg * r_x;
    if (!scaled.is_integer()) throw std::logic_error("r_X * degree must be integral");
    out.push_back({basket, scaled.num(), h0});
  }
  return out;
}

}  // namespace fano
