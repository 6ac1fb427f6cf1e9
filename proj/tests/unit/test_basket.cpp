#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "fano/basket.hpp"
#include "fano/sieve.hpp"

using namespace fano;

TEST_CASE("basket point validation") {
  CHECK_NOTHROW((BasketPoint{5, 2}.validate()));
  CHECK_NOTHROW((BasketPoint{2, 1}.validate()));
  CHECK_THROWS_AS((BasketPoint{1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BasketPoint{5, 3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BasketPoint{4, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BasketPoint{5, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Basket{{6, 2}}), std::invalid_argument);
}

TEST_CASE("basket parse and print") {
  CHECK(Basket::parse("(3,1)") == Basket{{3, 1}});
  CHECK(Basket::parse("{(5,2),(2,1)}") == Basket{{2, 1}, {5, 2}});
  CHECK(Basket::parse("{}").empty());
  CHECK(Basket::parse(" { (2, 1) , (2,1) } ").size() == 2);
  CHECK((Basket{{5, 2}, {2, 1}}).str() == "{(2,1),(5,2)}");
  CHECK(Basket{}.str() == "{}");
  CHECK_THROWS_AS(Basket::parse("(3,2)"), std::invalid_argument);
  CHECK_THROWS_AS(Basket::parse("(3,1"), std::invalid_argument);
  CHECK_THROWS_AS(Basket::parse("3,1"), std::invalid_argument);
  CHECK(format_multiset({2, 2}) == "{2,2}");
}

TEST_CASE("basket invariants") {
  CHECK(r_sum(Basket{{2, 1}, {2, 1}}) == Rational(3));
  CHECK(r_sum(Basket{}) == Rational(0));
  CHECK(r_sum(Basket{{5, 2}}) == Rational(24, 5));
  CHECK(c2c1_from_basket(Basket{{3, 1}}) == Rational(64, 3));
  CHECK(c2c1_from_basket(Basket{{2, 1}}) == Rational(45, 2));
  CHECK(c2c1_from_basket(Basket{{2, 1}, {5, 2}}) == Rational(177, 10));
  CHECK_THROWS_AS(c2c1_from_basket(Basket{{5, 1}, {5, 1}, {5, 1}, {5, 1}, {5, 1}}), std::domain_error);
  CHECK(genus_term(Basket{{3, 1}}) == Rational(1, 3));
  CHECK(genus_term(Basket{}) == Rational(0));
  CHECK(genus_term(Basket{{5, 2}}) == Rational(3, 5));
  CHECK(gorenstein_index(Basket{{2, 1}, {3, 1}}) == 6);
  CHECK(gorenstein_index(Basket{{3, 1}, {3, 1}}) == 3);
  CHECK(gorenstein_index(Basket{{2, 1}, {2, 1}, {2, 1}, {3, 1}}) == 6);
  CHECK_THROWS(gorenstein_index(Basket{}));
}

TEST_CASE("h0 from degree") {
  CHECK(h0_from_degree(Rational(336, 5), Basket{{5, 2}}) == 36);
  CHECK(h0_from_degree(Rational(200, 3), Basket{{3, 1}}) == 36);
  CHECK_FALSE(h0_from_degree(Rational(67), Basket{{3, 1}}).has_value());
  CHECK(h0_from_degree(Rational(64), Basket{}) == 35);
}

TEST_CASE("degree candidates") {
  auto rx_degs = [](const Basket& b, Rational lo, Rational hi) {
    std::vector<std::int64_t> out;
    for (const auto& c : degree_candidates(b, lo, hi)) out.push_back(c.rx_deg);
    return out;
  };
  CHECK(rx_degs(Basket{{2, 1}}, 66, 72) == std::vector<std::int64_t>{133, 137, 141});
  CHECK(rx_degs(Basket{{5, 1}}, 66, 72) == std::vector<std::int64_t>{334, 344, 354});
  CHECK(rx_degs(Basket{{5, 2}}, 66, 72) == std::vector<std::int64_t>{336, 346, 356});
  CHECK(rx_degs(Basket{{3, 1}}, 66, Rational(200, 3)).empty());
  CHECK(rx_degs(Basket{{2, 1}}, 66, 70) == std::vector<std::int64_t>{133, 137});
  CHECK_THROWS(degree_candidates(Basket{{2, 1}}, 72, 66));
}

TEST_CASE("degree candidates match a brute-force h0 scan") {
  const auto multisets = enumerate_rx_multisets(Rational(15, 2));
  int baskets = 0;
  for (const auto& rx : multisets) {
    for (const auto& basket : enumerate_baskets(rx)) {
      ++baskets;
      // Independent form: deg = 2 h0 - 6 + sum b(r-b)/r.
      Rational g2(0);
      std::int64_t rX = 1;
      for (const auto& p : basket.points()) {
        g2 += Rational(p.b * (p.r - p.b), p.r);
        rX = std::lcm(rX, p.r);
      }
      std::vector<std::pair<std::int64_t, std::int64_t>> expected;
      for (std::int64_t h0 = 0; h0 <= 100; ++h0) {
        Rational deg = Rational(2 * h0 - 6) + g2;
        if (deg > Rational(66) && deg < Rational(72)) expected.emplace_back((deg * rX).num(), h0);
      }
      std::vector<std::pair<std::int64_t, std::int64_t>> got;
      for (const auto& c : degree_candidates(basket, 66, 72)) {
        CHECK(c.degree() * Rational(rX) == Rational(c.rx_deg));
        CHECK(h0_from_degree(c.degree(), basket) == c.h0);
        got.emplace_back(c.rx_deg, c.h0);
      }
      CHECK_MESSAGE(got == expected, basket.str());
    }
  }
  CHECK(baskets > 20);
}
