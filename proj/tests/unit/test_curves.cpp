#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "fano/classify.hpp"
#include "fano/curves.hpp"

using namespace fano;

namespace {

SieveRow make_row(const Basket& b, std::int64_t rx_deg) {
  SieveRow row;
  row.basket = b;
  row.r_x = gorenstein_index(b);
  row.rx_c2c1 = c2c1_from_basket(b) * row.r_x;
  row.rx_deg = rx_deg;
  return row;
}

// Counts multisets of (type, degree) atoms with total weight <= bound, by a
// knapsack over reachable weight sums. Types come from a hand-written table.
std::int64_t count_configs(const Rational& bound) {
  std::vector<Rational> weights;
  for (int n = 1; n <= 40; ++n) weights.push_back(Rational(n + 1) - Rational(1, n + 1));
  for (int m = 4; m <= 40; ++m) weights.push_back(Rational(m + 1) - Rational(1, 4 * m - 8));
  weights.push_back(Rational(7) - Rational(1, 24));
  weights.push_back(Rational(8) - Rational(1, 48));
  weights.push_back(Rational(9) - Rational(1, 120));
  std::map<Rational, std::int64_t> states{{Rational(0), 1}};
  for (const auto& w : weights) {
    for (std::int64_t d = 1; w * d <= bound; ++d) {
      const Rational atom = w * d;
      std::map<Rational, std::int64_t> next;
      for (const auto& [s, c] : states) {
        for (Rational t = s; t <= bound; t += atom) next[t] += c;
      }
      states = std::move(next);
    }
  }
  std::int64_t total = 0;
  for (const auto& [s, c] : states) total += c;
  return total;
}

}  // namespace

TEST_CASE("Du Val curve data") {
  auto a2 = curve_type_data(DuValKind::A, 2);
  CHECK((a2.e == 3 && a2.g == 3 && a2.j == 3));
  auto d4 = curve_type_data(DuValKind::D, 4);
  CHECK((d4.e == 5 && d4.g == 8 && d4.j == 4));
  auto e8 = curve_type_data(DuValKind::E, 8);
  CHECK((e8.e == 9 && e8.g == 120 && e8.j == 1));
  CHECK(curve_type_data(DuValKind::E, 6).g == 24);
  CHECK(curve_type_data(DuValKind::E, 7).j == 2);
  CHECK(e8.name() == "E8");
  CHECK_THROWS(curve_type_data(DuValKind::A, 0));
  CHECK_THROWS(curve_type_data(DuValKind::D, 3));
  CHECK_THROWS(curve_type_data(DuValKind::E, 9));
  for (const auto& t : curve_types_within(Rational(30))) {
    CHECK(t.j <= t.e);
    CHECK(t.j_weight() <= t.weight());
  }
}

TEST_CASE("curve sum bound") {
  CHECK(lemma27_rhs(make_row(Basket{{5, 2}}, 336), 84) == Rational(211, 21));
  CHECK(lemma27_rhs(make_row(Basket{{3, 1}}, 200), 4) == Rational(3, 2));
  CHECK(lemma27_rhs(make_row(Basket{{2, 1}}, 141), 1) == Rational(15, 16));
}

TEST_CASE("curve configuration search") {
  auto c = curve_config_search(Rational(211, 21), 21, true);
  REQUIRE(c.size() == 1);
  CHECK(c[0].str() == "{(A2,1),(A6,1)}");
  CHECK(c[0].j_lcm() == 21);
  auto a1 = curve_config_search(Rational(3, 2), std::nullopt, true);
  REQUIRE(a1.size() == 1);
  CHECK(a1[0].str() == "{(A1,1)}");
  auto empty = curve_config_search(Rational(1), std::nullopt, false);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].entries.empty());
  CHECK(curve_config_search(Rational(1), std::nullopt, true).empty());
}

TEST_CASE("curve search is complete up to bound 12") {
  for (int twice = 1; twice <= 24; ++twice) {
    const Rational bound(twice, 2);
    const auto configs = curve_config_search(bound, std::nullopt, false);
    std::set<std::string> distinct;
    for (const auto& c : configs) {
      CHECK(c.weight() <= bound);
      distinct.insert(c.str());
    }
    CHECK(distinct.size() == configs.size());
    CHECK_MESSAGE(static_cast<std::int64_t>(configs.size()) == count_configs(bound), bound.str());
  }
}

TEST_CASE("torsion self-intersection values") {
  CHECK(lemma211_values(Basket{{3, 1}}) == std::vector<Rational>{Rational(10, 3), Rational(4)});
  CHECK(lemma211_values(Basket{{2, 1}}) == std::vector<Rational>{Rational(7, 2), Rational(4)});
  CHECK_THROWS(lemma211_values(Basket{}));
}

TEST_CASE("torsion square verdict") {
  const auto a1 = curve_config_search(Rational(3, 2), std::nullopt, true);
  const std::vector<Rational> values{Rational(10, 3), Rational(4)};
  CHECK(torsion_square_verdict(a1, values, kCrepantA1SelfIntersection) == Verdict::excluded);
  // 8/3 / (2/3) = 4 is a square, so the argument no longer closes.
  CHECK(torsion_square_verdict(a1, {Rational(8, 3)}, kCrepantA1SelfIntersection) == Verdict::inconclusive);
  CHECK(torsion_square_verdict({}, values, kCrepantA1SelfIntersection) == Verdict::inconclusive);
}

TEST_CASE("torsion exclusion of the q != q_W rows") {
  const auto row = make_row(Basket{{3, 1}}, 200);
  for (auto [q, qh] : std::vector<std::pair<int, int>>{{4, 2}, {4, 1}, {2, 1}}) {
    auto rec = prop42_exclusion(row, q, qh);
    CHECK(rec.verdict == Verdict::excluded);
    CHECK(rec.curve_bound == Rational(3, 2));
    CHECK(rec.quotients == std::vector<Rational>{Rational(5), Rational(6)});
  }
  CHECK_THROWS(prop42_exclusion(row, 4, 4));
  CHECK_THROWS(prop42_exclusion(make_row(Basket{{2, 1}}, 133), 2, 1));
}

TEST_CASE("curve exclusion of the degree 336/5 row") {
  const auto result = classify();
  const auto row = make_row(Basket{{5, 2}}, 336);
  auto rec = prop41_checks(row, 84, 21, FilterConstants{}, result.table2);
  CHECK(rec.excluded);
  for (const auto& s : rec.checks) CHECK_MESSAGE(s.passed, s.name);
  auto find = [&](const std::string& name) {
    for (const auto& s : rec.checks) {
      if (s.name == name) return s.witness;
    }
    return std::string("missing");
  };
  CHECK(find("h0(-K)") == "36");
  CHECK(find("terminal escape") == "84 > 19");
  // A terminal index bound of 84 or more breaks the terminal escape.
  CHECK_THROWS_AS(prop41_checks(row, 84, 21, FilterConstants{Rational(324), Rational(72), 84}), std::runtime_error);
}
