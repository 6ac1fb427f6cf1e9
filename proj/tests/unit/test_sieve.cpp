#include <algorithm>
#include <functional>
#include <stdexcept>

#include "doctest.h"
#include "fano/sieve.hpp"

using namespace fano;
using Multiset = std::vector<std::int64_t>;

TEST_CASE("Kawamata-Miyaoka coefficients") {
  CHECK(km_coefficient(6) == Rational(36, 11));
  CHECK(km_coefficient(1) == Rational(16, 5));
  CHECK(km_coefficient(5) == Rational(16, 5));
  CHECK(km_coefficient(84) == Rational(7056, 1805));
  CHECK(km_reciprocal(7) == Rational(59, 196));
  CHECK(regime_of(5) == QRegime::low);
  CHECK(regime_of(6) == QRegime::six);
  CHECK(regime_of(7) == QRegime::high);
  CHECK_THROWS(km_coefficient(0));
  // The regime reciprocal bounds every per-q reciprocal from below.
  for (std::int64_t q = 7; q < 500; ++q) CHECK(km_reciprocal(q) > regime_reciprocal(QRegime::high));
}

TEST_CASE("r_sum bounds per regime") {
  CHECK(rsum_bound(QRegime::low, 66) == Rational(27, 8));
  CHECK(rsum_bound(QRegime::six, 66) == Rational(23, 6));
  CHECK(rsum_bound(QRegime::high, 66) == Rational(15, 2));
}

TEST_CASE("R_X multisets") {
  CHECK(enumerate_rx_multisets(Rational(27, 8)) == std::vector<Multiset>{{2}, {3}, {2, 2}});
  CHECK(enumerate_rx_multisets(Rational(23, 6)) == std::vector<Multiset>{{2}, {3}, {4}, {2, 2}});
  const std::vector<Multiset> high{{2},       {3},       {4},       {5},       {6},         {7},      {2, 2},
                                   {2, 3},    {2, 4},    {2, 5},    {2, 6},    {3, 3},      {3, 4},   {3, 5},
                                   {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 3, 3}, {2, 2, 2, 2}, {2, 2, 2, 3}};
  CHECK(enumerate_rx_multisets(Rational(15, 2)) == high);
  CHECK(enumerate_rx_multisets(Rational(3, 2)).empty());
}

TEST_CASE("R_X multisets against exhaustive search") {
  for (const Rational bound : {Rational(27, 8), Rational(23, 6), Rational(15, 2), Rational(12), Rational(41, 3)}) {
    std::vector<Multiset> brute;
    Multiset cur;
    std::function<void(std::int64_t, Rational)> rec = [&](std::int64_t min_r, Rational used) {
      if (!cur.empty()) brute.push_back(cur);
      for (std::int64_t r = min_r; r < 40; ++r) {
        Rational next = used + Rational(r) - Rational(1, r);
        if (next >= bound) continue;
        cur.push_back(r);
        rec(r, next);
        cur.pop_back();
      }
    };
    rec(2, Rational(0));
    std::sort(brute.begin(), brute.end(), [](const Multiset& a, const Multiset& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    CHECK(enumerate_rx_multisets(bound) == brute);
  }
}

TEST_CASE("baskets for an R_X") {
  CHECK(enumerate_baskets(Multiset{5}) == std::vector<Basket>{Basket{{5, 1}}, Basket{{5, 2}}});
  CHECK(enumerate_baskets(Multiset{2}) == std::vector<Basket>{Basket{{2, 1}}});
  CHECK(enumerate_baskets(Multiset{7}) == std::vector<Basket>{Basket{{7, 1}}, Basket{{7, 2}}, Basket{{7, 3}}});
  // {5,5} has (1,1), (1,2), (2,2): symmetric choices collapse.
  CHECK(enumerate_baskets(Multiset{5, 5}).size() == 3);
}

TEST_CASE("low regime table") {
  auto t = build_case_table(QRegime::low);
  auto rows = t.rows();
  REQUIRE(rows.size() == 5);
  const std::vector<std::tuple<Multiset, std::int64_t, Rational, std::int64_t, Rational>> expected{
      {{2}, 2, 45, 133, Rational(55, 16)}, {{2}, 2, 45, 137, Rational(35, 16)}, {{2}, 2, 45, 141, Rational(15, 16)},
      {{3}, 3, 64, 200, Rational(3, 2)},   {{2, 2}, 2, 42, 134, Rational(1, 8)}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].rx() == std::get<0>(expected[i]));
    CHECK(rows[i].r_x == std::get<1>(expected[i]));
    CHECK(rows[i].rx_c2c1 == std::get<2>(expected[i]));
    CHECK(rows[i].rx_deg == std::get<3>(expected[i]));
    CHECK(rows[i].slack == std::get<4>(expected[i]));
  }
  CHECK(rows[4].key() == "RX={2,2};deg=134");
}

TEST_CASE("six and high regime tables") {
  auto six = build_case_table(QRegime::six);
  REQUIRE(six.groups.size() == 4);
  CHECK(six.groups[2].rx == Multiset{4});
  CHECK(six.groups[2].none());
  CHECK(six.rows().size() == 6);

  auto high = build_case_table(QRegime::high);
  REQUIRE(high.groups.size() == 20);
  auto group = [&](const Multiset& rx) {
    return *std::find_if(high.groups.begin(), high.groups.end(), [&](const SieveGroup& g) { return g.rx == rx; });
  };
  std::vector<std::int64_t> degs;
  for (const auto& r : group({2, 5}).rows) degs.push_back(r.rx_deg);
  CHECK(degs == std::vector<std::int64_t>{673, 677, 693, 697});
  // 713 and 717 fall in the window but fail the 4 c2c1 cut.
  bool saw713 = false;
  for (const auto& rej : group({2, 5}).rejected) saw713 = saw713 || rej.rx_deg == 713;
  CHECK(saw713);
  CHECK(group({2, 6}).none());
  CHECK(group({3, 5}).none());
  CHECK(group({7}).max_slack() == Rational(3));
  for (const auto& r : high.rows()) {
    CHECK(r.slack > Rational(0));
    CHECK(r.degree() < Rational(4) * r.c2c1());
  }
}

TEST_CASE("narrower window drops the top degree") {
  auto t = build_case_table(QRegime::low, Window{66, 70});
  CHECK(t.rows().size() == 4);
  for (const auto& r : t.rows()) CHECK(r.rx_deg != 141);
}
