#include "fano/wps.hpp"

#include <algorithm>
#include <numeric>

namespace fano {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t r) { return ((a % r) + r) % r; }

}  // namespace

WeightedP3::WeightedP3(std::array<std::int64_t, 4> weights) : weights_(weights) {
  for (auto a : weights_) {
    if (a < 1) throw IllFormedWeights("weights must be positive");
  }
  for (int skip = 3; skip >= 0; --skip) {
    std::array<std::int64_t, 3> triple{};
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != skip) triple[k++] = weights_[i];
    }
    if (std::gcd(std::gcd(triple[0], triple[1]), triple[2]) != 1) {
      throw IllFormedWeights("not well-formed: gcd(" + std::to_string(triple[0]) + "," +
                             std::to_string(triple[1]) + "," + std::to_string(triple[2]) + ") != 1");
    }
  }
}

std::string WeightedP3::str() const {
  return "P(" + std::to_string(weights_[0]) + "," + std::to_string(weights_[1]) + "," +
         std::to_string(weights_[2]) + "," + std::to_string(weights_[3]) + ")";
}

QuotientPoint::QuotientPoint(std::int64_t r_, std::array<std::int64_t, 3> w) : r(r_) {
  if (r < 1) throw std::invalid_argument("quotient order must be positive");
  for (int i = 0; i < 3; ++i) weights[i] = mod(w[i], r);
}

bool QuotientPoint::isolated() const {
  return std::all_of(weights.begin(), weights.end(), [&](std::int64_t w) { return std::gcd(w, r) == 1; });
}

std::string QuotientPoint::str() const {
  return "1/" + std::to_string(r) + "(" + std::to_string(weights[0]) + "," + std::to_string(weights[1]) +
         "," + std::to_string(weights[2]) + ")";
}

std::string_view to_string(ReidTai kind) {
  switch (kind) {
    case ReidTai::terminal: return "TERMINAL";
    case ReidTai::canonical_not_terminal: return "CANONICAL_NOT_TERMINAL";
    case ReidTai::not_canonical: return "NOT_CANONICAL";
  }
  return "?";
}

ReidTai reid_tai(const QuotientPoint& p) {
  if (p.r < 2) throw std::invalid_argument("reid_tai needs r >= 2");
  if (!p.isolated()) throw NotSupported(p.str() + " is not an isolated quotient");
  // r * sum frac(k w_i / r) = sum (k w_i mod r); compare against r.
  std::int64_t min_sum = -1;
  for (std::int64_t k = 1; k < p.r; ++k) {
    std::int64_t s = 0;
    for (auto w : p.weights) s += (k * w) % p.r;
    if (min_sum < 0 || s < min_sum) min_sum = s;
  }
  if (min_sum > p.r) return ReidTai::terminal;
  if (min_sum == p.r) return ReidTai::canonical_not_terminal;
  return ReidTai::not_canonical;
}

std::string Stratum::str() const {
  std::string where = dimension == 0 ? "point P" : "curve P";
  where += std::to_string(coords.front());
  for (std::size_t i = 1; i < coords.size(); ++i) where += std::to_string(coords[i]);
  return where + " " + type.str();
}

Rational anticanonical_degree(const WeightedP3& w) {
  const auto& a = w.weights();
  Rational s(weil_index(w));
  return s * s * s / Rational(a[0] * a[1] * a[2] * a[3]);
}

std::int64_t weil_index(const WeightedP3& w) {
  const auto& a = w.weights();
  return a[0] + a[1] + a[2] + a[3];
}

std::vector<Stratum> singular_strata(const WeightedP3& w) {
  const auto& a = w.weights();
  std::vector<Stratum> out;
  for (int i = 0; i < 4; ++i) {
    if (a[i] < 2) continue;
    std::array<std::int64_t, 3> local{};
    int k = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != i) local[k++] = a[j];
    }
    out.push_back({0, {i}, QuotientPoint(a[i], local)});
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::int64_t g = std::gcd(a[i], a[j]);
      if (g < 2) continue;
      // Transversal type along the edge; the zero weight is the curve direction.
      std::array<std::int64_t, 3> local{0, 0, 0};
      int k = 1;
      for (int m = 0; m < 4; ++m) {
        if (m != i && m != j) local[k++] = a[m];
      }
      out.push_back({1, {i, j}, QuotientPoint(g, local)});
    }
  }
  return out;
}

std::int64_t h0_monomials(const WeightedP3& w, std::int64_t d) {
  if (d < 0) return 0;
  // Coin-change count over the four weights.
  std::vector<std::int64_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (auto a : w.weights()) {
    for (std::int64_t n = a; n <= d; ++n) ways[n] += ways[n - a];
  }
  return ways[d];
}

bool basket_consistency(const WeightedP3& w, const Basket& candidate) {
  auto predicted = h0_from_degree(anticanonical_degree(w), candidate);
  return predicted && *predicted == h0_monomials(w, weil_index(w));
}

}  // namespace fano
