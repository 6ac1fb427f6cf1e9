#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fano/basket.hpp"
#include "fano/rational.hpp"

namespace fano {

class IllFormedWeights : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for cyclic quotients that are not isolated (a weight shares a
/// factor with r); those strata are curves, not points.
class NotSupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// P(a0,a1,a2,a3), well-formed: every triple of weights is coprime.
class WeightedP3 {
 public:
  explicit WeightedP3(std::array<std::int64_t, 4> weights);

  const std::array<std::int64_t, 4>& weights() const { return weights_; }
  std::string str() const;  // "P(1,1,3,5)"

 private:
  std::array<std::int64_t, 4> weights_;
};

/// The cyclic quotient 1/r(w1,w2,w3), weights reduced to 0..r-1.
struct QuotientPoint {
  std::int64_t r = 1;
  std::array<std::int64_t, 3> weights{};

  QuotientPoint() = default;
  QuotientPoint(std::int64_t r, std::array<std::int64_t, 3> w);

  bool isolated() const;
  std::string str() const;  // "1/3(1,1,2)"

  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
};

enum class ReidTai { terminal, canonical_not_terminal, not_canonical };

std::string_view to_string(ReidTai kind);

/// Sums frac(k w_i / r) over i for k = 1..r-1: terminal if every sum > 1,
/// canonical if every sum >= 1. Throws NotSupported for non-isolated points.
ReidTai reid_tai(const QuotientPoint& p);

/// A singular stratum: a coordinate point (dimension 0) or a coordinate edge
/// with a common factor (dimension 1). `coords` lists the non-vanishing coordinates.
struct Stratum {
  int dimension = 0;
  std::vector<int> coords;
  QuotientPoint type;

  std::string str() const;
};

Rational anticanonical_degree(const WeightedP3& w);
std::int64_t weil_index(const WeightedP3& w);
std::vector<Stratum> singular_strata(const WeightedP3& w);

/// Number of monomials of weighted degree d.
std::int64_t h0_monomials(const WeightedP3& w, std::int64_t d);

/// True iff the section count of -K matches the one the basket predicts.
bool basket_consistency(const WeightedP3& w, const Basket& candidate);

}  // namespace fano
