#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  std::int64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::int64_t n);

/// "2^3x5^2"-style rendering; "1" for the empty factorization.
std::string format_factorization(const Factorization& factors);

std::int64_t lcm_list(std::span<const std::int64_t> xs);

/// All positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// All d >= 1 with d*d dividing n, ascending.
std::vector<std::int64_t> square_divisors(std::int64_t n);

bool is_perfect_square(std::int64_t n);

/// True iff x = y^2 for some rational y. Throws std::domain_error on negative input.
bool is_rational_square(const Rational& x);

}  // namespace fano
