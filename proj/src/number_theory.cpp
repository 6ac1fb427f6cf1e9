#include "fano/number_theory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fano {

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(v, prime, &v)) throw std::overflow_error("prime power overflow");
  }
  return v;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::string format_factorization(const Factorization& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "x";
    out += std::to_string(f.prime);
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::int64_t lcm_list(std::span<const std::int64_t> xs) {
  if (xs.empty()) throw std::invalid_argument("lcm_list: empty list");
  std::int64_t acc = 1;
  for (auto x : xs) {
    if (x < 1) throw std::invalid_argument("lcm_list: entries must be positive");
    std::int64_t step = x / std::gcd(acc, x);
    if (__builtin_mul_overflow(acc, step, &acc)) throw std::overflow_error("lcm overflow");
  }
  return acc;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> low;
  std::vector<std::int64_t> high;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<std::int64_t> square_divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("square_divisors: n must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % (d * d) == 0) out.push_back(d);
  }
  return out;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (root > 0 && root > n / root) --root;
  while ((root + 1) <= n / (root + 1)) ++root;
  return root * root == n;
}

bool is_rational_square(const Rational& x) {
  if (x.is_negative()) throw std::domain_error("is_rational_square: negative input");
  return is_perfect_square(x.num()) && is_perfect_square(x.den());
}

}  // namespace fano
