#include "fano/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace fano {

namespace {

using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic left the 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational out;
  out.num_ = narrow(num);
  out.den_ = narrow(den);
  return out;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::reciprocal() const { return from_wide(den_, num_); }

Rational& Rational::operator+=(const Rational& rhs) {
  *this = from_wide(Wide(num_) * rhs.den_ + Wide(rhs.num_) * den_, Wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = from_wide(Wide(num_) * rhs.den_ - Wide(rhs.num_) * den_, Wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(Wide(num_) * rhs.num_, Wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(Wide(num_) * rhs.den_, Wide(den_) * rhs.num_);
  return *this;
}

Rational Rational::operator-() const { return from_wide(-Wide(num_), den_); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  Wide l = Wide(lhs.num_) * rhs.den_;
  Wide r = Wide(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const {
  // A reduced fraction terminates iff its denominator has no prime other than 2, 5.
  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  const bool terminates = (d == 1);
  const int places = terminates ? std::max(twos, fives) : digits;

  Wide scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Wide scaled = wide_abs(Wide(num_)) * scale;
  Wide q = scaled / den_;
  Wide rem = scaled % den_;
  if (!terminates && 2 * rem >= den_) ++q;

  Wide int_part = q / scale;
  Wide frac_part = q % scale;
  std::string out = (num_ < 0 && q != 0) ? "-" : "";
  out += std::to_string(static_cast<std::int64_t>(int_part));
  if (places > 0) {
    std::string frac = std::to_string(static_cast<std::int64_t>(frac_part));
    out += "." + std::string(places - frac.size(), '0') + frac;
  }
  return terminates ? out : "≈" + out;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace fano
