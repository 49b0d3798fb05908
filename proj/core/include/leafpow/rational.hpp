#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace leafpow {

namespace detail {
struct BigRational;
}

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator both fit in a signed 64-bit word are
// stored inline and handled with 128-bit intermediates; anything larger is
// promoted to a GMP rational and demoted again as soon as it fits.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p/q", "-7", "+3", "2.75" and "-0.125". Throws FormatError.
  static Rational parse(std::string_view text);

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  bool is_small() const { return big_ == nullptr; }

  Rational numerator() const;
  Rational denominator() const;
  Rational floor() const;
  Rational ceil() const;
  Rational abs() const;

  // Integer value if this is an integer that fits in 64 bits.
  std::optional<std::int64_t> to_int64() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

  // Integer helpers; both arguments must be integers.
  friend Rational integer_gcd(const Rational& a, const Rational& b);
  friend Rational integer_lcm(const Rational& a, const Rational& b);
  friend Rational pow(const Rational& base, unsigned exponent);

 private:
  friend struct detail::BigRational;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const detail::BigRational> big_;
};

}  // namespace leafpow
