#include "leafpow/rational.hpp"

#include <gmpxx.h>

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "leafpow/errors.hpp"

namespace leafpow {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

constexpr i128 kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

u128 magnitude(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

void set_mpz(mpz_t out, i128 v) {
  const u128 u = magnitude(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(u),
                                  static_cast<std::uint64_t>(u >> 64)};
  mpz_import(out, 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (v < 0) mpz_neg(out, out);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v);
}

}  // namespace

namespace detail {

struct BigRational {
  mpq_class value;

  // n/d must be in lowest terms with d > 0.
  static Rational from_reduced(i128 n, i128 d) {
    Rational r;
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    mpq_class q;
    set_mpz(q.get_num_mpz_t(), n);
    set_mpz(q.get_den_mpz_t(), d);
    return from_mpq(std::move(q));
  }

  // q must be canonical.
  static Rational from_mpq(mpq_class q) {
    Rational r;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
      const long nn = n.get_si();
      const long dd = d.get_si();
      if (nn != std::numeric_limits<long>::min()) {
        r.num_ = nn;
        r.den_ = dd;
        return r;
      }
    }
    auto big = std::make_shared<BigRational>();
    big->value = std::move(q);
    r.big_ = std::move(big);
    return r;
  }

  static mpq_class to_mpq(const Rational& r) {
    if (r.big_) return r.big_->value;
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), r.num_);
    mpz_set_si(q.get_den_mpz_t(), r.den_);
    return q;
  }

  static std::int64_t num(const Rational& r) { return r.num_; }
  static std::int64_t den(const Rational& r) { return r.den_; }
};

}  // namespace detail

using detail::BigRational;

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    *this = BigRational::from_reduced(value, 1);
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  // |n|, |d| <= 2^63 so the reduction below stays in range.
  u128 a = magnitude(n);
  u128 b = magnitude(d);
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  const i128 g = static_cast<i128>(a == 0 ? 1 : a);
  *this = BigRational::from_reduced(n / g, d / g);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> FormatError {
    return FormatError("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  mpq_class q;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw fail();
    q = mpq_class(n, d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (!(whole.empty() || all_digits(whole)) || !all_digits(frac)) throw fail();
    mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    q = mpq_class(n, d);
  } else {
    if (!all_digits(body)) throw fail();
    q = mpq_class(mpz_class(std::string(body), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return BigRational::from_mpq(std::move(q));
}

std::string Rational::str() const {
  if (big_) return big_->value.get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const {
  if (big_) return sgn(big_->value);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->value.get_den() == 1;
  return den_ == 1;
}

Rational Rational::numerator() const {
  if (big_) return BigRational::from_mpq(mpq_class(big_->value.get_num()));
  return Rational(num_);
}

Rational Rational::denominator() const {
  if (big_) return BigRational::from_mpq(mpq_class(big_->value.get_den()));
  return Rational(den_);
}

Rational Rational::floor() const {
  if (big_) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), big_->value.get_num_mpz_t(), big_->value.get_den_mpz_t());
    return BigRational::from_mpq(mpq_class(f));
  }
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return Rational(q);
}

Rational Rational::ceil() const {
  if (big_) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), big_->value.get_num_mpz_t(), big_->value.get_den_mpz_t());
    return BigRational::from_mpq(mpq_class(c));
  }
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return Rational(q);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::optional<std::int64_t> Rational::to_int64() const {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

Rational Rational::operator-() const {
  if (big_) return BigRational::from_mpq(-big_->value);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    return BigRational::from_mpq(BigRational::to_mpq(a) + BigRational::to_mpq(b));
  }
  if (a.den_ == 1 && b.den_ == 1) return BigRational::from_reduced(i128(a.num_) + b.num_, 1);
  const std::int64_t g = static_cast<std::int64_t>(gcd_u64(a.den_, b.den_));
  if (g == 1) {
    return BigRational::from_reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                                     i128(a.den_) * b.den_);
  }
  const std::int64_t ad = a.den_ / g;
  const std::int64_t bd = b.den_ / g;
  const i128 t = i128(a.num_) * bd + i128(b.num_) * ad;
  if (t == 0) return Rational();
  const std::int64_t g2 =
      static_cast<std::int64_t>(gcd_u64(static_cast<std::uint64_t>(magnitude(t % g)), g));
  return BigRational::from_reduced(t / g2, i128(ad) * (b.den_ / g2));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    return BigRational::from_mpq(BigRational::to_mpq(a) - BigRational::to_mpq(b));
  }
  Rational nb;
  nb.num_ = -b.num_;
  nb.den_ = b.den_;
  return a + nb;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    return BigRational::from_mpq(BigRational::to_mpq(a) * BigRational::to_mpq(b));
  }
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  const std::int64_t g1 = static_cast<std::int64_t>(gcd_u64(abs_u64(a.num_), b.den_));
  const std::int64_t g2 = static_cast<std::int64_t>(gcd_u64(abs_u64(b.num_), a.den_));
  return BigRational::from_reduced(i128(a.num_ / g1) * (b.num_ / g2),
                                   i128(a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.big_ || b.big_) {
    return BigRational::from_mpq(BigRational::to_mpq(a) / BigRational::to_mpq(b));
  }
  Rational inv;
  inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
  inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
  return a * inv;
}

Rational& Rational::operator+=(const Rational& other) { return *this = *this + other; }
Rational& Rational::operator-=(const Rational& other) { return *this = *this - other; }
Rational& Rational::operator*=(const Rational& other) { return *this = *this * other; }
Rational& Rational::operator/=(const Rational& other) { return *this = *this / other; }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    // A demoted value is never equal to a big one.
    if (!a.big_ || !b.big_) return false;
    return a.big_->value == b.big_->value;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const int c = cmp(BigRational::to_mpq(a), BigRational::to_mpq(b));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational integer_gcd(const Rational& a, const Rational& b) {
  if (!a.is_integer() || !b.is_integer()) throw std::domain_error("gcd of non-integers");
  if (!a.big_ && !b.big_) {
    return Rational(static_cast<std::int64_t>(gcd_u64(abs_u64(a.num_), abs_u64(b.num_))));
  }
  mpz_class g;
  const mpq_class qa = BigRational::to_mpq(a);
  const mpq_class qb = BigRational::to_mpq(b);
  mpz_gcd(g.get_mpz_t(), qa.get_num_mpz_t(), qb.get_num_mpz_t());
  return BigRational::from_mpq(mpq_class(g));
}

Rational integer_lcm(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  return (a / integer_gcd(a, b) * b).abs();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

}  // namespace leafpow
