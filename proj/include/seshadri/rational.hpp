#ifndef SESHADRI_RATIONAL_HPP
#define SESHADRI_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace seshadri {

// Exact rational arithmetic on 64-bit numerator/denominator. Every quantity
// handled by this library is desk-scale; intermediates go through __int128
// and any reduced result that still does not fit 64 bits throws.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return make128(i128(x.num_) * y.den_ + i128(y.num_) * x.den_,
                   i128(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return make128(i128(x.num_) * y.den_ - i128(y.num_) * x.den_,
                   i128(x.den_) * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return make128(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make128(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    // denominators are positive, so cross multiplication preserves order
    return i128(x.num_) * y.den_ <=> i128(y.num_) * x.den_;
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double approx() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  using i128 = __int128;

  static Rational make(std::int64_t num, std::int64_t den) {
    return make128(num, den);
  }

  static Rational make128(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 kMax = INT64_MAX;
    if (num > kMax || num < -kMax || den > kMax)
      throw std::overflow_error("Rational: value out of 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Floor of the integer square root; n must be nonnegative.
inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  if (n < 2) return n;
  auto sq = [](std::int64_t x) { return static_cast<__int128>(x) * x; };
  auto x = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (sq(x + 1) <= n) ++x;
  while (sq(x) > n) --x;
  return x;
}

inline bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  std::int64_t r = isqrt(n);
  return r * r == n;
}

}  // namespace seshadri

#endif  // SESHADRI_RATIONAL_HPP
