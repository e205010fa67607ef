#ifndef SESHADRI_BOUND_HPP
#define SESHADRI_BOUND_HPP

#include <cmath>
#include <compare>
#include <optional>
#include <string>

#include "seshadri/rational.hpp"

namespace seshadri {

// Exact nonnegative bound of the form sqrt(radicand) with rational radicand.
// Rationals q are stored as radicand q^2. Since every bound in play is
// nonnegative, comparing radicands compares values, and all comparisons stay
// in rational arithmetic.
class BoundValue {
 public:
  BoundValue() = default;  // zero

  static BoundValue from_rational(const Rational& q) {
    if (q.is_negative())
      throw std::domain_error("BoundValue: bounds are nonnegative, got " + q.to_string());
    return BoundValue(q * q);
  }

  static BoundValue from_radicand(const Rational& radicand) {
    if (radicand.is_negative())
      throw std::domain_error("BoundValue: radicand must be nonnegative, got " +
                              radicand.to_string());
    return BoundValue(radicand);
  }

  const Rational& radicand() const { return radicand_; }

  bool is_rational() const {
    return is_perfect_square(radicand_.num()) && is_perfect_square(radicand_.den());
  }

  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return Rational(isqrt(radicand_.num()), isqrt(radicand_.den()));
  }

  friend bool operator==(const BoundValue& x, const BoundValue& y) {
    return x.radicand_ == y.radicand_;
  }
  friend std::strong_ordering operator<=>(const BoundValue& x, const BoundValue& y) {
    return x.radicand_ <=> y.radicand_;
  }

  std::string to_string() const {
    if (auto q = as_rational()) return q->to_string();
    return "sqrt(" + radicand_.to_string() + ")";
  }

  // Display only; never used in a comparison.
  double approx() const { return std::sqrt(radicand_.approx()); }

 private:
  explicit BoundValue(Rational radicand) : radicand_(std::move(radicand)) {}

  Rational radicand_;  // >= 0
};

}  // namespace seshadri

#endif  // SESHADRI_BOUND_HPP
