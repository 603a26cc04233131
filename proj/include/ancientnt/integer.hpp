// SPDX-License-Identifier: Apache-2.0
#pragma once

// Signed integers and exact rationals on top of Natural. Only the operations
// the Bezout, CRT and nullspace code paths need are provided.

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ancientnt/natural.hpp"

namespace ancientnt {

class Integer {
 public:
  Integer() = default;
  Integer(Natural magnitude, bool negative = false)  // NOLINT(google-explicit-constructor)
      : magnitude_(std::move(magnitude)), negative_(negative && !magnitude_.is_zero()) {}

  template <std::integral T>
  Integer(T value)  // NOLINT(google-explicit-constructor)
      : Integer(make(value)) {}

  static Integer parse(std::string_view text) {
    if (!text.empty() && text.front() == '-') return {Natural::parse(text.substr(1)), true};
    return {Natural::parse(text), false};
  }

  [[nodiscard]] const Natural& magnitude() const noexcept { return magnitude_; }
  [[nodiscard]] bool is_negative() const noexcept { return negative_; }
  [[nodiscard]] bool is_zero() const noexcept { return magnitude_.is_zero(); }
  [[nodiscard]] int sign() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  [[nodiscard]] std::string to_string() const {
    return negative_ ? "-" + magnitude_.to_string() : magnitude_.to_string();
  }

  friend bool operator==(const Integer&, const Integer&) noexcept = default;

  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (a.negative_ != b.negative_) return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.negative_ ? b.magnitude_ <=> a.magnitude_ : a.magnitude_ <=> b.magnitude_;
  }

  friend Integer operator-(Integer a) {
    a.negative_ = !a.negative_ && !a.is_zero();
    return a;
  }

  friend Integer operator+(const Integer& a, const Integer& b) {
    if (a.negative_ == b.negative_) return {a.magnitude_ + b.magnitude_, a.negative_};
    if (a.magnitude_ >= b.magnitude_) return {a.magnitude_ - b.magnitude_, a.negative_};
    return {b.magnitude_ - a.magnitude_, b.negative_};
  }

  friend Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

  friend Integer operator*(const Integer& a, const Integer& b) {
    return {a.magnitude_ * b.magnitude_, a.negative_ != b.negative_};
  }

  /// Truncating division by a positive Natural.
  friend Integer operator/(const Integer& a, const Natural& b) { return {a.magnitude_ / b, a.negative_}; }

  Integer& operator+=(const Integer& rhs) { return *this = *this + rhs; }
  Integer& operator-=(const Integer& rhs) { return *this = *this - rhs; }
  Integer& operator*=(const Integer& rhs) { return *this = *this * rhs; }

 private:
  Natural magnitude_;
  bool negative_ = false;

  template <std::integral T>
  static Integer make(T value) {
    if constexpr (std::is_signed_v<T>) {
      if (value < 0) {
        // Negate in unsigned arithmetic so the most negative value is representable.
        const auto mag = static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(value);
        return {Natural{mag}, true};
      }
    }
    return {Natural{static_cast<std::uint64_t>(value)}, false};
  }
};

/// Least non-negative residue of a modulo m (m > 0).
inline Natural mod_floor(const Integer& a, const Natural& m) {
  Natural r = a.magnitude() % m;
  if (a.is_negative() && !r.is_zero()) r = m - r;
  return r;
}

/// Reduced fraction with positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() : den_(1) {}
  Rational(Integer num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(1) {}
  Rational(Integer num, Natural den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
  }

  [[nodiscard]] const Integer& numerator() const noexcept { return num_; }
  [[nodiscard]] const Natural& denominator() const noexcept { return den_; }
  [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

  friend bool operator==(const Rational&, const Rational&) noexcept = default;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * Integer{b.den_} + b.num_ * Integer{a.den_}, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * Integer{b.den_} - b.num_ * Integer{a.den_}, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return {a.num_ * Integer{b.den_, b.num_.is_negative()}, a.den_ * b.num_.magnitude()};
  }
  friend Rational operator-(const Rational& a) { return {-a.num_, a.den_}; }

  [[nodiscard]] std::string to_string() const {
    return den_ == Natural{1} ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
  }

 private:
  Integer num_;
  Natural den_;

  void normalize() {
    if (num_.is_zero()) {
      den_ = Natural{1};
      return;
    }
    Natural a = num_.magnitude();
    Natural b = den_;
    while (!b.is_zero()) {
      a = a % b;
      std::swap(a, b);
    }
    if (a != Natural{1}) {
      num_ = Integer{num_.magnitude() / a, num_.is_negative()};
      den_ = den_ / a;
    }
  }
};

}  // namespace ancientnt
