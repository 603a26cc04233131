// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief Arbitrary-precision non-negative integers.
 *
 *  Natural stores little-endian 32-bit limbs with no leading zero limbs, so
 *  zero is the empty vector and equal values always compare equal limb by
 *  limb. Every arithmetic result is renormalized before it is returned.
 */

#include <algorithm>
#include <bit>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ancientnt {

class Natural {
 public:
  using limb_type = std::uint32_t;
  using wide_type = std::uint64_t;
  static constexpr unsigned limb_bits = 32;

  Natural() noexcept = default;

  template <std::integral T>
  Natural(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (value < 0) throw std::domain_error("Natural cannot hold a negative value");
    }
    auto v = static_cast<std::uint64_t>(value);
    while (v != 0) {
      limbs_.push_back(static_cast<limb_type>(v));
      v >>= limb_bits;
    }
  }

  /// Parses a non-empty string of decimal digits. Signs and whitespace are rejected.
  static Natural parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
      }
    }
    Natural out;
    std::size_t head = text.size() % 9;
    if (head == 0) head = 9;
    std::size_t pos = 0;
    std::size_t take = head;
    while (pos < text.size()) {
      limb_type chunk = 0;
      limb_type scale = 1;
      for (std::size_t i = 0; i < take; ++i) {
        chunk = chunk * 10 + static_cast<limb_type>(text[pos + i] - '0');
        scale *= 10;
      }
      out.mul_add_small(scale, chunk);
      pos += take;
      take = 9;
    }
    return out;
  }

  static Natural from_limbs(std::vector<limb_type> limbs) {
    Natural out;
    out.limbs_ = std::move(limbs);
    out.trim();
    return out;
  }

  /// 2^exponent.
  static Natural power_of_two(std::size_t exponent) {
    Natural out;
    out.limbs_.assign(exponent / limb_bits + 1, 0);
    out.limbs_.back() = limb_type{1} << (exponent % limb_bits);
    return out;
  }

  /// Uniform value with exactly `bits` significant bits (top bit set).
  template <class Engine>
  static Natural random_with_bits(Engine& engine, std::size_t bits) {
    if (bits == 0) return {};
    std::uniform_int_distribution<std::uint32_t> dist;
    std::vector<limb_type> limbs((bits + limb_bits - 1) / limb_bits);
    for (auto& limb : limbs) limb = dist(engine);
    const unsigned top = static_cast<unsigned>((bits - 1) % limb_bits);
    if (top + 1 < limb_bits) limbs.back() &= (limb_type{1} << (top + 1)) - 1;
    limbs.back() |= limb_type{1} << top;
    return from_limbs(std::move(limbs));
  }

  [[nodiscard]] std::span<const limb_type> limbs() const noexcept { return limbs_; }
  [[nodiscard]] bool is_zero() const noexcept { return limbs_.empty(); }
  [[nodiscard]] bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1U) != 0; }
  [[nodiscard]] bool is_even() const noexcept { return !is_odd(); }

  [[nodiscard]] std::size_t bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    return limbs_.size() * limb_bits - static_cast<std::size_t>(std::countl_zero(limbs_.back()));
  }

  /// Number of trailing zero bits; 0 for zero.
  [[nodiscard]] std::size_t trailing_zeros() const noexcept {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      if (limbs_[i] != 0) return i * limb_bits + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
    }
    return 0;
  }

  [[nodiscard]] bool test_bit(std::size_t index) const noexcept {
    const std::size_t limb = index / limb_bits;
    if (limb >= limbs_.size()) return false;
    return ((limbs_[limb] >> (index % limb_bits)) & 1U) != 0;
  }

  [[nodiscard]] bool fits_u64() const noexcept { return limbs_.size() <= 2; }

  [[nodiscard]] std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Natural does not fit in 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << limb_bits) | limbs_[i];
    return v;
  }

  [[nodiscard]] double to_double() const noexcept {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + static_cast<double>(limbs_[i]);
    return v;
  }

  [[nodiscard]] std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<limb_type> chunks;
    Natural rest = *this;
    while (!rest.is_zero()) chunks.push_back(rest.div_small_in_place(1000000000U));
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      out.append(9 - part.size(), '0');
      out += part;
    }
    return out;
  }

  friend bool operator==(const Natural&, const Natural&) noexcept = default;

  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    return compare_limbs(a.limbs_, b.limbs_);
  }

  Natural& operator+=(const Natural& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    wide_type carry = 0;
    std::size_t i = 0;
    for (; i < rhs.limbs_.size(); ++i) {
      const wide_type s = wide_type{limbs_[i]} + rhs.limbs_[i] + carry;
      limbs_[i] = static_cast<limb_type>(s);
      carry = s >> limb_bits;
    }
    for (; carry != 0 && i < limbs_.size(); ++i) {
      const wide_type s = wide_type{limbs_[i]} + carry;
      limbs_[i] = static_cast<limb_type>(s);
      carry = s >> limb_bits;
    }
    if (carry != 0) limbs_.push_back(static_cast<limb_type>(carry));
    return *this;
  }

  /// Throws std::domain_error when rhs > *this.
  Natural& operator-=(const Natural& rhs) {
    if (compare_limbs(limbs_, rhs.limbs_) < 0) throw std::domain_error("Natural subtraction underflow");
    sub_in_place(limbs_, rhs.limbs_);
    trim();
    return *this;
  }

  Natural& operator*=(const Natural& rhs) {
    *this = *this * rhs;
    return *this;
  }

  Natural& operator/=(const Natural& rhs) {
    *this = divmod(*this, rhs).first;
    return *this;
  }

  Natural& operator%=(const Natural& rhs) {
    *this = divmod(*this, rhs).second;
    return *this;
  }

  Natural& operator<<=(std::size_t shift) {
    if (limbs_.empty() || shift == 0) return *this;
    const std::size_t whole = shift / limb_bits;
    const unsigned part = static_cast<unsigned>(shift % limb_bits);
    if (part != 0) {
      limb_type carry = 0;
      for (auto& limb : limbs_) {
        const limb_type next = limb >> (limb_bits - part);
        limb = (limb << part) | carry;
        carry = next;
      }
      if (carry != 0) limbs_.push_back(carry);
    }
    limbs_.insert(limbs_.begin(), whole, 0);
    return *this;
  }

  Natural& operator>>=(std::size_t shift) {
    const std::size_t whole = shift / limb_bits;
    if (whole >= limbs_.size()) {
      limbs_.clear();
      return *this;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(whole));
    const unsigned part = static_cast<unsigned>(shift % limb_bits);
    if (part != 0) {
      for (std::size_t i = 0; i < limbs_.size(); ++i) {
        limb_type hi = i + 1 < limbs_.size() ? limbs_[i + 1] : 0;
        limbs_[i] = (limbs_[i] >> part) | (hi << (limb_bits - part));
      }
    }
    trim();
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator<<(Natural a, std::size_t s) { return a <<= s; }
  friend Natural operator>>(Natural a, std::size_t s) { return a >>= s; }
  friend Natural operator/(const Natural& a, const Natural& b) { return divmod(a, b).first; }
  friend Natural operator%(const Natural& a, const Natural& b) { return divmod(a, b).second; }

  friend Natural operator*(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<limb_type> out(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      wide_type carry = 0;
      const wide_type ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        const wide_type t = ai * b.limbs_[j] + out[i + j] + carry;
        out[i + j] = static_cast<limb_type>(t);
        carry = t >> limb_bits;
      }
      out[i + b.limbs_.size()] = static_cast<limb_type>(carry);
    }
    return from_limbs(std::move(out));
  }

  /// Quotient and remainder. Throws std::domain_error on a zero divisor.
  static std::pair<Natural, Natural> divmod(const Natural& u, const Natural& v) {
    if (v.is_zero()) throw std::domain_error("division by zero");
    if (compare_limbs(u.limbs_, v.limbs_) < 0) return {Natural{}, u};
    if (v.limbs_.size() == 1) {
      Natural q = u;
      const limb_type r = q.div_small_in_place(v.limbs_[0]);
      return {std::move(q), Natural{r}};
    }
    return long_divide(u, v);
  }

  /// Remainder modulo a single limb.
  [[nodiscard]] limb_type mod_small(limb_type divisor) const {
    if (divisor == 0) throw std::domain_error("division by zero");
    wide_type rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) rem = ((rem << limb_bits) | limbs_[i]) % divisor;
    return static_cast<limb_type>(rem);
  }

  /// Divides in place by a single limb and returns the remainder.
  limb_type div_small_in_place(limb_type divisor) {
    if (divisor == 0) throw std::domain_error("division by zero");
    wide_type rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      const wide_type cur = (rem << limb_bits) | limbs_[i];
      limbs_[i] = static_cast<limb_type>(cur / divisor);
      rem = cur % divisor;
    }
    trim();
    return static_cast<limb_type>(rem);
  }

 private:
  std::vector<limb_type> limbs_;

  void trim() noexcept {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  void mul_add_small(limb_type mul, limb_type add) {
    wide_type carry = add;
    for (auto& limb : limbs_) {
      const wide_type t = wide_type{limb} * mul + carry;
      limb = static_cast<limb_type>(t);
      carry = t >> limb_bits;
    }
    if (carry != 0) limbs_.push_back(static_cast<limb_type>(carry));
  }

  static std::strong_ordering compare_limbs(std::span<const limb_type> a, std::span<const limb_type> b) noexcept {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  // a -= b, requires a >= b.
  static void sub_in_place(std::vector<limb_type>& a, std::span<const limb_type> b) noexcept {
    wide_type borrow = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
      const wide_type d = wide_type{a[i]} - b[i] - borrow;
      a[i] = static_cast<limb_type>(d);
      borrow = (d >> limb_bits) & 1U;
    }
    for (; borrow != 0 && i < a.size(); ++i) {
      const wide_type d = wide_type{a[i]} - borrow;
      a[i] = static_cast<limb_type>(d);
      borrow = (d >> limb_bits) & 1U;
    }
  }

  // Knuth, TAOCP vol. 2, Algorithm D. Requires v to have at least two limbs and u >= v.
  static std::pair<Natural, Natural> long_divide(const Natural& u, const Natural& v) {
    constexpr wide_type base = wide_type{1} << limb_bits;
    const std::size_t n = v.limbs_.size();
    const std::size_t m = u.limbs_.size() - n;
    const unsigned s = static_cast<unsigned>(std::countl_zero(v.limbs_.back()));

    std::vector<limb_type> vn(n);
    std::vector<limb_type> un(u.limbs_.size() + 1);
    for (std::size_t i = n - 1; i > 0; --i) {
      vn[i] = (v.limbs_[i] << s) | (s != 0 ? v.limbs_[i - 1] >> (limb_bits - s) : 0);
    }
    vn[0] = v.limbs_[0] << s;
    un[u.limbs_.size()] = s != 0 ? u.limbs_.back() >> (limb_bits - s) : 0;
    for (std::size_t i = u.limbs_.size() - 1; i > 0; --i) {
      un[i] = (u.limbs_[i] << s) | (s != 0 ? u.limbs_[i - 1] >> (limb_bits - s) : 0);
    }
    un[0] = u.limbs_[0] << s;

    std::vector<limb_type> q(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
      const wide_type num = (wide_type{un[j + n]} << limb_bits) | un[j + n - 1];
      wide_type qhat = num / vn[n - 1];
      wide_type rhat = num % vn[n - 1];
      while (qhat >= base || qhat * vn[n - 2] > ((rhat << limb_bits) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }

      std::int64_t borrow = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const wide_type p = qhat * vn[i];
        const std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                               static_cast<std::int64_t>(p & 0xFFFFFFFFU);
        un[i + j] = static_cast<limb_type>(t);
        borrow = static_cast<std::int64_t>(p >> limb_bits) - (t >> limb_bits);
      }
      const std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow;
      un[j + n] = static_cast<limb_type>(t);

      q[j] = static_cast<limb_type>(qhat);
      if (t < 0) {
        --q[j];
        wide_type carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const wide_type sum = wide_type{un[i + j]} + vn[i] + carry;
          un[i + j] = static_cast<limb_type>(sum);
          carry = sum >> limb_bits;
        }
        un[j + n] = static_cast<limb_type>(un[j + n] + carry);
      }
    }

    std::vector<limb_type> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = (un[i] >> s) | (s != 0 ? static_cast<limb_type>(wide_type{un[i + 1]} << (limb_bits - s)) : 0);
    }
    return {from_limbs(std::move(q)), from_limbs(std::move(r))};
  }
};

/// base^exponent mod modulus by left-to-right square-and-multiply.
inline Natural pow_mod(const Natural& base, const Natural& exponent, const Natural& modulus) {
  if (modulus.is_zero()) throw std::domain_error("modulus must be positive");
  Natural result = Natural{1} % modulus;
  const Natural b = base % modulus;
  for (std::size_t i = exponent.bit_length(); i-- > 0;) {
    result = (result * result) % modulus;
    if (exponent.test_bit(i)) result = (result * b) % modulus;
  }
  return result;
}

inline std::string to_string(const Natural& n) { return n.to_string(); }

}  // namespace ancientnt
