// SPDX-License-Identifier: Apache-2.0
#pragma once

// Irreducible numbers, factor-driven multiplication, Fermat checks and the
// base-2 congruence test behind the "Chinese hypothesis".
//
// An irreducible number is n > 1 that is not a product of two numbers each
// smaller than n. If n is composite with a prime factor p then n = p * (n/p)
// with both factors below n, and conversely; so irreducible means prime and
// trial division decides it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ancientnt/natural.hpp"

namespace ancientnt {

/// Work bound for trial division: candidate divisors above `max_divisor` are
/// never tried. A number whose remaining cofactor is not certified prime by
/// the divisors tried raises FactorizationTooHard.
struct TrialDivisionLimit {
  std::uint64_t max_divisor = std::uint64_t{1} << 20;
};

class FactorizationTooHard : public std::domain_error {
 public:
  explicit FactorizationTooHard(const Natural& n)
      : std::domain_error("factorization too hard: " + n.to_string() + " has no factor within the trial-division bound") {}
};

using FactorList = std::vector<Natural>;

namespace detail {

// Smallest prime factor of n (n >= 2), or nullopt when n is prime. Divisors
// are tried up to min(sqrt(n), limit); running out before sqrt(n) throws.
inline std::optional<std::uint32_t> smallest_factor(const Natural& n, const TrialDivisionLimit& limit) {
  if (n.is_even()) return n == Natural{2} ? std::nullopt : std::optional<std::uint32_t>{2};
  const std::uint64_t cap = std::min<std::uint64_t>(limit.max_divisor, 0xFFFFFFFFULL);
  for (std::uint64_t d = 3; d <= cap; d += 2) {
    if (Natural{d * d} > n) return std::nullopt;
    if (n.mod_small(static_cast<std::uint32_t>(d)) == 0) return static_cast<std::uint32_t>(d);
  }
  const std::uint64_t next = (cap | 1U) + 2;
  if (Natural{next} * Natural{next} > n) return std::nullopt;
  throw FactorizationTooHard(n);
}

}  // namespace detail

inline bool is_irreducible(const Natural& n, const TrialDivisionLimit& limit = {}) {
  if (n <= Natural{1}) return false;
  return !detail::smallest_factor(n, limit).has_value();
}

inline std::vector<Natural> irreducible_in_range(const Natural& lo, const Natural& hi,
                                                 const TrialDivisionLimit& limit = {}) {
  if (lo > hi) throw std::domain_error("empty range: lo > hi");
  std::vector<Natural> out;
  for (Natural n = lo; n <= hi; n += Natural{1}) {
    if (is_irreducible(n, limit)) out.push_back(n);
  }
  return out;
}

/// Prime factors with multiplicity, ascending. factor(1) is empty.
inline FactorList factor(const Natural& n, const TrialDivisionLimit& limit = {}) {
  if (n.is_zero()) throw std::domain_error("zero has no factorization");
  FactorList out;
  Natural rest = n;
  while (rest > Natural{1}) {
    const auto p = detail::smallest_factor(rest, limit);
    if (!p) {
      out.push_back(rest);
      break;
    }
    // Divide out every copy of p before moving on; smaller primes are gone.
    while (rest.mod_small(*p) == 0) {
      rest.div_small_in_place(*p);
      out.emplace_back(*p);
    }
  }
  return out;
}

/// One multiplication of the running product by a factor.
struct MultiplyStep {
  Natural multiplicand;
  Natural factor;
  Natural product;

  friend bool operator==(const MultiplyStep&, const MultiplyStep&) = default;
};

struct HuiYangProduct {
  Natural product;
  Natural factored;  // the operand that was broken into factors
  Natural other;     // the operand that was multiplied step by step
  std::vector<MultiplyStep> steps;
};

/// Multiplies by factoring one operand and applying its factors in ascending
/// order. The smaller operand is factored. With grouped = true equal primes
/// are applied as one prime power (23121 = 9 x 7 x 367).
inline HuiYangProduct hui_yang_multiply(const Natural& a, const Natural& b, bool grouped = false,
                                        const TrialDivisionLimit& limit = {}) {
  HuiYangProduct out;
  const bool factor_a = a < b;
  out.factored = factor_a ? a : b;
  out.other = factor_a ? b : a;
  if (a.is_zero() || b.is_zero()) return out;

  const FactorList primes = factor(out.factored, limit);
  std::vector<Natural> multipliers;
  for (std::size_t i = 0; i < primes.size();) {
    if (!grouped) {
      multipliers.push_back(primes[i++]);
      continue;
    }
    Natural power = primes[i];
    std::size_t j = i + 1;
    while (j < primes.size() && primes[j] == primes[i]) power = power * primes[j++];
    multipliers.push_back(std::move(power));
    i = j;
  }

  Natural running = out.other;
  for (auto& m : multipliers) {
    Natural next = running * m;
    out.steps.push_back({running, m, next});
    running = std::move(next);
  }
  out.product = std::move(running);
  return out;
}

/// x^(p-1) == 1 (mod p).
inline bool fermat_little_check(const Natural& p, const Natural& x) {
  if (p < Natural{2}) throw std::domain_error("modulus must be at least 2");
  if ((x % p).is_zero()) throw std::domain_error("base must not be divisible by the modulus");
  return pow_mod(x, p - Natural{1}, p) == Natural{1};
}

enum class HypothesisClass { PrimeConsistent, CompositeConsistent, Pseudoprime };

inline std::string_view hypothesis_class_name(HypothesisClass c) {
  switch (c) {
    case HypothesisClass::PrimeConsistent: return "prime-consistent";
    case HypothesisClass::CompositeConsistent: return "composite-consistent";
    case HypothesisClass::Pseudoprime: return "pseudoprime";
  }
  return "unknown";
}

struct HypothesisVerdict {
  Natural n;
  bool congruence_holds = false;  // 2^(n-1) == 1 (mod n)
  bool is_prime = false;
  HypothesisClass classification = HypothesisClass::CompositeConsistent;
};

/// Pseudoprime marks a counterexample: the congruence holds but n is composite.
inline HypothesisVerdict chinese_hypothesis_classify(const Natural& n, const TrialDivisionLimit& limit = {}) {
  if (n < Natural{2}) throw std::domain_error("hypothesis test requires n >= 2");
  HypothesisVerdict v;
  v.n = n;
  v.congruence_holds = pow_mod(Natural{2}, n - Natural{1}, n) == Natural{1};
  v.is_prime = is_irreducible(n, limit);
  if (v.congruence_holds && !v.is_prime) {
    v.classification = HypothesisClass::Pseudoprime;
  } else {
    v.classification = v.is_prime ? HypothesisClass::PrimeConsistent : HypothesisClass::CompositeConsistent;
  }
  return v;
}

/// All composite n <= limit with 2^(n-1) == 1 (mod n), ascending.
inline std::vector<Natural> find_base2_pseudoprimes(const Natural& limit, const TrialDivisionLimit& bound = {}) {
  if (limit < Natural{2}) throw std::domain_error("limit must be at least 2");
  std::vector<Natural> out;
  // Even n > 2 never satisfy the congruence: 2^(n-1) mod n is even.
  for (Natural n{3}; n <= limit; n += Natural{2}) {
    if (pow_mod(Natural{2}, n - Natural{1}, n) == Natural{1} && !is_irreducible(n, bound)) out.push_back(n);
  }
  return out;
}

}  // namespace ancientnt
