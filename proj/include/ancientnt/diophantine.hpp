// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief Fraction reduction, congruence systems and cyclic linear systems.
 *
 *  The cyclic system with coefficients c_1..c_k asks for positive integers
 *  f, u_1..u_k with
 *
 *      f = c_1 u_1 + u_2 = c_2 u_2 + u_3 = ... = c_k u_k + u_1.
 *
 *  It is solved as a homogeneous k x (k + 1) system over the rationals by
 *  exact Gaussian elimination. The nullspace generator is scaled to the
 *  primitive integer vector of its ray.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ancientnt/gcd.hpp"
#include "ancientnt/integer.hpp"
#include "ancientnt/natural.hpp"

namespace ancientnt {

struct Fraction {
  Natural numerator;
  Natural denominator{1};

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Divides both parts by their gcd. 0/d becomes 0/1.
inline Fraction reduce_fraction(const Fraction& fr) {
  if (fr.denominator.is_zero()) throw std::domain_error("denominator must be positive");
  if (fr.numerator.is_zero()) return {Natural{}, Natural{1}};
  const Natural g = euclid_gcd(fr.numerator, fr.denominator, TraceMode::CountsOnly).result;
  return {fr.numerator / g, fr.denominator / g};
}

struct Congruence {
  Natural residue;
  Natural modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

using CongruenceSystem = std::vector<Congruence>;

struct CrtSolution {
  Natural solution;  // least non-negative
  Natural modulus;   // lcm of the moduli

  friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

class InconsistentSystem : public std::domain_error {
 public:
  InconsistentSystem(std::size_t first, std::size_t second, const std::string& what)
      : std::domain_error(what), first_(first), second_(second) {}
  /// Zero-based indices of a pair of congruences that cannot hold together.
  [[nodiscard]] std::pair<std::size_t, std::size_t> offending_pair() const noexcept { return {first_, second_}; }

 private:
  std::size_t first_;
  std::size_t second_;
};

namespace detail {

inline bool pair_consistent(const Congruence& p, const Congruence& q) {
  const Natural g = gcd(p.modulus, q.modulus);
  return p.residue % g == q.residue % g;
}

}  // namespace detail

/// Pairwise merging that accepts non-coprime moduli. A system is solvable
/// iff every pair agrees modulo the gcd of its moduli; on failure the first
/// such disagreeing pair is reported.
inline CrtSolution crt_solve(const CongruenceSystem& system) {
  if (system.empty()) throw std::domain_error("empty congruence system");
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& c = system[i];
    if (c.modulus < Natural{2}) throw std::domain_error("congruence " + std::to_string(i) + ": modulus must be >= 2");
    if (c.residue >= c.modulus) {
      throw std::domain_error("congruence " + std::to_string(i) + ": residue must be below its modulus");
    }
  }

  Natural x = system[0].residue;
  Natural m = system[0].modulus;
  for (std::size_t i = 1; i < system.size(); ++i) {
    const auto& [r, n] = system[i];
    const BezoutResult bz = extended_gcd(m, n);
    // x + m t == r (mod n)  <=>  (m/g) t == (r - x)/g (mod n/g)
    const Integer diff = Integer{r} - Integer{x};
    if (!(diff.magnitude() % bz.g).is_zero()) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!detail::pair_consistent(system[j], system[i])) {
          throw InconsistentSystem(j, i, "inconsistent congruences " + std::to_string(j) + " and " +
                                             std::to_string(i) + ": x = " + system[j].residue.to_string() +
                                             " (mod " + system[j].modulus.to_string() + ") and x = " +
                                             r.to_string() + " (mod " + n.to_string() + ")");
        }
      }
      throw std::logic_error("pairwise-consistent congruences failed to merge");
    }
    const Natural step = n / bz.g;
    const Natural t = mod_floor(Integer{diff.magnitude() / bz.g, diff.is_negative()} * bz.u, step);
    const Natural lcm = m * step;
    x = (x + m * t) % lcm;
    m = lcm;
  }
  return {std::move(x), std::move(m)};
}

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of the right nullspace of `rows`, one vector per free column, by
/// reduction to reduced row echelon form in exact arithmetic.
inline std::vector<std::vector<Rational>> nullspace(RationalMatrix rows, std::size_t columns) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational lead = rows[r][col];
    for (auto& v : rows[r]) v = v / lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < columns; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }

  std::vector<std::vector<Rational>> basis;
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns);
    v[free] = Rational{Integer{1}};
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Clears denominators and divides by the content, keeping the sign of each entry.
inline std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Natural den{1};
  for (const auto& q : v) den = den / gcd(den, q.denominator()) * q.denominator();
  std::vector<Integer> out;
  out.reserve(v.size());
  Natural content;
  for (const auto& q : v) {
    out.push_back(q.numerator() * Integer{den / q.denominator()});
    content = gcd(content, out.back().magnitude());
  }
  if (content.is_zero()) return out;
  for (auto& x : out) x = x / content;
  return out;
}

struct CyclicSystemSolution {
  Natural f;
  std::vector<Natural> unknowns;

  friend bool operator==(const CyclicSystemSolution&, const CyclicSystemSolution&) = default;
};

/// Least positive integral solution of f = c_1 u_1 + u_2 = ... = c_k u_k + u_1.
inline CyclicSystemSolution solve_cyclic_system(const std::vector<Natural>& coeffs) {
  const std::size_t k = coeffs.size();
  if (k < 2) throw std::domain_error("cyclic system needs at least two coefficients");
  for (const auto& c : coeffs) {
    if (c.is_zero()) throw std::domain_error("coefficients must be at least 1");
  }

  // Columns 0..k-1 are u_1..u_k, column k is f. Row i: c_i u_i + u_{i+1} - f = 0.
  RationalMatrix rows(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    rows[i][i] = Rational{Integer{coeffs[i]}};
    rows[i][(i + 1) % k] = rows[i][(i + 1) % k] + Rational{Integer{1}};
    rows[i][k] = Rational{Integer{-1}};
  }
  const auto basis = nullspace(std::move(rows), k + 1);

  if (basis.size() != 1) {
    // The square part has determinant prod(c_i) - (-1)^k, so a wider family
    // only occurs for all-ones coefficients with even k. There u_i = 1, f = 2
    // is a solution and every positive solution dominates it componentwise.
    bool all_ones = true;
    for (const auto& c : coeffs) all_ones = all_ones && c == Natural{1};
    if (!all_ones || k % 2 != 0) throw std::domain_error("solution family is not one-dimensional");
    return {Natural{2}, std::vector<Natural>(k, Natural{1})};
  }

  std::vector<Integer> v = primitive_integer_vector(basis.front());
  if (v[k].is_negative()) {
    for (auto& x : v) x = -x;
  }
  CyclicSystemSolution out;
  for (std::size_t i = 0; i < k; ++i) {
    if (v[i].sign() <= 0) throw std::domain_error("no positive solution");
    out.unknowns.push_back(v[i].magnitude());
  }
  if (v[k].sign() <= 0) throw std::domain_error("no positive solution");
  out.f = v[k].magnitude();
  return out;
}

}  // namespace ancientnt
