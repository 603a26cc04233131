// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief GCD algorithms with step traces and operation counts.
 *
 *  Five routes to gcd(a, b):
 *  - ancient_gcd: strip powers of two from both inputs, run mutual
 *    subtraction on the odd parts, scale back by 2^min(e, f).
 *  - ancient_gcd_variant: on odd operands, subtract and remove the full
 *    power of two from every difference.
 *  - subtractive_gcd: plain mutual subtraction, no pre-split.
 *  - binary_gcd: one modular reduction, then the halving/difference loop.
 *  - euclid_gcd: repeated modular reduction; the reference oracle.
 *
 *  Every routine returns a GcdTrace. With TraceMode::CountsOnly the step list
 *  stays empty and only the OperationCounts are kept, which is what the
 *  benchmark harness uses on large operands.
 *
 *  Counting conventions:
 *  - subtractions: Subtract steps.
 *  - shifts: single-bit halvings. A RemoveTwoPower step of 2^g counts g.
 *  - mod_reductions: ModReduce steps.
 *  - comparisons: order or equality tests between two operands. Parity and
 *    zero tests are not counted.
 *  - iterations: passes through the algorithm's main loop.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ancientnt/integer.hpp"
#include "ancientnt/natural.hpp"

namespace ancientnt {

enum class GcdAlgorithm { Ancient, AncientVariant, Subtractive, Binary, Euclid };

inline constexpr GcdAlgorithm all_gcd_algorithms[] = {GcdAlgorithm::Ancient, GcdAlgorithm::AncientVariant,
                                                      GcdAlgorithm::Subtractive, GcdAlgorithm::Binary,
                                                      GcdAlgorithm::Euclid};

/// Command-line / JSON spelling.
inline std::string_view algorithm_name(GcdAlgorithm algo) {
  switch (algo) {
    case GcdAlgorithm::Ancient: return "ancient";
    case GcdAlgorithm::AncientVariant: return "variant";
    case GcdAlgorithm::Subtractive: return "subtractive";
    case GcdAlgorithm::Binary: return "binary";
    case GcdAlgorithm::Euclid: return "euclid";
  }
  return "unknown";
}

inline std::optional<GcdAlgorithm> parse_algorithm(std::string_view name) {
  for (auto algo : all_gcd_algorithms) {
    if (algorithm_name(algo) == name) return algo;
  }
  return std::nullopt;
}

enum class StepKind { Subtract, Halve, RemoveTwoPower, Swap, ModReduce, Terminate };

inline std::string_view step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::Subtract: return "subtract";
    case StepKind::Halve: return "halve";
    case StepKind::RemoveTwoPower: return "remove_two_power";
    case StepKind::Swap: return "swap";
    case StepKind::ModReduce: return "mod_reduce";
    case StepKind::Terminate: return "terminate";
  }
  return "unknown";
}

inline std::optional<StepKind> parse_step_kind(std::string_view name) {
  for (auto kind : {StepKind::Subtract, StepKind::Halve, StepKind::RemoveTwoPower, StepKind::Swap,
                    StepKind::ModReduce, StepKind::Terminate}) {
    if (step_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

/// One line of a trace. Operand layout per kind:
///   Subtract       {x, y, x - y}
///   Halve          {v, v / 2}
///   RemoveTwoPower {v, 2^g, z}   v = 2^g * z, z odd
///   Swap           {x, y}        the pair is exchanged
///   ModReduce      {a, b, a mod b}
///   Terminate      {g} or {g, 2^k, 2^k * g}
struct GcdStep {
  StepKind kind = StepKind::Terminate;
  std::vector<Natural> operands;

  friend bool operator==(const GcdStep&, const GcdStep&) = default;
};

struct OperationCounts {
  std::uint64_t subtractions = 0;
  std::uint64_t shifts = 0;
  std::uint64_t mod_reductions = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t iterations = 0;

  friend bool operator==(const OperationCounts&, const OperationCounts&) = default;
};

struct GcdTrace {
  GcdAlgorithm algorithm = GcdAlgorithm::Euclid;
  std::pair<Natural, Natural> inputs;
  std::vector<GcdStep> steps;
  Natural result;
  OperationCounts counts;

  friend bool operator==(const GcdTrace&, const GcdTrace&) = default;
};

enum class TraceMode { Full, CountsOnly };

/// n = 2^exponent * odd_part with odd_part odd.
struct TwoAdicSplit {
  std::size_t exponent = 0;
  Natural odd_part;

  friend bool operator==(const TwoAdicSplit&, const TwoAdicSplit&) = default;
};

inline TwoAdicSplit two_adic_split(const Natural& n) {
  if (n.is_zero()) throw std::domain_error("zero has no 2-adic split");
  const std::size_t e = n.trailing_zeros();
  return {e, n >> e};
}

namespace detail {

class TraceBuilder {
 public:
  TraceBuilder(GcdAlgorithm algo, const Natural& a, const Natural& b, TraceMode mode) : mode_(mode) {
    trace_.algorithm = algo;
    trace_.inputs = {a, b};
  }

  OperationCounts& counts() { return trace_.counts; }

  void subtract(const Natural& x, const Natural& y, const Natural& diff) {
    ++trace_.counts.subtractions;
    record(StepKind::Subtract, {x, y, diff});
  }
  void halve(const Natural& before, const Natural& after) {
    ++trace_.counts.shifts;
    record(StepKind::Halve, {before, after});
  }
  void remove_two_power(const Natural& value, std::size_t exponent, const Natural& odd) {
    trace_.counts.shifts += exponent;
    if (mode_ == TraceMode::Full) record(StepKind::RemoveTwoPower, {value, Natural::power_of_two(exponent), odd});
  }
  void swap(const Natural& x, const Natural& y) { record(StepKind::Swap, {x, y}); }
  void mod_reduce(const Natural& a, const Natural& b, const Natural& r) {
    ++trace_.counts.mod_reductions;
    record(StepKind::ModReduce, {a, b, r});
  }

  GcdTrace finish(const Natural& g, std::size_t scale_exponent = 0) {
    if (scale_exponent == 0) {
      trace_.result = g;
      record(StepKind::Terminate, {g});
    } else {
      trace_.result = g << scale_exponent;
      if (mode_ == TraceMode::Full) {
        record(StepKind::Terminate, {g, Natural::power_of_two(scale_exponent), trace_.result});
      }
    }
    return std::move(trace_);
  }

 private:
  GcdTrace trace_;
  TraceMode mode_;

  void record(StepKind kind, std::initializer_list<Natural> operands) {
    if (mode_ == TraceMode::Full) trace_.steps.push_back({kind, std::vector<Natural>(operands)});
  }
};

// Mutual subtraction on (x, y) keeping the larger as minuend. Shared by
// ancient_gcd (on odd parts) and subtractive_gcd.
inline Natural mutual_subtraction(Natural x, Natural y, TraceBuilder& tb, TraceMode mode, bool ancient_update) {
  auto& c = tb.counts();
  ++c.comparisons;
  if (x < y) {
    tb.swap(x, y);
    std::swap(x, y);
  }
  for (;;) {
    ++c.comparisons;
    if (x == y) break;
    ++c.iterations;
    if (mode == TraceMode::Full) {
      Natural z = x - y;
      tb.subtract(x, y, z);
      if (ancient_update) {
        // When y >= z: x <- y, y <- z. Otherwise x <- z.
        ++c.comparisons;
        if (y >= z) {
          x = std::move(y);
          y = std::move(z);
        } else {
          x = std::move(z);
        }
      } else {
        x = std::move(z);
        ++c.comparisons;
        if (x < y) std::swap(x, y);
      }
    } else {
      ++c.subtractions;
      x -= y;
      ++c.comparisons;
      if (x < y) std::swap(x, y);
    }
  }
  return x;
}

}  // namespace detail

/// Pre-split a = 2^e x and b = 2^f y, mutual subtraction on x and y, and
/// gcd(a, b) = 2^min(e, f) gcd(x, y). A single zero input returns the other.
inline GcdTrace ancient_gcd(const Natural& a, const Natural& b, TraceMode mode = TraceMode::Full) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined for the ancient algorithm");
  detail::TraceBuilder tb(GcdAlgorithm::Ancient, a, b, mode);
  if (b.is_zero()) return tb.finish(a);
  if (a.is_zero()) return tb.finish(b);

  const TwoAdicSplit sa = two_adic_split(a);
  const TwoAdicSplit sb = two_adic_split(b);
  if (sa.exponent > 0) tb.remove_two_power(a, sa.exponent, sa.odd_part);
  if (sb.exponent > 0) tb.remove_two_power(b, sb.exponent, sb.odd_part);

  Natural g = detail::mutual_subtraction(sa.odd_part, sb.odd_part, tb, mode, true);
  return tb.finish(g, std::min(sa.exponent, sb.exponent));
}

/// Mutual subtraction straight on (a, b), as in "98-63=35, 63-35=28, 35-28=7".
inline GcdTrace subtractive_gcd(const Natural& a, const Natural& b, TraceMode mode = TraceMode::Full) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("subtractive gcd requires positive operands");
  detail::TraceBuilder tb(GcdAlgorithm::Subtractive, a, b, mode);
  Natural g = detail::mutual_subtraction(a, b, tb, mode, false);
  return tb.finish(g);
}

/// Odd operands only. Each difference x - y = 2^g z is stripped to its odd part z.
inline GcdTrace ancient_gcd_variant(const Natural& x0, const Natural& y0, TraceMode mode = TraceMode::Full) {
  if (x0.is_even() || y0.is_even()) throw std::domain_error("variant requires odd operands");
  detail::TraceBuilder tb(GcdAlgorithm::AncientVariant, x0, y0, mode);
  auto& c = tb.counts();
  Natural x = x0;
  Natural y = y0;
  ++c.comparisons;
  if (x < y) {
    tb.swap(x, y);
    std::swap(x, y);
  }
  for (;;) {
    ++c.comparisons;
    if (x == y) break;
    ++c.iterations;
    Natural diff = x - y;
    tb.subtract(x, y, diff);
    const std::size_t g = diff.trailing_zeros();
    Natural z = diff >> g;
    tb.remove_two_power(diff, g, z);
    ++c.comparisons;
    if (y >= z) {
      x = std::move(y);
      y = std::move(z);
    } else {
      x = std::move(z);
    }
  }
  return tb.finish(x);
}

/// Binary gcd, Steps 1-5:
///   1. order a >= b; if b = 0 answer a; else (a, b) <- (b, a mod b)
///   2. if b = 0 answer a; strip common factors of two into k
///   3. make whichever operand is even odd
///   4. t <- (a - b) / 2; if t = 0 answer 2^k a
///   5. halve t while even; positive t replaces a, negative replaces b; back to 4
inline GcdTrace binary_gcd(const Natural& a0, const Natural& b0, TraceMode mode = TraceMode::Full) {
  detail::TraceBuilder tb(GcdAlgorithm::Binary, a0, b0, mode);
  auto& c = tb.counts();
  Natural a = a0;
  Natural b = b0;

  // Step 1
  ++c.comparisons;
  if (a < b) {
    tb.swap(a, b);
    std::swap(a, b);
  }
  if (b.is_zero()) return tb.finish(a);
  {
    Natural r = a % b;
    tb.mod_reduce(a, b, r);
    a = std::move(b);
    b = std::move(r);
  }

  // Step 2
  if (b.is_zero()) return tb.finish(a);
  std::size_t k = 0;
  auto halve = [&](Natural& v) {
    if (mode == TraceMode::Full) {
      Natural h = v >> 1;
      tb.halve(v, h);
      v = std::move(h);
    } else {
      ++c.shifts;
      v >>= 1;
    }
  };
  while (a.is_even() && b.is_even()) {
    ++k;
    halve(a);
    halve(b);
  }

  // Step 3
  if (a.is_even()) {
    while (a.is_even()) halve(a);
  } else {
    while (b.is_even()) halve(b);
  }

  // Steps 4 and 5. t is tracked as a magnitude plus a sign.
  for (;;) {
    ++c.iterations;
    ++c.comparisons;
    const bool positive = a >= b;
    Natural t = positive ? a - b : b - a;
    if (mode == TraceMode::Full) {
      tb.subtract(positive ? a : b, positive ? b : a, t);
    } else {
      ++c.subtractions;
    }
    if (t.is_zero()) return tb.finish(a, k);
    halve(t);
    while (t.is_even()) halve(t);
    (positive ? a : b) = std::move(t);
  }
}

/// (a, b) <- (b, a mod b) until b = 0.
inline GcdTrace euclid_gcd(const Natural& a0, const Natural& b0, TraceMode mode = TraceMode::Full) {
  detail::TraceBuilder tb(GcdAlgorithm::Euclid, a0, b0, mode);
  auto& c = tb.counts();
  Natural a = a0;
  Natural b = b0;
  while (!b.is_zero()) {
    ++c.iterations;
    Natural r = a % b;
    tb.mod_reduce(a, b, r);
    a = std::move(b);
    b = std::move(r);
  }
  return tb.finish(a);
}

inline GcdTrace run_gcd(GcdAlgorithm algo, const Natural& a, const Natural& b, TraceMode mode = TraceMode::Full) {
  switch (algo) {
    case GcdAlgorithm::Ancient: return ancient_gcd(a, b, mode);
    case GcdAlgorithm::AncientVariant: return ancient_gcd_variant(a, b, mode);
    case GcdAlgorithm::Subtractive: return subtractive_gcd(a, b, mode);
    case GcdAlgorithm::Binary: return binary_gcd(a, b, mode);
    case GcdAlgorithm::Euclid: return euclid_gcd(a, b, mode);
  }
  throw std::invalid_argument("unknown gcd algorithm");
}

/// Untraced gcd for internal callers. gcd(0, 0) = 0.
inline Natural gcd(Natural a, Natural b) {
  while (!b.is_zero()) {
    a = a % b;
    std::swap(a, b);
  }
  return a;
}

struct BezoutResult {
  Natural g;
  Integer u;
  Integer v;
};

/// g = gcd(a, b) together with u, v such that u a + v b = g.
inline BezoutResult extended_gcd(const Natural& a, const Natural& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("extended gcd of (0, 0) is undefined");
  Natural old_r = a;
  Natural r = b;
  Integer old_s{1};
  Integer s{0};
  Integer old_t{0};
  Integer t{1};
  while (!r.is_zero()) {
    auto [q, rem] = Natural::divmod(old_r, r);
    const Integer qi{q};
    old_r = std::exchange(r, std::move(rem));
    old_s = std::exchange(s, old_s - qi * s);
    old_t = std::exchange(t, old_t - qi * t);
  }
  return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

/// Re-executes a trace as a dataflow: every step's source operands must be
/// the trace inputs or values produced by earlier steps, every step's output
/// is recomputed and compared, and the closing Terminate must produce the
/// recorded result. Returns a description of the first failure, or nullopt.
inline std::optional<std::string> check_trace(const GcdTrace& trace) {
  std::set<Natural> known{trace.inputs.first, trace.inputs.second};
  auto fail = [](std::size_t i, const std::string& what) {
    return std::optional<std::string>("step " + std::to_string(i) + ": " + what);
  };
  auto is_power_of_two = [](const Natural& n) { return !n.is_zero() && n == Natural::power_of_two(n.trailing_zeros()); };
  const std::size_t arity_min[] = {3, 2, 3, 2, 3, 1};

  if (trace.steps.empty()) return "empty trace";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const GcdStep& step = trace.steps[i];
    const auto& op = step.operands;
    if (op.size() < arity_min[static_cast<int>(step.kind)]) return fail(i, "too few operands");
    auto need = [&](const Natural& v) { return known.count(v) != 0; };

    switch (step.kind) {
      case StepKind::Subtract:
        if (!need(op[0]) || !need(op[1])) return fail(i, "subtract uses an unknown value");
        if (op[0] < op[1] || op[0] - op[1] != op[2]) return fail(i, "subtraction identity broken");
        known.insert(op[2]);
        break;
      case StepKind::Halve:
        if (!need(op[0])) return fail(i, "halve uses an unknown value");
        if (op[0].is_odd() || (op[0] >> 1) != op[1]) return fail(i, "halving identity broken");
        known.insert(op[1]);
        break;
      case StepKind::RemoveTwoPower:
        if (!need(op[0])) return fail(i, "two-power removal uses an unknown value");
        if (!is_power_of_two(op[1]) || op[2].is_even() || op[1] * op[2] != op[0]) {
          return fail(i, "two-power identity broken");
        }
        known.insert(op[2]);
        break;
      case StepKind::Swap:
        if (!need(op[0]) || !need(op[1])) return fail(i, "swap uses an unknown value");
        break;
      case StepKind::ModReduce:
        if (!need(op[0]) || !need(op[1])) return fail(i, "reduction uses an unknown value");
        if (op[1].is_zero() || op[0] % op[1] != op[2]) return fail(i, "reduction identity broken");
        known.insert(op[2]);
        break;
      case StepKind::Terminate:
        if (i + 1 != trace.steps.size()) return fail(i, "terminate before the last step");
        if (!need(op[0])) return fail(i, "terminate uses an unknown value");
        if (op.size() == 1) {
          if (op[0] != trace.result) return fail(i, "terminal value differs from result");
        } else if (op.size() == 3) {
          if (!is_power_of_two(op[1]) || op[0] * op[1] != op[2] || op[2] != trace.result) {
            return fail(i, "scaled terminal value differs from result");
          }
        } else {
          return fail(i, "terminate takes one or three operands");
        }
        break;
    }
  }
  if (trace.steps.back().kind != StepKind::Terminate) return "trace does not end with terminate";
  return std::nullopt;
}

/// Text rendering of one step. With grouped = true a RemoveTwoPower step is
/// one line ("28=4×7"); otherwise it expands into one halving per line.
inline std::vector<std::string> render_step(const GcdStep& step, bool grouped = true) {
  const auto& op = step.operands;
  auto s = [](const Natural& n) { return n.to_string(); };
  switch (step.kind) {
    case StepKind::Subtract: return {s(op[0]) + "-" + s(op[1]) + "=" + s(op[2])};
    case StepKind::Halve: return {s(op[0]) + "/2=" + s(op[1])};
    case StepKind::RemoveTwoPower: {
      if (grouped) return {s(op[0]) + "=" + s(op[1]) + "×" + s(op[2])};
      std::vector<std::string> lines;
      Natural v = op[0];
      while (v != op[2]) {
        Natural h = v >> 1;
        lines.push_back(s(v) + "/2=" + s(h));
        v = std::move(h);
      }
      return lines;
    }
    case StepKind::Swap: return {"swap " + s(op[0]) + " " + s(op[1])};
    case StepKind::ModReduce: return {s(op[0]) + " mod " + s(op[1]) + "=" + s(op[2])};
    case StepKind::Terminate:
      if (op.size() == 1) return {s(op[0]) + "=" + s(op[0])};
      return {s(op[1]) + "×" + s(op[0]) + "=" + s(op[2])};
  }
  return {};
}

inline std::vector<std::string> render_trace(const GcdTrace& trace, bool grouped = true) {
  std::vector<std::string> lines;
  for (const auto& step : trace.steps) {
    auto part = render_step(step, grouped);
    lines.insert(lines.end(), part.begin(), part.end());
  }
  return lines;
}

}  // namespace ancientnt
