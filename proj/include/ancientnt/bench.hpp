// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief Operation-count harness for the gcd algorithms.
 *
 *  Operand pairs are drawn per (seed, bits, trial) so that a report depends
 *  only on its TrialSpec. The per-trial engine is std::mt19937_64 seeded with
 *
 *      splitmix64(splitmix64(splitmix64(seed) ^ bits) ^ trial)
 *
 *  and each operand is random_with_bits(engine, bits) with bit 0 forced on,
 *  so both operands are odd and have exactly `bits` bits. Both draws use the
 *  same engine, a first then b. std::mt19937_64 and the splitmix64 finalizer
 *  are fully specified, so the pairs are identical across platforms.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ancientnt/gcd.hpp"
#include "ancientnt/natural.hpp"

namespace ancientnt::bench {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t bits, std::size_t trial) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ bits) ^ trial);
}

/// The odd operand pair used for trial `trial` at size `bits`.
inline std::pair<Natural, Natural> trial_operands(std::uint64_t seed, std::size_t bits, std::size_t trial) {
  std::mt19937_64 engine(trial_seed(seed, bits, trial));
  auto draw = [&] {
    Natural n = Natural::random_with_bits(engine, bits);
    if (n.is_even()) n += Natural{1};
    return n;
  };
  Natural a = draw();
  Natural b = draw();
  return {std::move(a), std::move(b)};
}

struct TrialSpec {
  std::vector<GcdAlgorithm> algorithms{GcdAlgorithm::Binary};
  std::size_t bits_min = 64;
  std::size_t bits_max = 1024;
  std::size_t bits_step = 64;
  std::size_t trials_per_size = 200;
  std::uint64_t seed = 0;
  unsigned threads = 1;  // does not affect the report

  void validate() const {
    if (algorithms.empty()) throw std::domain_error("no algorithm selected");
    if (bits_min < 2) throw std::domain_error("bits-min must be at least 2");
    if (bits_max < bits_min) throw std::domain_error("bits-max must be at least bits-min");
    if (bits_step < 1) throw std::domain_error("bits-step must be at least 1");
    if (trials_per_size < 1) throw std::domain_error("trials must be at least 1");
  }

  [[nodiscard]] std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (std::size_t b = bits_min; b <= bits_max; b += bits_step) out.push_back(b);
    return out;
  }
};

struct TrialRow {
  GcdAlgorithm algorithm = GcdAlgorithm::Binary;
  std::size_t bits = 0;
  std::size_t trial = 0;
  OperationCounts counts;

  friend bool operator==(const TrialRow&, const TrialRow&) = default;
};

struct CountStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single trial
};

struct SizeSummary {
  GcdAlgorithm algorithm = GcdAlgorithm::Binary;
  std::size_t bits = 0;
  std::size_t trials = 0;
  CountStats iterations, subtractions, shifts, mod_reductions, comparisons;
};

struct BenchReport {
  std::vector<TrialRow> rows;          // ordered by (algorithm in spec order, bits, trial)
  std::vector<SizeSummary> summaries;  // ordered by (algorithm, bits)
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

inline OperationCounts count_operations(GcdAlgorithm algo, const Natural& a, const Natural& b) {
  return run_gcd(algo, a, b, TraceMode::CountsOnly).counts;
}

namespace detail {

inline CountStats stats(const std::vector<double>& xs) {
  CountStats s;
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

}  // namespace detail

/// Groups rows by (algorithm, bits) in first-appearance order of the algorithm
/// and ascending bits.
inline std::vector<SizeSummary> summarize(const std::vector<TrialRow>& rows) {
  std::vector<GcdAlgorithm> algo_order;
  std::map<std::pair<int, std::size_t>, std::vector<const TrialRow*>> groups;
  for (const auto& row : rows) {
    if (std::find(algo_order.begin(), algo_order.end(), row.algorithm) == algo_order.end()) {
      algo_order.push_back(row.algorithm);
    }
    groups[{static_cast<int>(row.algorithm), row.bits}].push_back(&row);
  }
  std::vector<SizeSummary> out;
  for (auto algo : algo_order) {
    for (const auto& [key, members] : groups) {
      if (key.first != static_cast<int>(algo)) continue;
      auto collect = [&](auto field) {
        std::vector<double> xs;
        xs.reserve(members.size());
        for (const TrialRow* r : members) xs.push_back(static_cast<double>(r->counts.*field));
        return detail::stats(xs);
      };
      SizeSummary s;
      s.algorithm = algo;
      s.bits = key.second;
      s.trials = members.size();
      s.iterations = collect(&OperationCounts::iterations);
      s.subtractions = collect(&OperationCounts::subtractions);
      s.shifts = collect(&OperationCounts::shifts);
      s.mod_reductions = collect(&OperationCounts::mod_reductions);
      s.comparisons = collect(&OperationCounts::comparisons);
      out.push_back(s);
    }
  }
  return out;
}

inline BenchReport run_trials(const TrialSpec& spec) {
  spec.validate();
  const auto sizes = spec.sizes();
  const std::size_t per_algo = sizes.size() * spec.trials_per_size;
  BenchReport report;
  report.rows.resize(per_algo * spec.algorithms.size());

  // Job j covers (size index j / trials, trial j % trials) for every algorithm
  // and writes into fixed slots, so the schedule cannot change the output.
  auto run_job = [&](std::size_t job) {
    const std::size_t bits = sizes[job / spec.trials_per_size];
    const std::size_t trial = job % spec.trials_per_size;
    const auto [a, b] = trial_operands(spec.seed, bits, trial);
    for (std::size_t k = 0; k < spec.algorithms.size(); ++k) {
      report.rows[k * per_algo + job] = {spec.algorithms[k], bits, trial, count_operations(spec.algorithms[k], a, b)};
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(spec.threads, static_cast<unsigned>(per_algo)));
  if (workers == 1) {
    for (std::size_t j = 0; j < per_algo; ++j) run_job(j);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t j = w; j < per_algo; j += workers) run_job(j);
      });
    }
    for (auto& t : pool) t.join();
  }

  report.summaries = summarize(report.rows);
  return report;
}

/// Ordinary least squares of mean iterations against bit length.
inline FitResult fit_points(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::domain_error("insufficient sizes for fit");
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) throw std::domain_error("insufficient sizes for fit");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (const auto& [x, y] : points) {
    const double e = y - (fit.intercept + fit.slope * x);
    ss_res += e * e;
  }
  // Flat data is fit exactly by the horizontal line.
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

inline FitResult fit_growth(const BenchReport& report, GcdAlgorithm algo) {
  std::vector<std::pair<double, double>> points;
  for (const auto& s : report.summaries) {
    if (s.algorithm == algo) points.emplace_back(static_cast<double>(s.bits), s.iterations.mean);
  }
  return fit_points(points);
}

inline constexpr std::string_view csv_header =
    "algorithm,bits,trial,iterations,subtractions,shifts,mod_reductions,comparisons";

inline void write_csv(std::ostream& out, const BenchReport& report) {
  out << csv_header << '\n';
  for (const auto& r : report.rows) {
    out << algorithm_name(r.algorithm) << ',' << r.bits << ',' << r.trial << ',' << r.counts.iterations << ','
        << r.counts.subtractions << ',' << r.counts.shifts << ',' << r.counts.mod_reductions << ','
        << r.counts.comparisons << '\n';
  }
}

/// Reads a CSV written by write_csv. Throws std::invalid_argument on malformed input.
inline BenchReport read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty bench CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != csv_header) throw std::invalid_argument("unexpected bench CSV header");

  BenchReport report;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    auto bad = [&] { return std::invalid_argument("malformed bench CSV line " + std::to_string(lineno)); };
    if (cells.size() != 8) throw bad();
    const auto algo = parse_algorithm(cells[0]);
    if (!algo) throw bad();
    std::uint64_t v[7];
    for (int i = 0; i < 7; ++i) {
      try {
        v[i] = Natural::parse(cells[static_cast<std::size_t>(i) + 1]).to_u64();
      } catch (const std::exception&) {
        throw bad();
      }
    }
    report.rows.push_back({*algo, static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]),
                           OperationCounts{v[3], v[4], v[5], v[6], v[2]}});
  }
  report.summaries = summarize(report.rows);
  return report;
}

}  // namespace ancientnt::bench
