// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief Command-line front end.
 *
 *  run_cli() takes the argument vector and the two output streams so the
 *  whole surface can be driven in-process by tests. Exit codes: 0 success,
 *  1 usage error (unknown subcommand, bad flag, malformed integer), 2 domain
 *  error (an operation rejected its input).
 */

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ancientnt/bench.hpp"
#include "ancientnt/diophantine.hpp"
#include "ancientnt/gcd.hpp"
#include "ancientnt/historical.hpp"
#include "ancientnt/natural.hpp"
#include "ancientnt/serialize.hpp"

namespace ancientnt::cli {

enum class OutputFormat { Plain, Json, Csv };

namespace detail {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::vector<Natural> parse_list(const std::string& text) {
  std::vector<Natural> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Natural::parse(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

inline void print_list(std::ostream& out, OutputFormat fmt, const std::string& key, const std::vector<Natural>& values,
                       json meta) {
  switch (fmt) {
    case OutputFormat::Plain:
      for (const auto& v : values) out << v.to_string() << '\n';
      break;
    case OutputFormat::Json:
      meta[key] = naturals_to_json(values);
      out << meta.dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      out << "n\n";
      for (const auto& v : values) out << v.to_string() << '\n';
      break;
  }
}

// Rejects csv for subcommands that do not emit listings or reports.
inline void require_not_csv(OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) throw UsageError("--format csv is only valid for bench, primes and pseudoprime");
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::UsageError;

  CLI::App app{"Number theory toolkit: gcd variants with traces, operation-count benchmarks, "
               "irreducible numbers, base-2 pseudoprimes, congruences and cyclic linear systems",
               "ancientnt"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::Plain}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
  OutputFormat fmt = OutputFormat::Plain;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "Output format: plain, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::function<void()> action;

  // gcd
  std::string gcd_a, gcd_b, gcd_algo = "euclid";
  bool gcd_trace = false, gcd_json = false, gcd_ungrouped = false;
  auto* gcd_cmd = app.add_subcommand("gcd", "Greatest common divisor with an optional step trace");
  gcd_cmd->add_option("a", gcd_a)->required();
  gcd_cmd->add_option("b", gcd_b)->required();
  gcd_cmd->add_option("--algo", gcd_algo, "ancient, variant, subtractive, binary or euclid")->capture_default_str();
  gcd_cmd->add_flag("--trace", gcd_trace, "Print every step");
  gcd_cmd->add_flag("--json", gcd_json, "Same as --format json");
  gcd_cmd->add_flag("--ungrouped", gcd_ungrouped, "Expand two-power removals into single halvings");
  add_format(gcd_cmd);
  gcd_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const auto algo = parse_algorithm(gcd_algo);
      if (!algo) throw UsageError("unknown algorithm '" + gcd_algo + "'");
      const Natural a = Natural::parse(gcd_a);
      const Natural b = Natural::parse(gcd_b);
      const GcdTrace t = run_gcd(*algo, a, b, gcd_trace ? TraceMode::Full : TraceMode::CountsOnly);
      if (gcd_json || fmt == OutputFormat::Json) {
        out << trace_to_json(t).dump(2) << '\n';
        return;
      }
      if (gcd_trace) {
        for (const auto& line : render_trace(t, !gcd_ungrouped)) out << line << '\n';
      }
      out << t.result.to_string() << '\n';
    };
  });

  // xgcd
  std::string x_a, x_b;
  auto* xgcd_cmd = app.add_subcommand("xgcd", "Extended gcd: g, u, v with u*a + v*b = g");
  xgcd_cmd->add_option("a", x_a)->required();
  xgcd_cmd->add_option("b", x_b)->required();
  add_format(xgcd_cmd);
  xgcd_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const auto r = extended_gcd(Natural::parse(x_a), Natural::parse(x_b));
      if (fmt == OutputFormat::Json) {
        out << json{{"g", r.g.to_string()}, {"u", r.u.to_string()}, {"v", r.v.to_string()}}.dump(2) << '\n';
      } else {
        out << r.g.to_string() << '\n' << r.u.to_string() << '\n' << r.v.to_string() << '\n';
      }
    };
  });

  // bench
  std::vector<std::string> bench_algos{"binary"};
  bench::TrialSpec spec;
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts over random odd operands of growing size");
  bench_cmd->add_option("--algo", bench_algos, "Comma-separated algorithms")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--bits-min", spec.bits_min)->capture_default_str();
  bench_cmd->add_option("--bits-max", spec.bits_max)->capture_default_str();
  bench_cmd->add_option("--bits-step", spec.bits_step)->capture_default_str();
  bench_cmd->add_option("--trials", spec.trials_per_size)->capture_default_str();
  bench_cmd->add_option("--seed", spec.seed)->capture_default_str();
  bench_cmd->add_option("--threads", spec.threads, "Worker threads; the report does not depend on it")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "CSV destination; without it the CSV goes to stdout");
  add_format(bench_cmd);
  bench_cmd->callback([&] {
    action = [&] {
      spec.algorithms.clear();
      for (const auto& name : bench_algos) {
        const auto algo = parse_algorithm(name);
        if (!algo) throw UsageError("unknown algorithm '" + name + "'");
        spec.algorithms.push_back(*algo);
      }
      const auto report = bench::run_trials(spec);
      if (bench_out.empty() || fmt == OutputFormat::Csv) {
        if (!bench_out.empty()) throw UsageError("--format csv writes to stdout; drop --out");
        bench::write_csv(out, report);
        return;
      }
      {
        std::ofstream file(bench_out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + bench_out + "' for writing");
        bench::write_csv(file, report);
      }
      if (fmt == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& s : report.summaries) {
          arr.push_back(json{{"algorithm", std::string(algorithm_name(s.algorithm))},
                             {"bits", s.bits},
                             {"trials", s.trials},
                             {"mean_iterations", s.iterations.mean},
                             {"sd_iterations", s.iterations.stddev},
                             {"mean_shifts", s.shifts.mean},
                             {"mean_subtractions", s.subtractions.mean}});
        }
        out << json{{"out", bench_out}, {"rows", report.rows.size()}, {"summaries", arr}}.dump(2) << '\n';
      } else {
        for (const auto& s : report.summaries) {
          out << algorithm_name(s.algorithm) << ' ' << s.bits << ' ' << detail::format_double(s.iterations.mean)
              << ' ' << detail::format_double(s.iterations.stddev) << '\n';
        }
      }
    };
  });

  // fit
  std::string fit_in, fit_algo = "binary";
  auto* fit_cmd = app.add_subcommand("fit", "Least-squares line of mean iterations against bit length");
  fit_cmd->add_option("--in", fit_in, "Bench CSV")->required();
  fit_cmd->add_option("--algo", fit_algo)->capture_default_str();
  add_format(fit_cmd);
  fit_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const auto algo = parse_algorithm(fit_algo);
      if (!algo) throw UsageError("unknown algorithm '" + fit_algo + "'");
      std::ifstream file(fit_in, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open '" + fit_in + "'");
      const auto fit = bench::fit_growth(bench::read_csv(file), *algo);
      if (fmt == OutputFormat::Json) {
        out << json{{"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared}}.dump(2) << '\n';
      } else {
        out << "slope=" << detail::format_double(fit.slope) << '\n'
            << "intercept=" << detail::format_double(fit.intercept) << '\n'
            << "r_squared=" << detail::format_double(fit.r_squared) << '\n';
      }
    };
  });

  // primes
  std::string pr_from, pr_to;
  auto* primes_cmd = app.add_subcommand("primes", "Irreducible numbers in [from, to]");
  primes_cmd->add_option("--from", pr_from)->required();
  primes_cmd->add_option("--to", pr_to)->required();
  add_format(primes_cmd);
  primes_cmd->callback([&] {
    action = [&] {
      const auto list = irreducible_in_range(Natural::parse(pr_from), Natural::parse(pr_to));
      detail::print_list(out, fmt, "primes", list, json{{"from", pr_from}, {"to", pr_to}});
    };
  });

  // irreducible
  std::string irr_n;
  auto* irr_cmd = app.add_subcommand("irreducible", "Whether n is irreducible (prime)");
  irr_cmd->add_option("n", irr_n)->required();
  add_format(irr_cmd);
  irr_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const bool r = is_irreducible(Natural::parse(irr_n));
      if (fmt == OutputFormat::Json) {
        out << json{{"n", irr_n}, {"irreducible", r}}.dump(2) << '\n';
      } else {
        out << (r ? "true" : "false") << '\n';
      }
    };
  });

  // factor
  std::string fac_n;
  auto* factor_cmd = app.add_subcommand("factor", "Prime factors by trial division");
  factor_cmd->add_option("n", fac_n)->required();
  add_format(factor_cmd);
  factor_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const auto fs = factor(Natural::parse(fac_n));
      detail::print_list(out, fmt, "factors", fs, json{{"n", fac_n}});
    };
  });

  // multiply
  std::string mul_a, mul_b;
  bool mul_trace = false, mul_grouped = false;
  auto* mul_cmd = app.add_subcommand("multiply", "Multiply by factoring the smaller operand");
  mul_cmd->add_option("a", mul_a)->required();
  mul_cmd->add_option("b", mul_b)->required();
  mul_cmd->add_flag("--trace", mul_trace, "Print every intermediate product");
  mul_cmd->add_flag("--grouped", mul_grouped, "Apply equal prime factors as one prime power");
  add_format(mul_cmd);
  mul_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const auto r = hui_yang_multiply(Natural::parse(mul_a), Natural::parse(mul_b), mul_grouped);
      if (fmt == OutputFormat::Json) {
        json steps = json::array();
        for (const auto& s : r.steps) {
          steps.push_back(naturals_to_json({s.multiplicand, s.factor, s.product}));
        }
        out << json{{"input", json::array({mul_a, mul_b})},
                    {"factored", r.factored.to_string()},
                    {"steps", steps},
                    {"product", r.product.to_string()}}
                   .dump(2)
            << '\n';
        return;
      }
      if (mul_trace) {
        for (const auto& s : r.steps) {
          out << s.multiplicand.to_string() << "×" << s.factor.to_string() << "=" << s.product.to_string() << '\n';
        }
      }
      out << r.product.to_string() << '\n';
    };
  });

  // fermat
  std::string fer_p, fer_x;
  auto* fermat_cmd = app.add_subcommand("fermat", "Whether x^(p-1) = 1 (mod p)");
  fermat_cmd->add_option("p", fer_p)->required();
  fermat_cmd->add_option("x", fer_x)->required();
  add_format(fermat_cmd);
  fermat_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const bool r = fermat_little_check(Natural::parse(fer_p), Natural::parse(fer_x));
      if (fmt == OutputFormat::Json) {
        out << json{{"p", fer_p}, {"x", fer_x}, {"holds", r}}.dump(2) << '\n';
      } else {
        out << (r ? "true" : "false") << '\n';
      }
    };
  });

  // pseudoprime
  std::string pp_limit;
  auto* pp_cmd = app.add_subcommand("pseudoprime", "Composite n <= limit with 2^(n-1) = 1 (mod n)");
  pp_cmd->add_option("--limit", pp_limit)->required();
  add_format(pp_cmd);
  pp_cmd->callback([&] {
    action = [&] {
      const auto list = find_base2_pseudoprimes(Natural::parse(pp_limit));
      detail::print_list(out, fmt, "pseudoprimes", list, json{{"limit", pp_limit}});
    };
  });

  // hypothesis
  std::string hyp_n;
  auto* hyp_cmd = app.add_subcommand("hypothesis", "Classify n against 2^(n-1) = 1 (mod n) implies prime");
  hyp_cmd->add_option("n", hyp_n)->required();
  add_format(hyp_cmd);
  hyp_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const auto v = chinese_hypothesis_classify(Natural::parse(hyp_n));
      if (fmt == OutputFormat::Json) {
        out << json{{"n", v.n.to_string()},
                    {"congruence_holds", v.congruence_holds},
                    {"is_prime", v.is_prime},
                    {"classification", std::string(hypothesis_class_name(v.classification))}}
                   .dump(2)
            << '\n';
      } else {
        out << hypothesis_class_name(v.classification) << '\n';
      }
    };
  });

  // crt
  std::vector<std::string> crt_args;
  auto* crt_cmd = app.add_subcommand("crt", "Solve x = r_i (mod m_i); arguments are r1 m1 [r2 m2 ...]");
  crt_cmd->add_option("pairs", crt_args)->required();
  add_format(crt_cmd);
  crt_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      if (crt_args.size() % 2 != 0) throw UsageError("crt expects residue/modulus pairs");
      CongruenceSystem sys;
      for (std::size_t i = 0; i < crt_args.size(); i += 2) {
        sys.push_back({Natural::parse(crt_args[i]), Natural::parse(crt_args[i + 1])});
      }
      const auto r = crt_solve(sys);
      if (fmt == OutputFormat::Json) {
        out << json{{"solution", r.solution.to_string()}, {"modulus", r.modulus.to_string()}}.dump(2) << '\n';
      } else {
        out << r.solution.to_string() << '\n' << r.modulus.to_string() << '\n';
      }
    };
  });

  // wujia
  std::string wj_coeffs = "2,3,4,5,6";
  auto* wj_cmd = app.add_subcommand("wujia", "Least positive solution of f = c1 u1 + u2 = ... = ck uk + u1");
  wj_cmd->add_option("--coeffs", wj_coeffs, "Comma-separated coefficients")->capture_default_str();
  add_format(wj_cmd);
  wj_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const auto sol = solve_cyclic_system(detail::parse_list(wj_coeffs));
      // a..e for up to five unknowns, u1..uk beyond that.
      auto name = [&](std::size_t i) {
        return sol.unknowns.size() <= 5 ? std::string(1, static_cast<char>('a' + i)) : "u" + std::to_string(i + 1);
      };
      if (fmt == OutputFormat::Json) {
        json unknowns = json::object();
        for (std::size_t i = 0; i < sol.unknowns.size(); ++i) unknowns[name(i)] = sol.unknowns[i].to_string();
        out << json{{"f", sol.f.to_string()}, {"unknowns", unknowns}}.dump(2) << '\n';
      } else {
        out << "f=" << sol.f.to_string();
        for (std::size_t i = 0; i < sol.unknowns.size(); ++i) out << ' ' << name(i) << '=' << sol.unknowns[i].to_string();
        out << '\n';
      }
    };
  });

  // reduce
  std::string red_frac;
  auto* red_cmd = app.add_subcommand("reduce", "Reduce a fraction num/den");
  red_cmd->add_option("fraction", red_frac)->required();
  add_format(red_cmd);
  red_cmd->callback([&] {
    action = [&] {
      detail::require_not_csv(fmt);
      const auto slash = red_frac.find('/');
      if (slash == std::string::npos) throw UsageError("fraction must be written num/den");
      const Fraction r = reduce_fraction({Natural::parse(red_frac.substr(0, slash)),
                                          Natural::parse(red_frac.substr(slash + 1))});
      if (fmt == OutputFormat::Json) {
        out << json{{"numerator", r.numerator.to_string()}, {"denominator", r.denominator.to_string()}}.dump(2)
            << '\n';
      } else {
        out << r.numerator.to_string() << '/' << r.denominator.to_string() << '\n';
      }
    };
  });

  std::vector<const char*> argv{"ancientnt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (action) action();
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ancientnt::cli
