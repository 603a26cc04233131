// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ancientnt/cli.hpp"

using namespace ancientnt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ancientnt_cli_test_" + name);
}

}  // namespace

TEST(CliTest, GcdPlain) {
  const auto r = run({"gcd", "98", "63", "--algo", "binary"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "7\n");
  for (const char* algo : {"ancient", "subtractive", "binary", "euclid"}) {
    EXPECT_EQ(run({"gcd", "98", "63", "--algo", algo}).out, "7\n") << algo;
  }
  EXPECT_EQ(run({"gcd", "63", "35", "--algo", "variant"}).out, "7\n");
}

TEST(CliTest, GcdDomainErrorExitsTwo) {
  const auto r = run({"gcd", "0", "0", "--algo", "subtractive"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("error"), std::string::npos);
  EXPECT_EQ(run({"gcd", "98", "63", "--algo", "variant"}).code, 2);
}

TEST(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  const auto bad_int = run({"gcd", "98x", "63"});
  EXPECT_EQ(bad_int.code, 1);
  EXPECT_NE(bad_int.err.find("malformed"), std::string::npos);
  EXPECT_NE(bad_int.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"gcd", "-98", "63"}).code, 1);
  EXPECT_EQ(run({"gcd", "98", "63", "--algo", "stein"}).code, 1);
  EXPECT_EQ(run({"gcd", "98", "63", "--format", "csv"}).code, 1);
  EXPECT_EQ(run({"crt", "1", "2", "3"}).code, 1);
  EXPECT_EQ(run({"reduce", "98"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliTest, VariantTraceGrouped) {
  const auto r = run({"gcd", "63", "35", "--algo", "variant", "--trace"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "63-35=28\n28=4×7\n35-7=28\n28=4×7\n7=7\n7\n");
  const auto expanded = run({"gcd", "63", "35", "--algo", "variant", "--trace", "--ungrouped"});
  EXPECT_EQ(expanded.out, "63-35=28\n28/2=14\n14/2=7\n35-7=28\n28/2=14\n14/2=7\n7=7\n7\n");
}

TEST(CliTest, GcdTraceJsonSchemaAndRoundTrip) {
  const auto r = run({"gcd", "63", "35", "--algo", "variant", "--trace", "--json"});
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["algorithm"], "variant");
  EXPECT_EQ(doc["input"], json::array({"63", "35"}));
  EXPECT_EQ(doc["result"], "7");
  ASSERT_EQ(doc["steps"].size(), 5u);
  EXPECT_EQ(doc["steps"][0], (json{{"kind", "subtract"}, {"operands", {"63", "35", "28"}}}));
  EXPECT_EQ(doc["steps"][1], (json{{"kind", "remove_two_power"}, {"operands", {"28", "4", "7"}}}));
  EXPECT_EQ(doc["steps"][2], (json{{"kind", "subtract"}, {"operands", {"35", "7", "28"}}}));
  EXPECT_EQ(doc["steps"][3], (json{{"kind", "remove_two_power"}, {"operands", {"28", "4", "7"}}}));
  EXPECT_EQ(doc["steps"][4], (json{{"kind", "terminate"}, {"operands", {"7"}}}));
  for (const char* key : {"iterations", "subtractions", "shifts", "mod_reductions", "comparisons"}) {
    EXPECT_TRUE(doc["counts"][key].is_number_integer()) << key;
  }

  const GcdTrace parsed = trace_from_json(doc);
  EXPECT_EQ(trace_to_json(parsed), doc);
  EXPECT_EQ(parsed, ancient_gcd_variant(Natural{63}, Natural{35}));
  EXPECT_EQ(run({"gcd", "63", "35", "--algo", "variant", "--trace", "--format", "json"}).out, r.out);
}

// Every subcommand's JSON output parses and re-serializes to the same document.
TEST(CliTest, JsonRoundTripEverySubcommand) {
  const auto csv = temp_path("roundtrip.csv");
  ASSERT_EQ(run({"bench", "--bits-min", "16", "--bits-max", "48", "--bits-step", "16", "--trials", "3", "--out",
                 csv.string()})
                .code,
            0);
  const std::vector<std::vector<std::string>> commands{
      {"gcd", "1071", "462", "--algo", "ancient", "--trace", "--format", "json"},
      {"gcd", "48", "36", "--algo", "binary", "--format", "json"},
      {"xgcd", "98", "63", "--format", "json"},
      {"bench", "--bits-min", "16", "--bits-max", "32", "--bits-step", "16", "--trials", "2", "--out",
       temp_path("json.csv").string(), "--format", "json"},
      {"fit", "--in", csv.string(), "--format", "json"},
      {"primes", "--from", "200", "--to", "300", "--format", "json"},
      {"irreducible", "221", "--format", "json"},
      {"factor", "23121", "--format", "json"},
      {"multiply", "38367", "23121", "--grouped", "--format", "json"},
      {"fermat", "341", "2", "--format", "json"},
      {"pseudoprime", "--limit", "2000", "--format", "json"},
      {"hypothesis", "341", "--format", "json"},
      {"crt", "2", "3", "3", "5", "2", "7", "--format", "json"},
      {"wujia", "--format", "json"},
      {"reduce", "98/63", "--format", "json"},
  };
  for (const auto& cmd : commands) {
    const auto r = run(cmd);
    ASSERT_EQ(r.code, 0) << cmd[0] << ": " << r.err;
    const json doc = json::parse(r.out);
    EXPECT_EQ(json::parse(doc.dump()), doc) << cmd[0];
    EXPECT_EQ(doc.dump(2) + "\n", r.out) << cmd[0];
  }
}

TEST(CliTest, Wujia) {
  const auto r = run({"wujia"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "f=721 a=265 b=191 c=148 d=129 e=76\n");
  EXPECT_EQ(run({"wujia", "--coeffs", "2,3"}).out, "f=5 a=2 b=1\n");
  EXPECT_EQ(run({"wujia", "--coeffs", "1,3"}).code, 2);
  EXPECT_EQ(run({"wujia", "--coeffs", "2,x"}).code, 1);
  const auto json_out = json::parse(run({"wujia", "--format", "json"}).out);
  EXPECT_EQ(json_out["f"], "721");
  EXPECT_EQ(json_out["unknowns"]["e"], "76");
}

TEST(CliTest, HistoricalSubcommands) {
  EXPECT_EQ(run({"primes", "--from", "24", "--to", "28"}).out, "");
  EXPECT_EQ(run({"primes", "--from", "2", "--to", "7", "--format", "csv"}).out, "n\n2\n3\n5\n7\n");
  EXPECT_EQ(run({"primes", "--from", "9", "--to", "2"}).code, 2);
  EXPECT_EQ(run({"factor", "341"}).out, "11\n31\n");
  EXPECT_EQ(run({"factor", "0"}).code, 2);
  EXPECT_EQ(run({"multiply", "38367", "23121", "--trace", "--grouped"}).out,
            "38367×9=345303\n345303×7=2417121\n2417121×367=887083407\n887083407\n");
  EXPECT_EQ(run({"multiply", "12", "35"}).out, "420\n");
  EXPECT_EQ(run({"pseudoprime", "--limit", "341"}).out, "341\n");
  EXPECT_EQ(run({"pseudoprime", "--limit", "340"}).out, "");
  EXPECT_EQ(run({"hypothesis", "341"}).out, "pseudoprime\n");
  EXPECT_EQ(run({"hypothesis", "5"}).out, "prime-consistent\n");
  EXPECT_EQ(run({"hypothesis", "6"}).out, "composite-consistent\n");
  EXPECT_EQ(run({"hypothesis", "1"}).code, 2);
  EXPECT_EQ(run({"fermat", "7", "2"}).out, "true\n");
  EXPECT_EQ(run({"fermat", "7", "14"}).code, 2);
  EXPECT_EQ(run({"irreducible", "211"}).out, "true\n");
  EXPECT_EQ(run({"factor", "12", "--format", "csv"}).code, 1);
}

TEST(CliTest, DiophantineSubcommands) {
  EXPECT_EQ(run({"crt", "2", "3", "3", "5", "2", "7"}).out, "23\n105\n");
  EXPECT_EQ(run({"crt", "1", "4", "3", "6"}).out, "9\n12\n");
  const auto bad = run({"crt", "0", "4", "3", "6"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("inconsistent"), std::string::npos);
  EXPECT_EQ(run({"reduce", "98/63"}).out, "14/9\n");
  EXPECT_EQ(run({"reduce", "0/5"}).out, "0/1\n");
  EXPECT_EQ(run({"reduce", "1/0"}).code, 2);
  EXPECT_EQ(run({"xgcd", "98", "63"}).out, "7\n2\n-3\n");
  EXPECT_EQ(run({"xgcd", "0", "0"}).code, 2);
}

TEST(CliTest, BenchDeterministicCsvAndFit) {
  const auto a = temp_path("a.csv");
  const auto b = temp_path("b.csv");
  const std::vector<std::string> base{"bench", "--algo", "binary,euclid", "--bits-min", "64", "--bits-max", "256",
                                      "--bits-step", "64", "--trials", "20", "--seed", "7"};
  auto with_out = [&](const std::filesystem::path& p) {
    auto v = base;
    v.insert(v.end(), {"--out", p.string()});
    return v;
  };
  ASSERT_EQ(run(with_out(a)).code, 0);
  ASSERT_EQ(run(with_out(b)).code, 0);
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "algorithm,bits,trial,iterations,subtractions,shifts,mod_reductions,comparisons");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 2 * 4 * 20);

  // Without --out the same CSV goes to stdout.
  EXPECT_EQ(run(base).out, text);

  const auto fit = run({"fit", "--in", a.string(), "--algo", "binary"});
  EXPECT_EQ(fit.code, 0);
  EXPECT_EQ(fit.out.rfind("slope=", 0), 0u);
  EXPECT_EQ(run({"fit", "--in", a.string(), "--algo", "variant"}).code, 2);
  EXPECT_EQ(run({"fit", "--in", temp_path("missing.csv").string()}).code, 2);
  EXPECT_EQ(run({"bench", "--bits-min", "1"}).code, 2);
  EXPECT_EQ(run({"bench", "--algo", "stein"}).code, 1);
}
