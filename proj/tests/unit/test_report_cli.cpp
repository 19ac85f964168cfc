#include <gtest/gtest.h>

#include <filesystem>
#include <optional>
#include <sstream>

#include "cli.hpp"
#include "permutope/graph_io.hpp"
#include "permutope/report.hpp"

using namespace permutope;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, std::optional<std::string> caps = std::nullopt) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, caps);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("permutope_test_" + name);
}

}  // namespace

TEST(Report, LoopClosedForm) {
  const FeasibleRegion region(3);
  const PatternVector target = PatternVector::from_vector(3, {1, 0, 0, 0, 0, 0});
  const auto plan = std::make_shared<const RealizationPlan>(plan_realization(region, target));
  ReportOptions options;
  options.consecutive_target = target;
  options.threads = 3;
  const auto report = convergence_report(plan_generator(plan), 3, {16, 1, 4, 2, 8}, options);
  ASSERT_EQ(report.rows.size(), 5u);
  EXPECT_TRUE(report.sizes_increasing());
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.size, row.m + 2);
    EXPECT_EQ(*row.linf_consecutive, Rational(2, static_cast<long long>(row.m + 2)));
    EXPECT_FALSE(row.linf_classical);
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    EXPECT_LT(*report.rows[i].linf_consecutive, *report.rows[i - 1].linf_consecutive);
  }
}

TEST(Report, ConstantGenerator) {
  const Generator constant = [](std::size_t) { return Permutation::parse("2413"); };
  const auto report = convergence_report(constant, 2, {1, 2, 3});
  EXPECT_FALSE(report.sizes_increasing());
  EXPECT_EQ(report.rows[0].consecutive, report.rows[2].consecutive);
  EXPECT_EQ(report.rows[0].classical, report.rows[1].classical);
}

TEST(Report, CsvRoundTrip) {
  const FeasibleRegion region(3);
  const auto plan = std::make_shared<const RealizationPlan>(plan_realization(region, PatternVector::uniform(3)));
  ReportOptions options;
  options.consecutive_target = PatternVector::uniform(3);
  options.classical_target = PatternVector::uniform(3);
  const auto report = convergence_report(plan_generator(plan), 3, {1, 3, 9}, options);
  const std::string csv = report.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "m,size,cocc_123,cocc_132,cocc_213,cocc_231,cocc_312,cocc_321,"
            "occ_123,occ_132,occ_213,occ_231,occ_312,occ_321,linf_consec,linf_class");
  const auto back = ConvergenceReport::from_csv(csv);
  EXPECT_EQ(back.k, 3u);
  EXPECT_EQ(back.rows, report.rows);
  EXPECT_EQ(back.to_csv(), csv);
  EXPECT_THROW(ConvergenceReport::from_csv("a,b\n"), ParseError);
}

TEST(Report, MixedGeneratorShrinks) {
  const FeasibleRegion region(3);
  const auto plan = std::make_shared<const RealizationPlan>(plan_realization(region, PatternVector::uniform(3)));
  const Generator a = plan_generator(plan);
  const Generator b = sum_witness(Permutation::parse("21"));
  const Generator c = [a, b](std::size_t m) { return mix(a, b, m); };
  ReportOptions options;
  options.consecutive_target = PatternVector::uniform(3);
  // The classical limit of the sum of 21 blocks is the identity pattern.
  options.classical_target = PatternVector::from_vector(3, {1, 0, 0, 0, 0, 0});
  const auto report = convergence_report(c, 3, {2, 8, 32}, options);
  EXPECT_TRUE(report.sizes_increasing());
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    EXPECT_LT(*report.rows[i].linf_consecutive, *report.rows[i - 1].linf_consecutive);
    EXPECT_LT(*report.rows[i].linf_classical, *report.rows[i - 1].linf_classical);
  }
}

TEST(Report, PowersOfTwo) {
  const auto ms = powers_of_two_schedule([](std::size_t m) { return BigInt(6 * m + 8); }, 100);
  EXPECT_EQ(ms, (std::vector<std::size_t>{1, 2, 4, 8}));
}

TEST(Cli, StatsMatchesWalkLabels) {
  const auto r = run_cli({"stats", "--perm", "628451793", "--k", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* label : {"3142", "1423", "4231", "2314", "2134", "1342"}) {
    EXPECT_NE(r.out.find(std::string(label) + " 1/9\n"), std::string::npos) << label;
  }
  std::size_t nonzero = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) nonzero += line.find(" 0/1") == std::string::npos;
  EXPECT_EQ(nonzero, 6u);
}

TEST(Cli, DimAndMember) {
  EXPECT_EQ(run_cli({"dim", "--k", "3"}).out, "4\n");
  EXPECT_EQ(run_cli({"dim", "--k", "4", "--by-rank"}).out, "18\n");
  const auto m = run_cli({"member", "--k", "3", "--vector", "uniform"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "true\n1/6 123\n1/3 132 213\n1/3 231 312\n1/6 321\n");
  const auto f = run_cli({"member", "--k", "3", "--vector", "0,1,0,0,0,0", "--float"});
  EXPECT_EQ(f.out.substr(0, 6), "false\n");
  EXPECT_EQ(run_cli({"decompose", "--k", "3", "--vector", "cycle:132,213"}).out, "1/1 132 213\n");
  EXPECT_EQ(run_cli({"decompose", "--k", "3", "--vector", "0,1,0,0,0,0"}).code, 1);
}

TEST(Cli, OverlapExports) {
  const auto dot_path = temp_path("ov4.dot");
  ASSERT_EQ(run_cli({"overlap", "--k", "4", "--dot", dot_path.string()}).code, 0);
  const std::string dot = read_text_file(dot_path);
  std::size_t nodes = 0, arrows = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("->") != std::string::npos) {
      ++arrows;
    } else if (line.find("[label=") != std::string::npos) {
      ++nodes;
    }
  }
  EXPECT_EQ(nodes, 6u);
  EXPECT_EQ(arrows, 24u);
  EXPECT_NE(dot.find("[label=\"3412\"]"), std::string::npos);

  const auto json = run_cli({"overlap", "--k", "2", "--json", "-"});
  const auto g = graph_from_json(json.out);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(graph_to_json(g), json.out);

  const auto graph_path = temp_path("ov3.json");
  ASSERT_EQ(run_cli({"overlap", "--k", "3", "--json", graph_path.string()}).code, 0);
  EXPECT_EQ(run_cli({"dim", "--graph", graph_path.string()}).out, "4\n");
  EXPECT_EQ(run_cli({"faces", "--graph", graph_path.string()}).out,
            run_cli({"faces", "--k", "3"}).out);
  std::filesystem::remove(dot_path);
  std::filesystem::remove(graph_path);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"vertices", "--k", "4", "--json"},
           {"realize", "--k", "3", "--vector", "uniform", "--m", "20"},
           {"report", "--k", "3", "--m", "1,2,5", "--threads", "2"},
           {"faces", "--k", "3", "--threads", "3"},
           {"universal", "--k", "4"}}) {
    const auto a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, ReportParsesBack) {
  const auto r = run_cli({"report", "--k", "3", "--vector", "uniform", "--max-size", "500"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = ConvergenceReport::from_csv(r.out);
  EXPECT_EQ(report.rows.size(), 7u);  // m = 1..64, sizes 6m + 8
  EXPECT_EQ(report.to_csv(), r.out);
}

TEST(Cli, RealizeAndMix) {
  const auto r = run_cli({"realize", "--k", "3", "--vector", "cycle:123", "--m", "10"});
  EXPECT_EQ(r.out, "size 12\nlinf_consec 1/6\nbound 5/12\nsigma 1,2,3,4,5,6,7,8,9,10,11,12\n");
  const auto mix = run_cli({"mix", "--k", "3", "--m", "7", "--witness", "sum:21", "--q", "25", "--no-perm"});
  ASSERT_EQ(mix.code, 0) << mix.err;
  EXPECT_NE(mix.out.find("bounds_hold true"), std::string::npos);
  EXPECT_EQ(run_cli({"mix", "--k", "3", "--witness", "sum:21"}).code, 2);
}

TEST(Cli, ErrorsAndCaps) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"nonsense"}).code, 2);
  EXPECT_EQ(run_cli({"dim", "--k", "3", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"stats", "--perm", "1123", "--k", "2"}).code, 1);
  EXPECT_EQ(run_cli({"universal", "--k", "8"}).code, 1);
  EXPECT_EQ(run_cli({"universal", "--k", "5"}, "4").code, 1);
  EXPECT_EQ(run_cli({"faces", "--k", "3"}, "faces=4").code, 1);
  EXPECT_EQ(run_cli({"dim", "--k", "3"}, "what=1").code, 2);
  EXPECT_EQ(run_cli({"dim", "--graph", "/nonexistent/g.json"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);

  const auto caps = cli::parse_caps("k=5,cycles=10,mix=20,classical=40,faces=8,size=99");
  EXPECT_EQ(caps.k, 5u);
  EXPECT_EQ(caps.cycles, 10u);
  EXPECT_EQ(caps.mix, 20u);
  EXPECT_EQ(caps.classical, 40u);
  EXPECT_EQ(caps.faces, 8u);
  EXPECT_EQ(caps.size, 99u);
  EXPECT_EQ(cli::parse_caps("6").k, 6u);
  EXPECT_THROW(cli::parse_caps("k=x"), std::invalid_argument);
}
