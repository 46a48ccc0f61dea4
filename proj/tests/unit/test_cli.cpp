#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rispla/cli/csv.hpp"
#include "rispla/cli/experiment.hpp"

using namespace rispla;
using namespace rispla::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kTable1 = RISPLA_SOURCE_DIR "/scenarios/table1.cfg";

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "rispla_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

int run_quiet(const ExperimentSpec& spec) {
  std::ostringstream log;
  return run(spec, log);
}

ExperimentSpec sweep(Command c, const std::string& out) {
  ExperimentSpec s;
  s.command = c;
  s.scenario_path = kTable1;
  s.lq_grid_db = {60, 80};
  s.target_pfa = 0.05;
  s.n_trials = 20'000;
  s.output_path = scratch(out);
  s.grid_points = 500;
  return s;
}

}  // namespace

TEST(Csv, FormatNumberRoundTrips) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1e-300), "1e-300");
  EXPECT_EQ(format_number(std::nullopt), "");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "");
  for (double v : {1.0 / 3.0, 2.0 / 7.0 * 1e-9, 123456.789}) EXPECT_EQ(std::stod(format_number(v)), v);
}

TEST(Csv, Headers) {
  EXPECT_EQ(sweep_csv({}), std::string(kSweepHeader) + "\n");
  EXPECT_EQ(roc_csv({}), "epsilon,pfa,pd\n");
  EXPECT_EQ(trace_csv({{1.0, 0.5, 0.25}}), "coordinate,value,pmd\n1,0.5,0.25\n");
}

TEST(Grid, Parse) {
  EXPECT_EQ(parse_grid("0:2:6"), (std::vector<double>{0, 2, 4, 6}));
  EXPECT_EQ(parse_grid("1, 5,9"), (std::vector<double>{1, 5, 9}));
  EXPECT_EQ(default_lq_grid().size(), 21u);
  EXPECT_THROW(parse_grid("0:0:5"), UsageError);
  EXPECT_THROW(parse_grid("a,b"), UsageError);
  EXPECT_THROW(parse_grid("1:2"), UsageError);
}

TEST(Outputs, BothBaselinesSplitFiles) {
  const auto t = output_targets("out/x.csv", Baseline::Both);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].second, fs::path("out/x.ris.csv"));
  EXPECT_EQ(t[1].second, fs::path("out/x.noris.csv"));
  EXPECT_EQ(output_targets("y.csv", Baseline::NoRis)[0].first, mc::Link::Direct);
}

TEST(Run, SweepHeadersExact) {
  auto pfa = sweep(Command::SweepPfa, "pfa.csv");
  ASSERT_EQ(run_quiet(pfa), kSuccess);
  EXPECT_EQ(first_line(pfa.output_path), kSweepHeader);
  auto pmd = sweep(Command::SweepPmd, "pmd.csv");
  ASSERT_EQ(run_quiet(pmd), kSuccess);
  EXPECT_EQ(first_line(pmd.output_path), kSweepHeader);
}

TEST(Run, RocAndTraceHeadersExact) {
  ExperimentSpec roc;
  roc.command = Command::Roc;
  roc.scenario_path = kTable1;
  roc.n_trials = 10'000;
  roc.grid_points = 500;
  roc.output_path = scratch("roc.csv");
  ASSERT_EQ(run_quiet(roc), kSuccess);
  EXPECT_EQ(first_line(roc.output_path), kRocHeader);

  ExperimentSpec g = roc;
  g.command = Command::OptimizeGradient;
  g.target_pfa = 0.01;
  g.output_path = scratch("grad.csv");
  ASSERT_EQ(run_quiet(g), kSuccess);
  EXPECT_EQ(first_line(g.output_path), kTraceHeader);
  EXPECT_TRUE(fs::exists(scratch("grad.summary.csv")));
}

TEST(Run, ByteIdenticalAcrossWorkerCounts) {
  for (Command c : {Command::SweepPfa, Command::SweepPmd}) {
    auto a = sweep(c, "det_a.csv");
    a.workers = 1;
    auto b = sweep(c, "det_b.csv");
    b.workers = 3;
    ASSERT_EQ(run_quiet(a), kSuccess);
    ASSERT_EQ(run_quiet(b), kSuccess);
    EXPECT_EQ(slurp(a.output_path), slurp(b.output_path));
  }
}

TEST(Run, ExitCodes) {
  auto s = sweep(Command::SweepPfa, "codes.csv");
  s.scenario_path = "/nonexistent/scenario.cfg";
  EXPECT_EQ(run_quiet(s), kUsageError);

  s = sweep(Command::SweepPfa, "codes.csv");
  s.epsilon = 0.1;
  EXPECT_EQ(run_quiet(s), kUsageError);  // both epsilon and target

  s = sweep(Command::SweepPmd, "codes.csv");
  s.feature = mc::Feature::CirPhase;
  EXPECT_EQ(run_quiet(s), kUsageError);  // no closed-form phase threshold

  ExperimentSpec p;
  p.command = Command::OptimizePhases;
  p.scenario_path = kTable1;
  p.epsilon = 1.0;
  p.strategy = optim::Strategy::Exhaustive;
  p.output_path = scratch("phases.csv");
  EXPECT_EQ(run_quiet(p), kRuntimeError);  // 16^256 candidates

  s = sweep(Command::SweepPfa, "");
  s.output_path.clear();
  EXPECT_EQ(run_quiet(s), kUsageError);
}
