#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spherelevels_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                  ->current_test_info()
                                                  ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(SPHERELEVELS_CLI) + " " + args + " > " +
                            (dir_ / "stdout.txt").string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

using Row = std::vector<std::string>;

std::vector<Row> csv_rows(const std::string& text) {
  std::vector<Row> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    Row row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      row.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(row);
  }
  return rows;
}

const char* kCoordinate = R"({"dimension": 2, "normals": [[1,0,0],[0,1,0],[0,0,1]]})";

}  // namespace

TEST_F(Cli, GenDeterministic) {
  ASSERT_EQ(run("gen --d 2 --n 20 --seed 7 --out " + path("a.json")), 0);
  ASSERT_EQ(run("gen --d 2 --n 20 --seed 7 --out " + path("b.json")), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  EXPECT_NE(read("a.json").find("\"dimension\": 2"), std::string::npos);
  ASSERT_EQ(run("gen --d 3 --n 5 --out " + path("c.json")), 0);
}

TEST_F(Cli, GenBuildRejectsSingleCircle) {
  EXPECT_EQ(run("gen --d 2 --n 1 --build --out " + path("one.json")), 2);
  EXPECT_NE(read("stderr.txt").find("BuildError"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("gen --d 2"), 2);
  EXPECT_EQ(run("cliques --mode square"), 2);
  EXPECT_EQ(run("stats --in " + path("missing.json")), 2);
  EXPECT_EQ(run("gen --help"), 0);
}

TEST_F(Cli, StatsCoordinate) {
  write("coord.json", kCoordinate);
  ASSERT_EQ(run("stats --in " + path("coord.json") + " --out " + path("")), 0);
  EXPECT_EQ(read("expected.csv"),
            "k,expected,bound_4e(k+2)^2,margin\n"
            "0,3,43.4925092553,40.4925092553\n"
            "1,3,97.8581458245,94.8581458245\n"
            "2,0,173.970037021,173.970037021\n");
  const std::string levels = read("levels.csv");
  EXPECT_EQ(levels.rfind("cell_id,k,count\n0,0,3\n0,1,3\n0,2,0\n", 0), 0u);
}

TEST_F(Cli, StatsTwoCirclesWithPrefix) {
  write("two.json", R"({"dimension": 2, "normals": [[1,0,0],[0,1,0]]})");
  ASSERT_EQ(run("stats --in " + path("two.json") + " --out " + path("run_")), 0);
  const std::string e = read("run_expected.csv");
  EXPECT_NE(e.find("\n0,2,"), std::string::npos);
  EXPECT_NE(e.find("\n1,0,"), std::string::npos);
}

TEST_F(Cli, VerifyErrors) {
  write("empty.json", "");
  EXPECT_EQ(run("verify --in " + path("empty.json")), 2);
  EXPECT_NE(read("stderr.txt").find("ParseError"), std::string::npos);
  write("degenerate.json",
        R"({"dimension": 2, "normals": [[1,0,0],[0.99999999999999995,1e-8,0],[0,0,1]]})");
  EXPECT_EQ(run("verify --in " + path("degenerate.json")), 2);
  EXPECT_NE(read("stderr.txt").find("DegeneracyError"), std::string::npos);
}

TEST_F(Cli, VerifyCoordinateReportsBSetCounterexample) {
  // Every bound holds on the coordinate arrangement except |B| <= k.
  write("coord.json", kCoordinate);
  EXPECT_EQ(run("verify --in " + path("coord.json")), 1);
  const std::string out = read("stdout.txt");
  EXPECT_NE(out.find("FAIL |B_{C^s}(v)| <= k"), std::string::npos);
  EXPECT_NE(out.find("1 check(s) failed"), std::string::npos);
}

TEST_F(Cli, QkSpotValues) {
  ASSERT_EQ(run("qk --d 2 --n 2 --kmax 2 --out " + path("qk.csv")), 0);
  const auto rows = csv_rows(read("qk.csv"));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (Row{"k", "q_exact", "q_lower", "q_upper", "q_mc", "stderr"}));
  const double q0 = (1 - 4 / (M_PI * M_PI)) / 2;
  EXPECT_NEAR(std::stod(rows[1][1]), q0, 1e-10);
  EXPECT_EQ(rows[1][2], "0.157079632679");
  EXPECT_EQ(rows[1][3], "0.411233516712");
  EXPECT_EQ(rows[1][4], "");
  EXPECT_NEAR(std::stod(rows[2][1]), 4 / (M_PI * M_PI), 1e-10);
  EXPECT_EQ(rows[2][2], "0.209439510239");
  EXPECT_EQ(rows[2][3], "0.523598775598");
  EXPECT_NEAR(std::stod(rows[3][1]), q0, 1e-10);
  EXPECT_EQ(rows[3][2], "");
  EXPECT_EQ(rows[3][3], "");

  ASSERT_EQ(run("qk --d 2 --n 1 --out " + path("qk1.csv")), 0);
  const auto one = csv_rows(read("qk1.csv"));
  ASSERT_EQ(one.size(), 3u);
  EXPECT_NEAR(std::stod(one[1][1]), 0.5, 1e-10);
  EXPECT_NEAR(std::stod(one[2][1]), 0.5, 1e-10);
  EXPECT_EQ(one[1][2], "0.261799387799");
  EXPECT_EQ(one[1][3], "0.785398163397");
}

TEST_F(Cli, McLevelsThreeCircles) {
  ASSERT_EQ(run("mc-levels --d 2 --m 3 --samples 50 --kmax 2 --out " + path("l.csv")), 0);
  EXPECT_EQ(read("l.csv"),
            "k,mc_mean,mc_stderr,analytic,ratio_to_(k+1)^(d-1)\n"
            "0,3,0,3,3\n"
            "1,3,0,3,1.5\n"
            "2,0,0,0,0\n");
}

TEST_F(Cli, ThreadCountDoesNotChangeOutput) {
  const std::string common = " --seed 3 --chunks 16 --out ";
  ASSERT_EQ(run("mc-qk --d 2 --n 10 --samples 20000 --threads 1" + common + path("a.csv")), 0);
  ASSERT_EQ(run("mc-qk --d 2 --n 10 --samples 20000 --threads 8" + common + path("b.csv")), 0);
  EXPECT_EQ(read("a.csv"), read("b.csv"));
  ASSERT_EQ(run("mc-levels --d 3 --m 8 --samples 200 --threads 1" + common + path("c.csv")), 0);
  ASSERT_EQ(run("mc-levels --d 3 --m 8 --samples 200 --threads 8" + common + path("d.csv")), 0);
  EXPECT_EQ(read("c.csv"), read("d.csv"));
}

TEST_F(Cli, ZonesAndCliques) {
  ASSERT_EQ(run("gen --n 12 --seed 1 --out " + path("a.json")), 0);
  EXPECT_EQ(run("zones --in " + path("a.json") + " --out " + path("z.csv")), 0);
  EXPECT_EQ(read("z.csv").rfind("circle,j,both,strict_plus,strict_minus,bound_both,bound_strict\n", 0),
            0u);
  EXPECT_EQ(run("zones --in " + path("a.json") + " --circle 2 --side plus --j 3 --out " +
                path("z1.csv")),
            0);
  const std::string one = read("z1.csv");
  EXPECT_EQ(one.rfind("circle,j,strict_plus,bound_strict\n2,3,", 0), 0u);
  EXPECT_EQ(run("cliques --mode line --n 50 --trials 20 --out " + path("c.csv")), 0);
  EXPECT_EQ(run("cliques --mode circle --n 30 --trials 20"), 0);
  EXPECT_EQ(run("cliques --mode circle --n 3 --trials 1 --k 1"), 0);
}
