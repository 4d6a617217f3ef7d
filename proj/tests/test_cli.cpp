#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "framex/records.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FRAMEX_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, ApproximateWritesOneRecord) {
  const auto r = run("approximate --function runge1 --gamma 1.2 --epsilon 1e-14 --n 10 --eta 4 --grid 2000 --cond-grid 200");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  const auto doc = framex::parse_csv(in);
  ASSERT_EQ(doc.records.size(), 1u);
  EXPECT_EQ(doc.records[0].m, 40);
  EXPECT_EQ(doc.records[0].flag, "ok");
  EXPECT_LT(doc.records[0].error_inf, 1e-3);
}

TEST(Cli, ApproximateModesAreExclusive) {
  EXPECT_EQ(run("approximate --function runge1 --gamma 1.2 --epsilon 1e-14 --n 10 --eta 4 --m 30").code, 2);
  EXPECT_EQ(run("approximate --function runge1 --gamma 1.2 --epsilon 1e-14 --n 10 --m 30 --grid 500 --cond-grid 50").code,
            0);
  EXPECT_EQ(run("approximate --function runge1 --gamma 1.2 --epsilon 1e-8 --n 2 --scaling paper --grid 500 --cond-grid 50")
                .code,
            0);
}

TEST(Cli, InvalidArgumentsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("approximate --function nope --gamma 1.2 --epsilon 1e-14 --n 10 --eta 4").code, 2);
  EXPECT_EQ(run("approximate --function runge1 --gamma 0.5 --epsilon 1e-14 --n 10 --eta 4").code, 2);
  EXPECT_EQ(run("condition --gamma 1.2 --epsilon 0 --n 5 --m 0").code, 2);
  EXPECT_EQ(run("extremal bmn --m 20 --n 3").code, 2);
  EXPECT_EQ(run("markov-check --n 10 --k 8 --delta 0.5 --trials 10").code, 2);
  EXPECT_EQ(run("sweep --function runge1 --gamma 1.2 --epsilon 1e-14 --eta 2 --n-range 5:x").code, 2);
  EXPECT_EQ(run("figure fig9 --out-dir " + temp_path("framex_cli_fig9").string()).code, 2);
}

TEST(Cli, NumericalFailureExitsThree) {
  const auto path = temp_path("framex_cli_overflow.txt");
  std::ofstream(path) << "1.7e308\n1.7e308\n1.7e308\n1.7e308\n";
  EXPECT_EQ(run("approximate --samples " + path.string() + " --gamma 1 --epsilon 0 --n 1").code, 3);
  std::filesystem::remove(path);
}

TEST(Cli, TabulatedSamplesGiveCoefficients) {
  // Samples of psi_1 on [-1.5, 1.5] at 5 nodes reproduce coefficient e_1.
  const auto path = temp_path("framex_cli_samples.txt");
  {
    std::ofstream out(path);
    const double gamma = 1.5;
    for (int i = 0; i <= 4; ++i) {
      const double x = -1.0 + 0.5 * i;
      out.precision(17);
      out << std::sqrt(1.5) * (x / gamma) / std::sqrt(gamma) << ",0\n";
    }
  }
  const auto r = run("approximate --samples " + path.string() + " --gamma 1.5 --epsilon 0 --n 2");
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<double> re;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.starts_with("index")) continue;
    std::istringstream fields(line);
    std::string idx, a, b;
    std::getline(fields, idx, ',');
    std::getline(fields, a, ',');
    re.push_back(std::stod(a));
  }
  ASSERT_EQ(re.size(), 3u);
  EXPECT_NEAR(re[0], 0.0, 1e-13);
  EXPECT_NEAR(re[1], 1.0, 1e-13);
  EXPECT_NEAR(re[2], 0.0, 1e-13);
}

TEST(Cli, SweepIsByteDeterministic) {
  const std::string args =
      "sweep --function fig2_f1 --gamma 1.4 --epsilon 1e-10 --eta 2 --n-range 4:20:4 --grid 2000 --cond-grid 200";
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  const auto doc = framex::parse_csv(in);
  EXPECT_EQ(doc.records.size(), 5u);
  bool has_theta = false;
  for (const auto& [k, v] : doc.metadata) has_theta |= k == "theta";
  EXPECT_TRUE(has_theta);
}

TEST(Cli, SweepToFile) {
  const auto path = temp_path("framex_cli_sweep.csv");
  const auto r = run("sweep --function osc --omega 2 --gamma 1.25 --epsilon 1e-12 --eta 4 --n-range 5:15:5 --grid 1000 "
                     "--cond-grid 100 --out " + path.string());
  ASSERT_EQ(r.code, 0);
  const auto doc = framex::read_csv(path);
  std::filesystem::remove(path);
  EXPECT_EQ(doc.records.size(), 3u);
  EXPECT_EQ(doc.records[0].function, "osc");
}

TEST(Cli, Condition) {
  const auto r = run("condition --gamma 1 --epsilon 0 --n 2 --m 2 --grid 2001");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, values;
  std::getline(in, header);
  std::getline(in, values);
  EXPECT_EQ(header, "cond_2,cond_inf");
  // Interpolation at three equispaced nodes: Lebesgue constant 5/4.
  EXPECT_NEAR(std::stod(values.substr(values.find(',') + 1)), 1.25, 1e-6);
}

TEST(Cli, Extremal) {
  const auto b = run("extremal bmn --m 2 --n 2");
  ASSERT_EQ(b.code, 0);
  EXPECT_TRUE(b.out.starts_with("value,1.25"));
  const auto c = run("extremal cmn --m 6 --n 3 --gamma 1.5 --epsilon 1e-3 --restarts 2");
  ASSERT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("witness_coeffs,"), std::string::npos);
}

TEST(Cli, MarkovCheck) {
  const auto r = run("markov-check --n 20 --k 3 --delta 0.5 --trials 200");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("trials,200"), std::string::npos);
  EXPECT_NE(r.out.find("markov_violations,0"), std::string::npos);
}

TEST(Cli, FigureWritesFiles) {
  const auto dir = temp_path("framex_cli_fig1");
  std::filesystem::remove_all(dir);
  const auto r = run("figure fig1 --out-dir " + dir.string() + " --grid 1000 --cond-grid 100 --n-max 10");
  ASSERT_EQ(r.code, 0);
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".csv";
  EXPECT_EQ(files, 9);
  std::filesystem::remove_all(dir);
}
