#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>

#include "framex/errors.hpp"
#include "framex/records.hpp"

using namespace framex;

namespace {

SweepRecord sample_record(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SweepRecord r;
  r.function = u(rng) < 0.5 ? "runge1" : "fig2_f3";
  r.n = static_cast<int>(u(rng) * 200);
  r.m = r.n * 4;
  r.gamma = 1 + u(rng);
  r.epsilon = std::pow(10.0, -16 * u(rng));
  r.eta = 4.0;
  r.error_inf = u(rng) * 1e-7;
  r.error_l2 = r.error_inf / 3;
  r.cond_2 = 1 + u(rng) * 1e3;
  r.cond_inf = 1 / 3.0 + u(rng);
  return r;
}

}  // namespace

TEST(Csv, HeaderOnlyForNoRecords) {
  std::ostringstream out;
  write_csv(out, {});
  EXPECT_EQ(out.str(), std::string(kCsvHeader) + "\n");
  std::istringstream in(out.str());
  const auto doc = parse_csv(in);
  EXPECT_TRUE(doc.records.empty());
  EXPECT_TRUE(doc.metadata.empty());
}

TEST(Csv, HeaderColumns) {
  EXPECT_STREQ(kCsvHeader, "function,n,m,gamma,epsilon,eta,error_inf,error_l2,cond_2,cond_inf,flag");
}

TEST(Csv, SeventeenDigitsRoundTripExactly) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-300, 300);
  for (int i = 0; i < 10000; ++i) {
    const double v = std::pow(10.0, u(rng)) * (i % 2 ? -1 : 1);
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  }
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
}

TEST(Csv, RoundTripThroughFile) {
  std::mt19937_64 rng(19);
  std::vector<SweepRecord> rs;
  for (int i = 0; i < 200; ++i) rs.push_back(sample_record(rng));
  rs[3].flag = "numerical_failure";
  rs[3].error_inf = std::numeric_limits<double>::quiet_NaN();
  rs[4].flag = "unsatisfiable";

  const auto path = std::filesystem::temp_directory_path() / "framex_records_roundtrip.csv";
  const CsvMetadata meta{{"figure", "fig1"}, {"theta", format_double(std::sqrt(2.0) + 1)}};
  emit_csv(rs, path, meta);
  auto doc = read_csv(path);
  std::filesystem::remove(path);

  EXPECT_EQ(doc.metadata, meta);
  auto expected = rs;
  sort_records(expected);
  ASSERT_EQ(doc.records.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i].flag == "numerical_failure") {
      EXPECT_TRUE(std::isnan(doc.records[i].error_inf));
      expected[i].error_inf = doc.records[i].error_inf = 0.0;
    }
    EXPECT_EQ(doc.records[i], expected[i]) << "row " << i;
  }
}

TEST(Csv, RowsSortedByFunctionGammaEpsilonN) {
  std::mt19937_64 rng(23);
  std::vector<SweepRecord> rs;
  for (int i = 0; i < 100; ++i) rs.push_back(sample_record(rng));
  std::ostringstream out;
  write_csv(out, rs);
  std::istringstream in(out.str());
  const auto doc = parse_csv(in);
  for (std::size_t i = 1; i < doc.records.size(); ++i) {
    const auto& a = doc.records[i - 1];
    const auto& b = doc.records[i];
    EXPECT_LE(std::tie(a.function, a.gamma, a.epsilon, a.n), std::tie(b.function, b.gamma, b.epsilon, b.n));
  }
}

TEST(Csv, WritingIsByteDeterministic) {
  std::mt19937_64 rng(29);
  std::vector<SweepRecord> rs;
  for (int i = 0; i < 50; ++i) rs.push_back(sample_record(rng));
  std::ostringstream a, b;
  write_csv(a, rs, {{"k", "v"}});
  std::reverse(rs.begin(), rs.end());
  write_csv(b, rs, {{"k", "v"}});
  EXPECT_EQ(a.str(), b.str());
}

TEST(Csv, MalformedInputIsRejected) {
  std::istringstream no_header("runge1,1,2,1,1,1,1,1,1,1,ok\n");
  EXPECT_THROW(parse_csv(no_header), InvalidArgument);
  std::istringstream short_row(std::string(kCsvHeader) + "\nrunge1,1,2\n");
  EXPECT_THROW(parse_csv(short_row), InvalidArgument);
  std::istringstream bad_number(std::string(kCsvHeader) + "\nrunge1,1,2,x,1,1,1,1,1,1,ok\n");
  EXPECT_THROW(parse_csv(bad_number), InvalidArgument);
  std::istringstream empty("");
  EXPECT_THROW(parse_csv(empty), InvalidArgument);
}

TEST(Csv, IoErrorsNameThePath) {
  const std::filesystem::path missing = "/nonexistent_dir_framex/out.csv";
  try {
    emit_csv({}, missing);
    FAIL() << "expected a throw";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find(missing.string()), std::string::npos);
  }
  try {
    read_csv(missing);
    FAIL() << "expected a throw";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find(missing.string()), std::string::npos);
  }
  const auto bad = std::filesystem::temp_directory_path() / "framex_bad.csv";
  std::ofstream(bad) << "not,a,header\n";
  try {
    read_csv(bad);
    FAIL() << "expected a throw";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find(bad.string()), std::string::npos);
  }
  std::filesystem::remove(bad);
}
