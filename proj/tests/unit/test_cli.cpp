#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using gossamer::cli::kExitFailure;
using gossamer::cli::kExitPass;
using gossamer::cli::kExitUsage;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "gossamer");
  std::ostringstream out;
  std::ostringstream err;
  const int code = gossamer::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("gossamer-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
                                               ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, RiemannHeadline) {
  const Outcome o = run({"riemann", "--poly", "x^2"});
  EXPECT_EQ(o.code, kExitPass);
  EXPECT_EQ(first_line(o.out), "sum = 1/3 + 1/2*w^-1 + 1/6*w^-2; st = 1/3");
}

TEST(Cli, RiemannJsonAndNu) {
  const Outcome o = run({"riemann", "--poly", "x", "--nu-exp", "2", "--json"});
  ASSERT_EQ(o.code, kExitPass);
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["sum"], "1/2 + 1/2*w^-2");
  EXPECT_EQ(doc["st"], "1/2");
  EXPECT_EQ(run({"riemann", "--poly", "x", "--nu-exp", "-1"}).code, kExitUsage);
}

TEST(Cli, PipelineJson) {
  const Outcome o = run({"pipeline", "--poly", "x^2"});
  ASSERT_EQ(o.code, kExitPass);
  const auto doc = nlohmann::json::parse(o.out);
  ASSERT_EQ(doc.size(), 4u);
  EXPECT_EQ(doc[0]["stage"], "definite");
  EXPECT_EQ(doc[0]["value"], "1/3");
  EXPECT_EQ(doc[3]["value"], "1/3 + 1/2*w^-1 + 1/6*w^-2");
  EXPECT_TRUE(doc[2].contains("expression"));
}

TEST(Cli, SumJson) {
  Outcome o = run({"sum", "--term", "k", "--from", "3", "--to", "10", "--json"});
  ASSERT_EQ(o.code, kExitPass);
  auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["value"], "52");
  EXPECT_EQ(doc["oracle"], "52");
  EXPECT_EQ(doc["match"], true);
  EXPECT_EQ(doc["closed_form"], "1/2*n^2 + 1/2*n");

  o = run({"sum", "--term", "k^2", "--from", "3", "--to", "10"});
  EXPECT_EQ(o.code, kExitPass);
  EXPECT_NE(o.out.find("= 380"), std::string::npos);

  o = run({"sum", "--term", "k", "--from", "1", "--to", "w", "--json"});
  ASSERT_EQ(o.code, kExitPass);
  doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["value"], "1/2*w^2 + 1/2*w");
  EXPECT_TRUE(doc["oracle"].is_null());

  EXPECT_EQ(run({"sum", "--term", "k", "--from", "10", "--to", "3"}).code, kExitUsage);
}

TEST(Cli, FtcDemo) {
  const Outcome o = run({"ftc", "--poly", "x^2", "--at", "2", "--json"});
  ASSERT_EQ(o.code, kExitPass);
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["difference_quotient"], "4 + 2*w^-1 + 1/3*w^-2");
  EXPECT_EQ(doc["recovered"], "4");
  EXPECT_EQ(doc["ftc_inverse"], true);
  EXPECT_EQ(run({"ftc", "--poly", "x", "--h-exp", "1"}).code, kExitUsage);
}

TEST(Cli, DivergentDemo) {
  const Outcome o = run({"divergent", "--power", "2", "--json"});
  ASSERT_EQ(o.code, kExitPass);
  EXPECT_EQ(nlohmann::json::parse(o.out)["value"], "1/3*w^3");
}

TEST(Cli, SmoothHeaviside) {
  TempDir dir;
  const fs::path in = dir.file("heavyside.json", R"({"breakpoints": ["0"], "levels": ["0", "1"]})");
  const Outcome o = run({"smooth", "--input", in.string(), "--shape", "linear", "--eps-exp", "-1"});
  EXPECT_EQ(o.code, kExitPass);
  EXPECT_EQ(first_line(o.out), "area_delta = 0, budget = w^-1");
}

TEST(Cli, SmoothCsv) {
  TempDir dir;
  const fs::path in = dir.file("f.json", R"({"breakpoints": ["1/2", "3"], "levels": ["0", "1", "3"]})");
  const fs::path csv = dir.path() / "out.csv";
  const Outcome o = run({"smooth", "--input", in.string(), "--shape", "cubic", "--eps-exp", "-2", "--emit-csv",
                         csv.string(), "--samples", "51"});
  ASSERT_EQ(o.code, kExitPass);
  std::ifstream file(csv);
  std::string header;
  std::getline(file, header);
  EXPECT_NE(header.find("stand-in width"), std::string::npos);
  EXPECT_NE(header.find("w^-2"), std::string::npos);
  std::string line;
  int rows = 0;
  std::getline(file, line);
  EXPECT_EQ(line, "x,y");
  while (std::getline(file, line)) ++rows;
  EXPECT_EQ(rows, 51);

  const fs::path csv2 = dir.path() / "logistic.csv";
  EXPECT_EQ(run({"smooth", "--input", in.string(), "--shape", "logistic", "--emit-csv", csv2.string()}).code, kExitPass);
  EXPECT_TRUE(fs::exists(csv2));
}

TEST(Cli, SmoothErrors) {
  TempDir dir;
  const fs::path in = dir.file("f.json", R"({"breakpoints": ["0"], "levels": ["0", "1"]})");
  EXPECT_EQ(run({"smooth", "--input", in.string(), "--eps-exp", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"smooth", "--input", in.string(), "--shape", "wobbly"}).code, kExitUsage);
  EXPECT_EQ(run({"smooth", "--input", (dir.path() / "missing.json").string()}).code, kExitUsage);
  const fs::path bad = dir.file("bad.json", R"({"breakpoints": ["0"], "levels": ["0", )");
  const Outcome o = run({"smooth", "--input", bad.string()});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("position"), std::string::npos);
}

TEST(Cli, Verify) {
  Outcome o = run({"verify", "--suite", "all", "--seed", "0", "--cases", "10"});
  EXPECT_EQ(o.code, kExitPass);
  o = run({"verify", "--suite", "riemann", "--seed", "42", "--cases", "100", "--json"});
  ASSERT_EQ(o.code, kExitPass);
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["cases"].size(), 100u);
  EXPECT_EQ(doc["summary"]["failed"], 0);
}

TEST(Cli, VerifyIsByteDeterministic) {
  const std::vector<std::string> args{"verify", "--suite", "all", "--seed", "17", "--cases", "8", "--json"};
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_NE(run(args).out, run({"verify", "--suite", "all", "--seed", "18", "--cases", "8", "--json"}).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
  EXPECT_EQ(run({"riemann"}).code, kExitUsage);
  EXPECT_EQ(run({"riemann", "--poly", "x^", "--seed", "1"}).code, kExitUsage);
  const Outcome o = run({"riemann", "--poly", "x^^2"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("position 2"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}
