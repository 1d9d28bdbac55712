#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = psbent::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("psbent_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_F(CliTest, QfVerifyKantor) {
  const Result r = run({"qf", "verify", "--family", "kantor", "--m", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"pass\": true"));
  EXPECT_TRUE(contains(r.out, "\"mismatches\": 0"));
}

TEST_F(CliTest, QfVerifyRejectsEvenDegree) {
  const Result r = run({"qf", "verify", "--family", "knuth", "--m", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "--m"));
}

TEST_F(CliTest, QfVerifyDempwolffMullerReportsRightDistributivity) {
  const Result r = run({"qf", "verify", "--family", "dm", "--m", "5", "--k", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"right_distributive\": false"));
  EXPECT_TRUE(contains(r.out, "\"prequasifield\": true"));
}

TEST_F(CliTest, MalformedFlagsExitTwo) {
  Result r = run({"qf", "verify", "--family", "kantor", "--m", "abc"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "--m"));
  r = run({"qf", "verify", "--family", "semifield", "--m", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "--family"));
  r = run({"qf", "verify", "--family", "dm", "--m", "5", "--k", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "--k"));
  r = run({"qf", "verify", "--family", "field", "--m", "3", "--beta", "1"});
  EXPECT_EQ(r.code, 2);
  r = run({"qf", "verify", "--family", "knuth", "--m", "3", "--beta", "zz"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "--beta"));
  r = run({"--modulus", "f", "qf", "verify", "--family", "field", "--m", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "--modulus"));
}

TEST_F(CliTest, UnknownCommandPrintsUsage) {
  Result r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "Usage"));
  r = run({});
  EXPECT_EQ(r.code, 2);
  r = run({"qf"});
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, HelpAndVersion) {
  Result r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "psbent 0.1.0"));
  r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "bent"));
}

TEST_F(CliTest, QfDivide) {
  for (const std::string method : {"formula", "oracle"}) {
    const Result r = run({"qf", "divide", "--family", "dm", "--m", "3", "--k", "1", "--x", "1", "--y", "2", "--method", method});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "\"result\": \"7\"")) << r.out;
  }
  const Result zero = run({"qf", "divide", "--family", "kantor", "--m", "5", "--x", "0", "--y", "1b"});
  EXPECT_TRUE(contains(zero.out, "\"result\": \"0\""));
  EXPECT_EQ(run({"qf", "divide", "--family", "kantor", "--m", "3", "--x", "9", "--y", "1"}).code, 2);
  EXPECT_EQ(run({"qf", "divide", "--family", "kantor", "--m", "3", "--x", "1", "--y", "1", "--method", "guess"}).code, 2);
}

TEST_F(CliTest, SpreadVerifyWithDump) {
  const std::string dump = path("spread.txt");
  const Result r = run({"spread", "verify", "--family", "knuth", "--m", "3", "--beta", "5", "--dump", dump});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"pass\": true"));
  std::ifstream in(dump);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines.back(), "inf: 0,8,10,18,20,28,30,38");
}

TEST_F(CliTest, PolyCommands) {
  Result r = run({"poly", "dickson-inv", "--m", "3", "--k", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"k_inverse\": 38"));
  r = run({"poly", "dickson-inv", "--m", "5", "--k", "7"});
  EXPECT_TRUE(contains(r.out, "\"k_inverse\": 877"));
  EXPECT_EQ(run({"poly", "dickson-inv", "--m", "3", "--k", "3"}).code, 2);

  r = run({"poly", "invert-linearized", "--m", "3", "--coeffs", "0,1,0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"inverse\": [\n    \"0\",\n    \"0\",\n    \"1\"\n  ]")) << r.out;
  r = run({"poly", "invert-linearized", "--m", "3", "--coeffs", "1,1,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "\"bijective\": false"));
  r = run({"poly", "invert-linearized", "--m", "3", "--coeffs", "1,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "--coeffs"));
}

TEST_F(CliTest, BuildThenVerify) {
  const std::string tt = path("f.tt");
  Result r = run({"bent", "build", "--family", "dm", "--m", "5", "--k", "3", "--g", "random:42", "--out", tt});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"bent\": true"));
  EXPECT_TRUE(contains(r.out, "\"weight\": 496"));

  std::ifstream in(tt);
  std::string header, body;
  std::getline(in, header);
  std::getline(in, body);
  EXPECT_EQ(header.rfind("# m=5 family=dm params=k=3", 0), 0u) << header;
  EXPECT_EQ(body.size(), 256u);

  r = run({"bent", "verify", "--tt", tt});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"bent\": true"));
  EXPECT_TRUE(contains(r.out, "\"-32\": 496"));

  r = run({"bent", "spectrum", "--tt", tt, "--summary"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"32\": 528"));
  EXPECT_TRUE(contains(r.out, "\"parseval\": true"));

  r = run({"bent", "anf", "--tt", tt});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"degree\": "));
}

TEST_F(CliTest, BuildPlusAndSupport) {
  const std::string tt = path("plus.tt");
  Result r = run({"bent", "build", "--family", "field", "--m", "3", "--g", "support:1,2,4,7", "--out", tt, "--plus"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"weight\": 36"));
  EXPECT_EQ(run({"bent", "verify", "--tt", tt}).code, 0);

  r = run({"bent", "build", "--family", "kantor", "--m", "5", "--g", "random:1", "--out", tt, "--no-certify"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"bent\": null"));
}

TEST_F(CliTest, BuildRejectsBadSelectors) {
  const std::string tt = path("bad.tt");
  EXPECT_EQ(run({"bent", "build", "--family", "field", "--m", "3", "--g", "support:1,2,3", "--out", tt}).code, 2);
  EXPECT_EQ(run({"bent", "build", "--family", "field", "--m", "3", "--g", "support:0,1,2,3", "--out", tt}).code, 2);
  EXPECT_EQ(run({"bent", "build", "--family", "field", "--m", "3", "--g", "random:x", "--out", tt}).code, 2);
  EXPECT_EQ(run({"bent", "build", "--family", "field", "--m", "3", "--g", "all", "--out", tt}).code, 2);
  EXPECT_EQ(run({"bent", "build", "--family", "field", "--m", "3", "--g", "random:1"}).code, 2);
  EXPECT_FALSE(fs::exists(tt));
}

TEST_F(CliTest, VerifyRejectsNonBentAndBadFiles) {
  const std::string tt = path("zero.tt");
  {
    std::ofstream out(tt);
    out << "0000\n";
  }
  Result r = run({"bent", "verify", "--tt", tt});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "\"bent\": false"));

  const std::string odd = path("odd.tt");
  {
    std::ofstream out(odd);
    out << "00000000\n";
  }
  EXPECT_EQ(run({"bent", "verify", "--tt", odd}).code, 2);
  EXPECT_EQ(run({"bent", "verify", "--tt", path("missing.tt")}).code, 2);

  const std::string junk = path("junk.tt");
  {
    std::ofstream out(junk);
    out << "xyz\n";
  }
  EXPECT_EQ(run({"bent", "anf", "--tt", junk}).code, 2);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  const std::vector<std::string> args{"bent", "build", "--family", "knuth", "--m", "5", "--beta", "3",
                                      "--g", "random:7", "--out", path("d.tt")};
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Result t = run({"--timings", "qf", "verify", "--family", "field", "--m", "3"});
  EXPECT_TRUE(contains(t.out, "timings_ms"));
  const Result after = run({"qf", "verify", "--family", "field", "--m", "3", "--timings"});
  EXPECT_TRUE(contains(after.out, "timings_ms"));
}

TEST_F(CliTest, GlobalModulusChangesTable) {
  const std::string a = path("a.tt"), b = path("b.tt");
  EXPECT_EQ(run({"bent", "build", "--family", "field", "--m", "3", "--g", "support:1,2,4,7", "--out", a}).code, 0);
  EXPECT_EQ(run({"--modulus", "d", "bent", "build", "--family", "field", "--m", "3", "--g", "support:1,2,4,7", "--out", b}).code, 0);
  std::ifstream ia(a), ib(b);
  std::stringstream sa, sb;
  sa << ia.rdbuf();
  sb << ib.rdbuf();
  EXPECT_NE(sa.str(), sb.str());
  EXPECT_TRUE(contains(sb.str(), "modulus=d"));
}
