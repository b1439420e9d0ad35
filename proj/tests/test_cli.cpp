#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

// Runs the tool with stderr discarded; returns its exit code and stdout.
Outcome polyenum(const std::string& args) {
  const std::string cmd = std::string(POLYENUM_BIN) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("polyenum_cli_" + name + "_" + std::to_string(::getpid()))).string();
}

// Value of row n in csv output with a header line.
std::string csv_cell(const std::string& csv, int n, int column = 1) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> f;
    while (std::getline(ls, field, ',')) f.push_back(field);
    if (!f.empty() && f[0] == std::to_string(n)) return f.at(static_cast<std::size_t>(column));
  }
  return "";
}

}  // namespace

TEST(Cli, CountMirrorClass) {
  Outcome r = polyenum("count --class m90 --n 20 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(csv_cell(r.out, 20), "106004");
  EXPECT_EQ(csv_cell(r.out, 4), "3");
}

TEST(Cli, CountCoreSplit) {
  Outcome r = polyenum("count --class r180m --split core --n 12 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(csv_cell(r.out, 12), "465");
}

TEST(Cli, CountFreeViaBurnside) {
  Outcome r = polyenum("count --class free --n 1 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(csv_cell(r.out, 1), "1");
}

TEST(Cli, TableText) {
  Outcome r = polyenum("table --n 10");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("4655"), std::string::npos);
  EXPECT_NE(r.out.find("9189"), std::string::npos);
  EXPECT_NE(r.out.find("# seconds:"), std::string::npos);
}

TEST(Cli, TableThreadsDoNotChangeOutput) {
  Outcome one = polyenum("table --n 12 --format csv --threads 1");
  Outcome three = polyenum("table --n 12 --format csv --threads 3 --split-depth 3");
  ASSERT_EQ(one.status, 0);
  ASSERT_EQ(three.status, 0);
  EXPECT_EQ(one.out, three.out);
}

TEST(Cli, TableCeilingNeedsForce) {
  EXPECT_EQ(polyenum("table --n 23").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(polyenum("count --class m91 --n 5").status, 2);
  EXPECT_EQ(polyenum("count --class m90").status, 2);
  EXPECT_EQ(polyenum("count --class m90 --n 0").status, 2);
  EXPECT_EQ(polyenum("count --class m45 --split core --n 5").status, 2);
  EXPECT_EQ(polyenum("count --class fixed --engine tm --n 5").status, 2);
  EXPECT_EQ(polyenum("oracle --n 13").status, 2);
  EXPECT_EQ(polyenum("bogus").status, 2);
}

TEST(Cli, MemoryBudgetExit) {
  EXPECT_EQ(polyenum("count --class m45 --n 30 --memory-budget 65536").status, 3);
}

TEST(Cli, JsonValuesAreDecimalStrings) {
  Outcome r = polyenum("count --class m45 --n 30 --format json");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  const auto& last = j["entries"].back();
  EXPECT_EQ(last["n"], 30);
  ASSERT_TRUE(last["value"].is_string());
  EXPECT_EQ(last["value"].get<std::string>(), "25703792");
  EXPECT_EQ(j["engine"], "transfer-matrix");
}

TEST(Cli, VerifyAgainstShippedReference) {
  Outcome r = polyenum(std::string("verify --n 12 --format csv --reference ") + REFERENCE_CSV);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("free,12,63600,63600"), std::string::npos);
  EXPECT_EQ(r.out.find("mismatch"), std::string::npos);
}

TEST(Cli, VerifyDetectsWrongReference) {
  const std::string path = temp_path("bad_ref");
  {
    std::ofstream out(path);
    out << "kind,n,value,source\nm90,9,87,tampered\nm45,9,54,ok\n";
  }
  Outcome r = polyenum("verify --n 9 --format csv --reference " + path);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("m90,9,86,87,tampered,mismatch"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyIoErrors) {
  EXPECT_EQ(polyenum("verify --n 5 --reference /nonexistent/ref.csv").status, 4);
  const std::string path = temp_path("malformed_ref");
  {
    std::ofstream out(path);
    out << "not,a,reference\n";
  }
  EXPECT_EQ(polyenum("verify --n 5 --reference " + path).status, 4);
  std::filesystem::remove(path);
}

TEST(Cli, OracleSubcommand) {
  Outcome r = polyenum("oracle --n 6 --class r180m --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(csv_cell(r.out, 6), "10");
  Outcome all = polyenum("oracle --n 4 --format csv");
  ASSERT_EQ(all.status, 0);
  EXPECT_EQ(csv_cell(all.out, 4, 1), "19");
}

TEST(Cli, EnginesAgree) {
  Outcome tm = polyenum("count --class m90 --n 14 --engine tm --format csv");
  Outcome growth = polyenum("count --class m90 --n 14 --engine growth --format csv");
  ASSERT_EQ(tm.status, 0);
  ASSERT_EQ(growth.status, 0);
  for (int n = 1; n <= 14; ++n) EXPECT_EQ(csv_cell(tm.out, n), csv_cell(growth.out, n)) << n;
}

TEST(Cli, CheckpointResume) {
  const std::string path = temp_path("ckpt");
  std::filesystem::remove(path);
  const std::string args = "count --class fixed --n 12 --threads 2 --split-depth 3 --format csv --checkpoint " + path;
  Outcome first = polyenum(args);
  ASSERT_EQ(first.status, 0);
  EXPECT_EQ(csv_cell(first.out, 12), "505861");
  Outcome again = polyenum(args);
  ASSERT_EQ(again.status, 0);
  EXPECT_EQ(csv_cell(again.out, 12), "505861");
  // Different settings must not reuse the file.
  EXPECT_EQ(polyenum("count --class fixed --n 11 --checkpoint " + path).status, 4);
  std::filesystem::remove(path);
}
