#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const char* bin = std::getenv("GRIESS_TRACE_BIN");
  if (!bin) throw std::runtime_error("GRIESS_TRACE_BIN is not set");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int st = ::pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, CasimirMoonshine) {
  auto r = run("casimir --n 4 --c 24 --d 196884");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "8319·[4] + 2542·[2,2]\n");
  auto j = nlohmann::json::parse(run("casimir --n 6 --c 24 --d 196884 --format json").out);
  EXPECT_EQ(j["terms"][2]["coeff"], "1271/2");
}

TEST(Cli, CdTables) {
  auto proper = run("cd-table --which proper-s6 --format csv");
  EXPECT_EQ(proper.status, 0);
  EXPECT_EQ(count_lines(proper.out), 21);  // header plus 20 rows
  auto j = nlohmann::json::parse(run("cd-table --which ising-sixteenth --format json").out);
  EXPECT_EQ(j["rows"].size(), 9u);
  EXPECT_EQ(j["rows"][3]["d"], "196884");
  EXPECT_EQ(j["rows"][3]["d(1/16)"], "96256");
  EXPECT_TRUE(j["complete"]);
  auto partial = nlohmann::json::parse(run("cd-table --which proper-s6 --limit 2000 --format json").out);
  EXPECT_FALSE(partial["complete"]);
}

TEST(Cli, Spectrum) {
  auto r = run("spectrum --subvoa ising");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("d(1/2) = 4371"), std::string::npos);
  EXPECT_NE(r.out.find("trace 4372 (2A)"), std::string::npos);
  auto w4 = nlohmann::json::parse(run("spectrum --subvoa w4 --format json").out);
  EXPECT_EQ(w4["class"], "4A");
  EXPECT_EQ(w4["square_class"], "2B");
}

TEST(Cli, CommonSolutionsCommand) {
  auto j = nlohmann::json::parse(run("theorem2 --format json").out);
  ASSERT_EQ(j["solutions"].size(), 2u);
  EXPECT_EQ(j["solutions"][1]["c"], "24");
  EXPECT_EQ(j["solutions"][1]["d"], "196884");
}

TEST(Cli, SeriesCommands) {
  auto j = nlohmann::json::parse(run("mckay-thompson --order 5 --format json").out);
  auto& t = j["T_2A"]["terms"];
  EXPECT_EQ(t[0]["exponent"], "-1");
  EXPECT_EQ(t[1]["exponent"], "1");
  EXPECT_EQ(t[1]["coeff"], "4372");
  auto e = run("eisenstein --weight 4 --order 3");
  EXPECT_EQ(e.out, "(1/720)q^0 + (1/3)q^1 + (3)q^2 + O(q^3)\n");
  auto tf = nlohmann::json::parse(run("trace-function --m 2 --order 4 --format json").out);
  EXPECT_EQ(tf["series"]["terms"][0]["coeff"], "5891/4");
}

TEST(Cli, OrderFromEnvironment) {
  auto a = run("moonshine-character");
  ::setenv("GRIESS_TRACE_ORDER", "5", 1);
  auto b = run("moonshine-character");
  ::setenv("GRIESS_TRACE_ORDER", "many", 1);
  auto c = run("moonshine-character");
  ::unsetenv("GRIESS_TRACE_ORDER");
  EXPECT_NE(a.out.find("O(q^12)"), std::string::npos);
  EXPECT_EQ(b.out, "(1)q^0 + (196884)q^2 + (21493760)q^3 + (864299970)q^4 + O(q^5)\n");
  EXPECT_EQ(c.status, 2);
}

TEST(Cli, ValidatorExitStatus) {
  EXPECT_EQ(run("trace-formula --m 5 --validate").status, 0);
  EXPECT_EQ(run("trace-formula --m 5 --validate --layer verbatim").status, 1);
  EXPECT_EQ(run("derive --m 2").status, 0);
}

TEST(Cli, RejectsBadInput) {
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("casimir --n 4 --c 2/x --d 1").status, 2);
  EXPECT_EQ(run("casimir --n 4 --c 24").status, 2);
  EXPECT_EQ(run("cd-table --which proper-s6 --limit 100").status, 2);
  EXPECT_EQ(run("cd-table --which table-one").status, 2);
  EXPECT_EQ(run("spectrum --subvoa e8").status, 2);
  EXPECT_EQ(run("trace-function --m 2 --c -22/5").status, 2);
}

TEST(Cli, DeterministicOutput) {
  for (auto args : {"trace-formula --m 5 --format json", "spectrum --subvoa ising2 --format json"})
    EXPECT_EQ(run(args).out, run(args).out) << args;
}

// The exit status agrees with the manifest; each criterion appears once.
TEST(Cli, ReproduceAllManifest) {
  auto r = run("reproduce-all --format json");
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["criteria"].size(), 8u);
  bool all = j["all_passed"];
  EXPECT_EQ(r.status, all ? 0 : 1);
  for (auto& c : j["checks"]) EXPECT_FALSE(c["id"].get<std::string>().empty());
  auto one = nlohmann::json::parse(run("reproduce-all --criterion 1 --format json").out);
  EXPECT_TRUE(one["all_passed"]);
  EXPECT_EQ(one["criteria"].size(), 1u);
}
