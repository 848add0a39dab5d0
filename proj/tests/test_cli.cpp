#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  out << bytes;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("interlock_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliRun run(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd = std::string("\"") + INTERLOCK_CLI_PATH + "\" " + args + " >\"" +
                            out.string() + "\" 2>\"" + err.string() + "\"";
    CliRun r;
    const int raw = std::system(cmd.c_str());
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path dir_;
};

const char* kK5 =
    "*Vertices 5\n1 \"a\"\n2 \"b\"\n3 \"c\"\n4 \"d\"\n5 \"e\"\n*Edges\n"
    "1 2 1\n1 3 1\n1 4 1\n1 5 1\n2 3 1\n2 4 1\n2 5 1\n3 4 1\n3 5 1\n4 5 1\n";

}  // namespace

TEST_F(Cli, ProjectTwoJournalsOneEditor) {
  spit(path("boards.csv"), "editor,journal\nAda,Kyklos\nAda,Public Choice\n");
  const auto r = run("project --input " + path("boards.csv").string() + " --out " +
                     path("out").string());
  ASSERT_EQ(r.status, 0) << r.err;
  const auto summary = slurp(path("out/summary.csv"));
  EXPECT_NE(summary.find("\n2,1,2,1.0000,2.0000,1,1.0000,"), std::string::npos) << summary;
  EXPECT_EQ(slurp(path("out/network.net")),
            "*Vertices 2\n1 \"Kyklos\"\n2 \"Public Choice\"\n*Edges\n1 2 1\n");
  EXPECT_TRUE(fs::exists(path("out/degree_distribution.csv")));
  EXPECT_TRUE(fs::exists(path("out/line_values.csv")));
}

TEST_F(Cli, ProjectRerunsAreByteIdentical) {
  ASSERT_EQ(run("generate --kind affiliation --editors 120 --journals 30 --probability 0.08 "
                "--seed 3 --out " + dir_.string()).status, 0);
  const auto input = path("random_affiliation.csv").string();
  ASSERT_EQ(run("project --input " + input + " --out " + path("a").string()).status, 0);
  ASSERT_EQ(run("project --input " + input + " --out " + path("b").string()).status, 0);
  for (const char* f : {"network.net", "summary.csv", "degree_distribution.csv", "line_values.csv"}) {
    EXPECT_EQ(slurp(path("a") / f), slurp(path("b") / f)) << f;
  }
}

TEST_F(Cli, AnalyzeK5) {
  spit(path("k5.net"), kK5);
  const auto r = run("analyze --input " + path("k5.net").string() + " --out " + dir_.string());
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(slurp(path("centralization.csv")),
            "degree_centralization,closeness_centralization,betweenness_centralization,"
            "closeness_subnetwork_size\n0.0000,0.0000,0.0000,5\n");
  const auto table = slurp(path("centrality.csv"));
  EXPECT_NE(table.find("a,4,1.000,1,1.000,1,0.000,1\n"), std::string::npos) << table;
  EXPECT_TRUE(fs::exists(path("concordance.json")));
}

TEST_F(Cli, AnalyzeP3) {
  spit(path("p3.net"), "*Vertices 3\n1 \"a\"\n2 \"b\"\n3 \"c\"\n*Edges\n1 2\n2 3\n");
  ASSERT_EQ(run("analyze --input " + path("p3.net").string() + " --out " + dir_.string()).status, 0);
  EXPECT_NE(slurp(path("centrality.csv")).find("b,2,1.000,1,1.000,1,100.000,1\n"),
            std::string::npos);
}

TEST_F(Cli, AnalyzeDegenerateNetworkFails) {
  spit(path("k2.net"), "*Vertices 2\n1 \"a\"\n2 \"b\"\n*Edges\n1 2\n");
  const auto r = run("analyze --input " + path("k2.net").string() + " --out " + dir_.string());
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("DegenerateNetwork"), std::string::npos) << r.err;
}

TEST_F(Cli, ParseErrorReportsLine) {
  spit(path("bad.net"), "*Vertices 2\n1 \"a\"\n2 \"b\"\n*Edges\n1 9 1\n");
  const auto r = run("analyze --input " + path("bad.net").string() + " --out " + dir_.string());
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("line 5"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("bad.net"), std::string::npos) << r.err;
}

TEST_F(Cli, MissingInputFails) {
  const auto r = run("analyze --input " + path("nope.net").string() + " --out " + dir_.string());
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("nope.net"), std::string::npos);
}

TEST_F(Cli, SlicesTriangle) {
  spit(path("t.net"), "*Vertices 3\n1 \"a\"\n2 \"b\"\n3 \"c\"\n*Edges\n1 2 1\n2 3 2\n1 3 3\n");
  const auto r = run("slices --input " + path("t.net").string() + " --m 1,2,3 --out " +
                     dir_.string());
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(slurp(path("slices.csv")),
            "m,components,journals,isolated,giant,components_total\n"
            "1,1,3,0,3,1\n"
            "2,1,3,0,3,1\n"
            "3,1,2,1,2,2\n");
  EXPECT_EQ(slurp(path("slice_m3.clu")), "*Vertices 3\n1\n2\n1\n");
  EXPECT_NE(slurp(path("components_m3.txt")).find("line \"a\" \"c\" 3\n"), std::string::npos);
}

TEST_F(Cli, SliceOneMatchesComponentCensus) {
  ASSERT_EQ(run("generate --vertices 60 --probability 0.04 --seed 8 --out " + dir_.string()).status, 0);
  const auto net = path("random.net").string();
  ASSERT_EQ(run("slices --input " + net + " --m 1 --out " + dir_.string()).status, 0);
  ASSERT_EQ(run("components --input " + net + " --out " + dir_.string()).status, 0);
  EXPECT_EQ(slurp(path("slices.csv")), slurp(path("census.csv")));
  EXPECT_EQ(slurp(path("slice_m1.clu")), slurp(path("components.clu")));
}

TEST_F(Cli, ThresholdsMustIncrease) {
  spit(path("k5.net"), kK5);
  const auto r = run("slices --input " + path("k5.net").string() + " --m 3,2 --out " +
                     dir_.string());
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("strictly increasing"), std::string::npos) << r.err;
}

TEST_F(Cli, WorkersDoNotChangeBytes) {
  ASSERT_EQ(run("generate --vertices 400 --probability 0.01 --seed 4 --out " + dir_.string()).status, 0);
  const auto net = path("random.net").string();
  ASSERT_EQ(run("analyze --input " + net + " --workers 1 --out " + path("w1").string()).status, 0);
  ASSERT_EQ(run("analyze --input " + net + " --workers 5 --out " + path("w5").string()).status, 0);
  for (const char* f : {"centrality.csv", "centralization.csv", "concordance.json"}) {
    EXPECT_EQ(slurp(path("w1") / f), slurp(path("w5") / f)) << f;
  }
}

TEST_F(Cli, ConvertRoundTrip) {
  const std::string csv = "editor,journal\nAda,Kyklos\nAda,\"Economics, Politics\"\nBram,Kyklos\n";
  spit(path("boards.csv"), csv);
  ASSERT_EQ(run("convert --input " + path("boards.csv").string() + " --out " + path("net").string()).status, 0);
  ASSERT_EQ(run("convert --input " + path("net/affiliation.net").string() + " --out " +
                path("csv").string()).status, 0);
  EXPECT_EQ(slurp(path("csv/affiliation.csv")),
            "editor,journal\nAda,\"Economics, Politics\"\nAda,Kyklos\nBram,Kyklos\n");
}

TEST_F(Cli, ConcordFromCentralityTable) {
  spit(path("g4.net"), "*Vertices 4\n1 \"a\"\n2 \"b\"\n3 \"c\"\n4 \"d\"\n*Edges\n1 2\n2 3\n3 4\n1 3\n");
  ASSERT_EQ(run("analyze --input " + path("g4.net").string() + " --out " + dir_.string()).status, 0);
  const auto r = run("concord --input " + path("centrality.csv").string() + " --out " +
                     path("c").string());
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(slurp(path("c/concordance.json")).find("\"kendall_w\""), std::string::npos);
}

TEST_F(Cli, JsonReportsAreAdditional) {
  spit(path("k5.net"), kK5);
  ASSERT_EQ(run("analyze --input " + path("k5.net").string() + " --report csv,json --out " +
                dir_.string()).status, 0);
  EXPECT_TRUE(fs::exists(path("centralization.csv")));
  EXPECT_TRUE(fs::exists(path("centralization.json")));
}

TEST_F(Cli, ValidateFixtures) {
  const auto r = run(std::string("validate --input ") + INTERLOCK_FIXTURE_DIR);
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  kendall_w"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST_F(Cli, ValidateNamesMissingFixture) {
  const auto r = run("validate --input " + dir_.string());
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("table_a1.csv"), std::string::npos) << r.err;
}

TEST_F(Cli, ValidateFailsOnCorruptedFixture) {
  fs::copy(INTERLOCK_FIXTURE_DIR, path("fx"), fs::copy_options::recursive);
  std::string a1 = slurp(path("fx/table_a1.csv"));
  const auto at = a1.find("Pacific Economic Review,124,");
  ASSERT_NE(at, std::string::npos);
  a1.replace(at, std::string("Pacific Economic Review,124,").size(), "Pacific Economic Review,125,");
  spit(path("fx/table_a1.csv"), a1);
  const auto r = run("validate --input " + path("fx").string());
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}
