#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = coverkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(CliExact, Snapshots) {
  EXPECT_EQ(run({"exact", "--model", "cyclic", "-n", "4", "-l", "2"}).out,
            "cyclic n=4 l=2, 11/3, 3.666666666666667, cyclic-formula\n");
  EXPECT_EQ(run({"exact", "--model", "arcs", "-a", "1/2"}).out, "arcs a=1/2, 5, 5.0, stevens\n");
  EXPECT_EQ(run({"exact", "--model", "windows", "-n", "3", "-l", "2"}).out, "windows n=3 l=2, 3, 3.0, windows-formula\n");
  EXPECT_EQ(run({"exact", "--model", "batch", "-n", "4", "-l", "2", "--format", "csv"}).out,
            "model,exact,decimal,engine\nbatch n=4 l=2,19/5,3.8,polya\n");
  EXPECT_EQ(run({"exact", "--model", "batch", "-n", "4", "-l", "2", "--format", "json-lines"}).out,
            "{\"model\":\"batch n=4 l=2\",\"exact\":\"19/5\",\"decimal\":\"3.8\",\"engine\":\"polya\"}\n");
  EXPECT_EQ(run({"exact", "--model", "hamming", "-d", "2", "-t", "0", "--format", "csv"}).out.find("25/3") !=
                std::string::npos,
            true);
}

TEST(CliExact, ModelFile) {
  const auto path = std::filesystem::temp_directory_path() / "coverkit_cli_model.txt";
  std::ofstream(path) << "n 3\n0 1\n1 2\n0 2\n";
  const auto r = run({"exact", "--model", "explicit", "--model-file", path.string(), "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(",5/2,2.5,"), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(CliExitCodes, Mapping) {
  EXPECT_EQ(run({"exact", "--model", "cyclic", "-n", "4", "-l", "2"}).code, 0);
  EXPECT_EQ(run({"exact", "--model", "torus", "--dims", "4,4", "--window", "2,2"}).code, 2);
  EXPECT_EQ(run({"exact", "--model", "windows", "-n", "3", "-l", "9"}).code, 2);
  EXPECT_EQ(run({"exact", "--model", "delta-d", "-n", "9", "-l", "4", "-d", "2"}).code, 2);
  EXPECT_EQ(run({"exact", "--model", "nosuch", "-n", "3", "-l", "1"}).code, 2);
  EXPECT_EQ(run({"exact", "--model", "arcs", "-a", "abc"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"exact", "--model", "hamming", "-d", "25", "-t", "0"}).code, 3);
  EXPECT_EQ(run({"exact", "--model", "explicit", "--model-file", "/nonexistent/model.txt"}).code, 2);
  const auto err = run({"exact", "--model", "windows", "-n", "3", "-l", "9"}).err;
  EXPECT_NE(err.find("1 <= l <= n"), std::string::npos) << err;
}

TEST(CliTableCsv, SameContent) {
  const std::vector<std::string> base = {"bounds", "--model", "windows", "-n", "10", "-l", "3"};
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  const auto table = lines(run(base).out);
  const auto csv = lines(run(csv_args).out);
  ASSERT_EQ(table.size(), csv.size());
  for (std::size_t i = 0; i < csv.size(); ++i) {
    std::istringstream cells(csv[i]);
    for (std::string cell; std::getline(cells, cell, ',');) {
      EXPECT_NE(table[i].find(cell), std::string::npos) << cell;
    }
  }
  EXPECT_EQ(csv[0], "quantity,exact,decimal");
  EXPECT_EQ(csv[1], "exact,38/3,12.66666666666667");
}

TEST(CliBounds, AllFamilies) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bounds", "--model", "cyclic", "-n", "12", "-l", "3"},
           {"bounds", "--model", "delta-d", "-n", "12", "-l", "4", "-d", "2"},
           {"bounds", "--model", "batch", "-n", "8", "-l", "3"},
           {"bounds", "--model", "arcs", "-a", "1/10"},
           {"bounds", "--model", "demand", "-n", "6", "-l", "2", "--demand", "1", "--e-single", "147/10"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[2] << r.err;
    EXPECT_FALSE(r.out.empty());
  }
  EXPECT_NE(run({"bounds", "--model", "cyclic", "-n", "12", "-l", "3", "--format", "csv"}).out.find("dominance_gap,"),
            std::string::npos);
}

TEST(CliSimulate, DeterministicAcrossThreads) {
  const std::vector<std::string> base = {"simulate", "--model", "cyclic", "-n", "10", "-l", "3",
                                         "--trials", "3000", "--seed", "3", "--format", "csv"};
  auto a = base;
  a.insert(a.end(), {"--threads", "1"});
  auto b = base;
  b.insert(b.end(), {"--threads", "4"});
  const auto ra = run(a);
  EXPECT_EQ(ra.code, 0);
  EXPECT_EQ(ra.out, run(b).out);
  ::setenv("COVERKIT_THREADS", "3", 1);
  EXPECT_EQ(ra.out, run(base).out);
  ::unsetenv("COVERKIT_THREADS");
  EXPECT_EQ(lines(ra.out)[0], "model,trials,seed,mean,variance,ci99_halfwidth");
  EXPECT_EQ(lines(ra.out)[1].rfind("cyclic n=10 l=3,3000,3,", 0), 0u);
}

TEST(CliSimulate, PerTrialFile) {
  const auto path = std::filesystem::temp_directory_path() / "coverkit_cli_trials.csv";
  const auto r = run({"simulate", "--model", "windows", "-n", "6", "-l", "2", "--trials", "10", "--per-trial",
                      path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "trial,seed_stream,time");
  int rows = 0;
  for (std::string l; std::getline(in, l);) ++rows;
  EXPECT_EQ(rows, 10);
  std::filesystem::remove(path);
}

TEST(CliCouple, ZeroViolations) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"couple", "--model", "cyclic", "-n", "10", "-l", "3", "--trials", "2000", "--format", "csv"},
           {"couple", "--model", "delta-d", "-n", "12", "-l", "4", "-d", "2", "--trials", "2000", "--format", "csv"},
           {"couple", "--model", "torus", "--dims", "8,8", "--window", "4,4", "-d", "2,4", "--trials", "500",
            "--format", "csv"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "coupling,trials,seed,mean_first,mean_second,mean_gap,violations");
    EXPECT_EQ(rows[1].substr(rows[1].rfind(',') + 1), "0");
  }
}

TEST(CliSweep, WindowsGrid) {
  const auto r = run({"sweep", "--model", "windows", "-n", "4..4", "-l", "2..2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "n,l,e_exact,linear_term,cc_term,lower,upper");
  EXPECT_EQ(rows[1].rfind("4,2,9/2,", 0), 0u);
  const auto full = lines(run({"sweep", "--model", "cyclic", "-n", "3..5", "--format", "csv"}).out);
  EXPECT_EQ(full.size(), 1u + 3 + 4 + 5);
  EXPECT_NE(full[0].find("dominance"), std::string::npos);
  EXPECT_EQ(lines(run({"sweep", "--model", "windows", "-n", "5..4", "--format", "csv"}).out).size(), 1u);
}

TEST(CliConjectures, Output) {
  const auto r = run({"conjectures", "-n", "4", "-l", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "12,1,3/1,upper:ok|monotone:ok|batch-max:ok|lower:ok");
  EXPECT_EQ(rows[6], "63,3,19/5,upper:ok|monotone:ok|batch-max:ok|lower:ok");
  const auto table = run({"conjectures", "-n", "4", "-l", "2"}).out;
  EXPECT_EQ(table.rfind("models: 7\n", 0), 0u);
  EXPECT_EQ(run({"conjectures", "-n", "9", "-l", "3"}).code, 3);
}
