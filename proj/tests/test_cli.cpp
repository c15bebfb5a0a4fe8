#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcass/cli/commands.hpp"

using namespace lcass;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const char* caps = nullptr, const std::string& stdin_text = "") {
  args.insert(args.begin(), "lcass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  Outcome o;
  o.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, in, caps);
  o.out = out.str();
  o.err = err.str();
  return o;
}

// Minimal RFC 4180 reader, written independently of the writer.
std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      row.push_back(field);
      field.clear();
      rows.push_back(row);
      row.clear();
      ++i;
    } else {
      field += c;
    }
  }
  EXPECT_TRUE(field.empty() && row.empty()) << "CSV must end with CRLF";
  return rows;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"ass", "--d", "4"}).code, 0);
  EXPECT_EQ(invoke({"ass", "--d", "2"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"ass", "--d", "4", "--method", "nope"}).code, 2);
  EXPECT_EQ(invoke({"ass", "--d", "4", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"ass", "--d", "7", "--method", "groebner"}).code, 3);
  EXPECT_EQ(invoke({"ass", "--d", "13", "--method", "snf"}).code, 3);
  EXPECT_EQ(invoke({"ass", "--d", "13", "--method", "closed"}).code, 0);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"pi", "0"}).code, 2);
  EXPECT_EQ(invoke({"pi", "5..3"}).code, 2);
  EXPECT_EQ(invoke({"det", "--k", "0", "--i", "1", "--s", "1"}).code, 2);
  EXPECT_EQ(invoke({"matrix", "--which", "T"}).code, 2);
  EXPECT_EQ(invoke({"matrix", "--which", "W", "--d", "3"}).code, 2);
}

TEST(Cli, CapsFromEnvironment) {
  EXPECT_EQ(invoke({"ass", "--d", "7", "--method", "groebner"}, "groebner=7").code, 0);
  EXPECT_EQ(invoke({"ass", "--d", "5", "--method", "snf"}, "snf=4").code, 3);
  EXPECT_EQ(invoke({"ass", "--d", "5"}, "bogus=1").code, 2);
  EXPECT_EQ(invoke({"ass", "--d", "5"}, "snf").code, 2);
  const auto caps = cli::parse_caps("snf=20,groebner=3");
  EXPECT_EQ(caps.snf, 20);
  EXPECT_EQ(caps.groebner, 3);
  EXPECT_EQ(cli::parse_caps(nullptr).snf, 12);
}

TEST(Cli, RangesParse) {
  EXPECT_EQ(cli::parse_range("5").lo, 5);
  EXPECT_TRUE(cli::parse_range("5").single());
  const auto r = cli::parse_range("3..8");
  EXPECT_EQ(r.lo, 3);
  EXPECT_EQ(r.hi, 8);
  EXPECT_THROW(cli::parse_range("3..x"), cli::UsageError);
  EXPECT_THROW(cli::parse_range(""), cli::UsageError);
}

TEST(Cli, AssJsonSingleAndRange) {
  const auto one = invoke({"ass", "--d", "4", "--method", "all"});
  ASSERT_EQ(one.code, 0) << one.err;
  const auto j = nlohmann::json::parse(one.out);
  EXPECT_EQ(j["d"], 4);
  EXPECT_EQ(j["closed_form"], nlohmann::json::array({2}));
  EXPECT_EQ(j["graded_snf"], nlohmann::json::array({2}));
  EXPECT_EQ(j["groebner_crosscheck"], true);
  EXPECT_EQ(j["agreement"], true);
  EXPECT_EQ(j["base_ideal"], "(X,Y,Z)");
  ASSERT_EQ(j["pieces"].size(), 1u);
  EXPECT_EQ(j["pieces"][0]["degree"], nlohmann::json::array({2, 2}));

  const auto many = invoke({"ass", "--d", "3..9", "--method", "snf"});
  ASSERT_EQ(many.code, 0) << many.err;
  const auto arr = nlohmann::json::parse(many.out);
  ASSERT_TRUE(arr.is_array());
  ASSERT_EQ(arr.size(), 7u);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto d = static_cast<std::int64_t>(i) + 3;
    EXPECT_EQ(arr[i]["d"], d);
    const auto pi = singh::pi_set(d - 2);
    std::vector<Prime> want(pi.begin(), pi.end());
    EXPECT_EQ(arr[i]["graded_snf"].get<std::vector<Prime>>(), want);
  }
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"ass", "--d", "3..8", "--method", "snf"},
                                                                {"ass", "--d", "5", "--format", "csv"},
                                                                {"pi", "1..20", "--format", "text"},
                                                                {"matrix", "--which", "H", "--d", "5"}}) {
    const auto a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, JobsKeepOrder) {
  const auto serial = invoke({"ass", "--d", "3..10", "--method", "snf"});
  const auto parallel = invoke({"ass", "--d", "3..10", "--method", "snf", "--jobs", "4"});
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_EQ(invoke({"ass", "--d", "3..4", "--jobs", "0"}).code, 2);
}

TEST(Cli, AssCsvRoundTrip) {
  const auto o = invoke({"ass", "--d", "3..7", "--method", "all", "--format", "csv"}, "groebner=7");
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rows = read_csv(o.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"d", "closed_form", "graded_snf", "groebner_crosscheck", "agreement",
                                               "base_ideal"}));
  EXPECT_EQ(rows[1][1], "{}");
  EXPECT_EQ(rows[5][0], "7");
  EXPECT_EQ(rows[5][1], "{2,5}");
  EXPECT_EQ(rows[5][2], "{2,5}");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][3], "true");
    EXPECT_EQ(rows[i][4], "true");
    EXPECT_EQ(rows[i][5], "(X,Y,Z)");
  }
}

TEST(Cli, CsvQuoting) {
  EXPECT_EQ(cli::csv_field("{2,3}"), "\"{2,3}\"");
  EXPECT_EQ(cli::csv_field("a\"b"), "\"a\"\"b\"");
  EXPECT_EQ(cli::csv_field("plain"), "plain");
  const std::vector<std::string> fields{"x,y", "q\"t", "", "line\nbreak", "ok"};
  const auto rows = read_csv(cli::csv_row(fields));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], fields);
}

TEST(Cli, PiRange) {
  const auto o = invoke({"pi", "1..10", "--format", "csv"});
  ASSERT_EQ(o.code, 0);
  const auto rows = read_csv(o.out);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"1", "{}", "0"}));
  EXPECT_EQ(rows[4], (std::vector<std::string>{"4", "{2,3}", "2"}));
  const auto j = nlohmann::json::parse(invoke({"pi", "1..10"}).out);
  EXPECT_EQ(j.size(), 10u);
  EXPECT_EQ(j[5]["primes"], nlohmann::json::array({2, 3, 5}));
}

TEST(Cli, Det) {
  const auto t = invoke({"det", "--k", "2", "--i", "1", "--s", "2", "--format", "text"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "3, 3, match\n");
  const auto j = nlohmann::json::parse(invoke({"det", "--k", "5", "--i", "3", "--s", "4"}).out);
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(j["formula"], j["direct"]);
}

TEST(Cli, MatrixDumps) {
  EXPECT_EQ(invoke({"matrix", "--which", "T", "--d", "3", "--format", "text"}).out, "[Z Y X]\n");
  const auto j = nlohmann::json::parse(invoke({"matrix", "--which", "T", "--d", "5"}).out);
  EXPECT_EQ(j["rows"], 6);
  EXPECT_EQ(j["cols"], 10);
  EXPECT_EQ(matrix_from_json<Integer>(j), singh::build_T<Integer>(5));
  const auto q = nlohmann::json::parse(invoke({"matrix", "--which", "Qtilde", "--r", "1", "--k", "4"}).out);
  EXPECT_EQ(int_matrix_from_json(q), (IntMatrix{{1, 4, 6, 4, 1}}));
  const auto a = nlohmann::json::parse(invoke({"matrix", "--which", "A", "--n", "2"}).out);
  EXPECT_EQ(matrix_from_json<Integer>(a), build_A<Integer>(2));
  const auto tp = nlohmann::json::parse(invoke({"matrix", "--which", "Tprime", "--d", "4"}).out);
  EXPECT_EQ(tp["rows"], 3);
}

TEST(Cli, GroebnerFromFileAndStdin) {
  const std::string input = R"({"rows":2,"cols":3,"entries":[["Z","Y","0"],["0","Z","Y"]]})";
  const auto path = temp_file("lcass_cli_gb_input.json", input);
  const auto from_file = invoke({"groebner", "--input", path.string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  const auto from_stdin = invoke({"groebner", "--input", "-"}, nullptr, input);
  ASSERT_EQ(from_stdin.code, 0) << from_stdin.err;
  EXPECT_EQ(from_file.out, from_stdin.out);
  const auto j = nlohmann::json::parse(from_file.out);
  EXPECT_EQ(j["domain"], "Z");
  const auto basis = matrix_from_json<Integer>(j["basis"]);
  EXPECT_EQ(basis, PolyMatrix<Integer>::from_rows({{PolyZ::Z(), PolyZ::Y(), 0, 0},
                                                   {0, PolyZ::Z(), PolyZ::Y(), PolyZ::Z(2)}}));
  std::filesystem::remove(path);
}

TEST(Cli, GroebnerDomainsAndErrors) {
  const std::string input = R"({"rows":1,"cols":2,"entries":[["6"],["4*X"]]})";
  const std::string ideal = R"({"rows":1,"cols":2,"entries":[["6","4*X"]]})";
  const auto z = nlohmann::json::parse(invoke({"groebner", "--input", "-"}, nullptr, ideal).out);
  EXPECT_EQ(z["size"], 2);
  const auto q = nlohmann::json::parse(invoke({"groebner", "--input", "-", "--domain", "q"}, nullptr, ideal).out);
  EXPECT_EQ(q["size"], 1);
  EXPECT_EQ(q["basis"]["entries"][0][0], "1");
  EXPECT_EQ(invoke({"groebner", "--input", "-"}, nullptr, input).code, 2);
  EXPECT_EQ(invoke({"groebner", "--input", "-"}, nullptr, "not json").code, 2);
  EXPECT_EQ(invoke({"groebner", "--input", "-", "--ambient", "Z[Y,Z]"}, nullptr, ideal).code, 2);
  EXPECT_EQ(invoke({"groebner", "--input", "-", "--domain", "z", "--ambient", "QQ[X,Y,Z]"}, nullptr, ideal).code, 2);
  EXPECT_EQ(invoke({"groebner", "--input", "/nonexistent/lcass.json"}).code, 2);
  EXPECT_EQ(invoke({"groebner", "--input", "-"}, nullptr, R"({"rows":1,"cols":1,"entries":[["1/2*Y"]]})").code, 2);
  const std::string yz = R"({"rows":1,"cols":2,"entries":[["Y","Z"]]})";
  EXPECT_EQ(invoke({"groebner", "--input", "-", "--ambient", "ZZ[Y,Z]"}, nullptr, yz).code, 0);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "lcass_cli_out.txt";
  const auto o = invoke({"pi", "4", "--format", "text", "-o", path.string()});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "4  {2,3}  2\n");
  std::filesystem::remove(path);
}

TEST(Cli, VerboseTimingGoesToStderr) {
  const auto o = invoke({"pi", "4", "-v"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.err.find("elapsed"), std::string::npos);
  EXPECT_TRUE(nlohmann::json::accept(o.out));
}

TEST(Cli, AssText) {
  const auto o = invoke({"ass", "--d", "6", "--method", "closed", "--format", "text"});
  EXPECT_EQ(o.out, "d=6  Ass = {(X,Y,Z), (2,X,Y,Z), (3,X,Y,Z)}  closed={2,3}  agreement=true\n");
}
