#include "modnum/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace modnum;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "modnum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run_cli(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

const Json& row_of(const Json& j, const std::string& table, std::size_t i = 0) {
  return j.at("result").at(table).at("rows").at(i);
}

/// Data lines of one CSV block, split into fields (no quoting in our output).
std::vector<std::vector<std::string>> csv_rows(const std::string& csv, const std::string& table) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(table + ",", 0) != 0) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    fields.erase(fields.begin());
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("construct with default parameters", "[cli]") {
  const auto j = run_json({"construct", "--delta", "4"});
  CHECK(j.at("format") == "moduli-numerics/1");
  CHECK(j.at("command") == "construct");
  const auto& cert = row_of(j, "certificate");
  CHECK(cert.at("c2") == "8");
  CHECK(cert.at("exp_dim") == "26");
  for (const char* k : {"cond_a", "cond_b", "cond_c", "cond_d", "cond_e", "cond_f", "cond_g",
                        "stable", "good"}) {
    CHECK(cert.at(k) == true);
  }
}

TEST_CASE("construct with explicit parameters", "[cli]") {
  const auto j = run_json({"construct", "--delta", "4", "--s", "2", "--sigma", "2"});
  CHECK(row_of(j, "certificate").at("stable") == false);
  CHECK(run_cli({"construct", "--delta", "4", "--s", "2"}).code == cli::kExitUsage);
}

TEST_CASE("intervals at 28", "[cli]") {
  const auto j = run_json({"intervals", "--delta", "28"});
  bool found = false;
  for (const auto& row : j.at("result").at("intervals").at("rows")) {
    if (row.at("label") != "two_component") continue;
    found = true;
    CHECK(row.at("lower") == "5096");
    CHECK(row.at("upper") == "5207");
    CHECK(row.at("lower_closed") == true);
    CHECK(row.at("upper_closed") == false);
    CHECK(row.at("empty") == false);
  }
  CHECK(found);
}

TEST_CASE("natural profile rows", "[cli]") {
  const auto j = run_json(
      {"natural", "--delta", "4", "--c2", "41", "--n-min", "-2", "--n-max", "6"});
  const auto& rows = j.at("result").at("profile").at("rows");
  REQUIRE(rows.size() == 9);
  for (const auto& r : rows) {
    int nonzero = 0;
    for (const char* k : {"h0", "h1", "h2"}) nonzero += r.at(k) != "0" ? 1 : 0;
    CHECK(nonzero == 1);
  }
}

TEST_CASE("thresholds table", "[cli]") {
  const auto j = run_json({"thresholds"});
  std::vector<std::int64_t> mins;
  for (const auto& r : j.at("result").at("thresholds").at("rows"))
    mins.push_back(r.at("min_delta").get<std::int64_t>());
  CHECK(mins == std::vector<std::int64_t>{28, 21, 16, 9, 21, 14, 14, 27});
}

TEST_CASE("curve and surface commands", "[cli]") {
  const auto c = run_json({"curve", "--s", "3"});
  CHECK(row_of(c, "curve").at("genus") == 3);
  CHECK(row_of(c, "curve").at("t_of_C") == "inf");
  const auto s = run_json({"surface", "--delta", "5", "--c2", "10"});
  CHECK(row_of(s, "surface").at("chi0") == "5");
  CHECK(row_of(s, "expected_dimension").at("exp_dim") == "25");
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
  CHECK(run_cli({"construct", "--delta", "4", "--nope"}).code == cli::kExitUsage);
  CHECK(run_cli({"construct"}).code == cli::kExitUsage);
  CHECK(run_cli({"construct", "--delta", "x"}).code == cli::kExitUsage);
  CHECK(run_cli({"surface", "--delta", "4", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run_cli({"natural", "--delta", "4", "--c2", "4x"}).code == cli::kExitUsage);
  CHECK(run_cli({"verify", "--prime", "100"}).code == cli::kExitUsage);

  const auto below = run_cli({"natural", "--delta", "4", "--c2", "40"});
  CHECK(below.code == cli::kExitPrecondition);
  CHECK(below.err.find("40") != std::string::npos);
  CHECK(run_cli({"construct", "--delta", "3"}).code == cli::kExitPrecondition);
  CHECK(run_cli({"curve", "--s", "0"}).code == cli::kExitPrecondition);

  CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("JSON output round-trips", "[cli][property]") {
  const std::vector<std::vector<std::string>> commands = {
      {"surface", "--delta", "6", "--c2", "12"},
      {"curve", "--s", "4"},
      {"construct", "--delta", "9"},
      {"intervals", "--delta", "31"},
      {"thresholds"},
      {"natural", "--delta", "5", "--c2", "200", "--n-min", "-4", "--n-max", "8"},
  };
  for (const auto& cmd : commands) {
    const auto j = run_json(cmd);
    const Report parsed = report_from_json(j);
    CHECK(to_json(parsed) == j);
    // Re-rendering the parsed report yields the same bytes.
    auto args = cmd;
    args.insert(args.end(), {"--format", "json"});
    CHECK(render(parsed, OutputFormat::json) == run_cli(args).out);
  }
}

TEST_CASE("text, json and csv carry identical numbers", "[cli][property]") {
  const std::vector<std::string> cmd = {"natural", "--delta", "4", "--c2", "41",
                                        "--n-min", "-6",      "--n-max", "10"};
  const auto j = run_json(cmd);
  auto csv_args = cmd;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  const auto csv = run_cli(csv_args);
  REQUIRE(csv.code == 0);
  const auto rows = csv_rows(csv.out, "profile");
  const auto& jrows = j.at("result").at("profile").at("rows");
  REQUIRE(rows.size() == jrows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i][0] == std::to_string(jrows[i].at("n").get<std::int64_t>()));
    CHECK(rows[i][1] == jrows[i].at("h0").get<std::string>());
    CHECK(rows[i][2] == jrows[i].at("h1").get<std::string>());
    CHECK(rows[i][3] == jrows[i].at("h2").get<std::string>());
    CHECK(rows[i][4] == jrows[i].at("chi").get<std::string>());
  }

  const auto text = run_cli(cmd);
  REQUIRE(text.code == 0);
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k) line += (k ? " " : "") + r[k];
    // Collapse the column padding of the text table before comparing.
    std::istringstream in(text.out);
    bool seen = false;
    std::string t;
    while (std::getline(in, t)) {
      std::istringstream ws(t);
      std::string word;
      std::string collapsed;
      while (ws >> word) collapsed += (collapsed.empty() ? "" : " ") + word;
      if (collapsed == line) seen = true;
    }
    CHECK(seen);
  }
}

TEST_CASE("--output writes the same bytes as stdout", "[cli]") {
  const auto path = std::filesystem::temp_directory_path() / "modnum_cli_output_test.csv";
  const auto r = run_cli({"intervals", "--delta", "20", "--format", "csv", "--output",
                          path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.out);
  std::filesystem::remove(path);
}

TEST_CASE("verify reports agreement", "[cli]") {
  const auto r = run_cli({"verify", "--max-s", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  for (const auto& row : j.at("result").at("ideal").at("rows")) {
    CHECK(row.at("verdict").get<std::string>().rfind("ok", 0) == 0);
  }
  CHECK(j.at("input").at("primes") == Json::array({101}));
}
