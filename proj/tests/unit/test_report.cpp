#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "fano/report.hpp"

using namespace fano;

namespace {

const std::filesystem::path kGolden = FANO_GOLDEN_DIR;

const TableArtifact& find(const std::vector<TableArtifact>& ts, TableId id) {
  for (const auto& t : ts) {
    if (t.id == id) return t;
  }
  throw std::runtime_error("artifact missing");
}

}  // namespace

TEST_CASE("table ids") {
  CHECK(to_string(TableId::a5) == "A5");
  CHECK(table_id_from_string("TABLE2") == TableId::table2);
  CHECK(table_id_from_string("COROLLARY") == TableId::corollary);
  CHECK_FALSE(table_id_from_string("TABLE9").has_value());
  CHECK(golden_file_name(TableId::a1) == "a1.csv");
  CHECK(golden_tables().size() == 10);
}

TEST_CASE("run config validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.window = Window{72, 66};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.window = Window{};
  cfg.constants.picard_one_bound = Rational(-1);
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("csv quoting round-trips") {
  TableArtifact t{TableId::table3, {"a", "b,c", "d"}, {{"{2,2}", "x\"y", ""}, {"1", "2", "3"}}};
  const auto text = to_csv(t);
  CHECK(text.find("\"{2,2}\"") != std::string::npos);
  CHECK(text.find("\"x\"\"y\"") != std::string::npos);
  CHECK(text.find('\r') == std::string::npos);
  auto parsed = parse_csv(text);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0] == t.columns);
  CHECK(parsed[1] == t.rows[0]);
  CHECK(parsed[2] == t.rows[1]);
}

TEST_CASE("tables command") {
  const auto ts = cmd_tables(RunConfig{});
  REQUIRE(ts.size() == 3);
  CHECK(find(ts, TableId::table3).rows.size() == 5);
  bool none4 = false;
  for (const auto& r : find(ts, TableId::table4).rows) none4 = none4 || (r[0] == "{4}" && r[3] == "None");
  CHECK(none4);
  RunConfig narrow;
  narrow.window = Window{66, 70};
  const auto t3 = find(cmd_tables(narrow), TableId::table3);
  CHECK(t3.rows.size() == 4);
  for (const auto& r : t3.rows) CHECK(r[3] != "141");
}

TEST_CASE("classify command") {
  const auto ts = cmd_classify(RunConfig{});
  const auto& cor = find(ts, TableId::corollary);
  REQUIRE(cor.rows.size() == 1);
  CHECK(cor.rows[0][0] == "200/3");
  CHECK(cor.rows[0][2] == "2;4;5;10;20;40");
  const auto& t2 = find(ts, TableId::table2);
  CHECK(t2.rows.size() == 11);
  int survivors = 0;
  for (const auto& r : t2.rows) survivors += r.back() == "SURVIVOR";
  CHECK(survivors == 7);
}

TEST_CASE("emit excluded adds the candidate listing") {
  RunConfig cfg;
  cfg.emit_excluded = true;
  const auto ts = cmd_classify(cfg);
  const auto& cand = find(ts, TableId::candidates);
  std::size_t reason_col = 0;
  for (std::size_t i = 0; i < cand.columns.size(); ++i) {
    if (cand.columns[i] == "status") reason_col = i;
  }
  REQUIRE(reason_col > 0);
  int ja25 = 0;
  for (const auto& r : cand.rows) ja25 += r[reason_col] == "JA-BOUND-25";
  CHECK(ja25 > 0);
}

TEST_CASE("markdown strikes crossed items and shows decimals") {
  const auto md = to_markdown(find(cmd_classify(RunConfig{}), TableId::a2));
  CHECK(md.find("~~4~~") != std::string::npos);
  CHECK(md.find("15/16 (0.9375)") != std::string::npos);
  const auto t4 = to_markdown(find(cmd_tables(RunConfig{}), TableId::table4));
  CHECK(t4.find("157/36 (≈4.3611)") != std::string::npos);
}

TEST_CASE("json round-trip and determinism") {
  const auto a = cmd_classify(RunConfig{});
  const auto b = cmd_classify(RunConfig{});
  CHECK(a == b);
  CHECK(render(a, OutputFormat::json) == render(b, OutputFormat::json));
  CHECK(render(a, OutputFormat::csv) == render(b, OutputFormat::csv));
  for (const auto& t : a) {
    CHECK(table_from_json(to_json(t)) == t);
    CHECK(table_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
  }
  auto parsed = nlohmann::json::parse(render(a, OutputFormat::json));
  CHECK(parsed.is_array());
  CHECK(parsed.size() == a.size());
}

TEST_CASE("golden diff") {
  for (const auto& r : cmd_diff(kGolden, RunConfig{})) CHECK_MESSAGE(r.passed, r.message);

  RunConfig perturbed;
  perturbed.constants.weak_fano_bound = Rational(130);
  bool any_fail = false;
  for (const auto& r : cmd_diff(kGolden, perturbed)) any_fail = any_fail || !r.passed;
  CHECK(any_fail);

  const auto empty = std::filesystem::temp_directory_path() / "fano_empty_golden";
  std::filesystem::create_directories(empty);
  for (const auto& r : cmd_diff(empty, RunConfig{})) {
    CHECK_FALSE(r.passed);
    CHECK(r.message.find(golden_file_name(r.id)) != std::string::npos);
  }
}

TEST_CASE("golden diff reports the first mismatching cell") {
  const auto dir = std::filesystem::temp_directory_path() / "fano_edited_golden";
  std::filesystem::create_directories(dir);
  for (const auto& entry : std::filesystem::directory_iterator(kGolden)) {
    std::filesystem::copy_file(entry.path(), dir / entry.path().filename(),
                               std::filesystem::copy_options::overwrite_existing);
  }
  std::ofstream(dir / "table3.csv") << "R_X,r_X,rX_c2c1,rX_c1^3,slack\n{2},2,45,133,55/17\n";
  for (const auto& r : cmd_diff(dir, RunConfig{})) {
    if (r.id == TableId::table3) {
      CHECK_FALSE(r.passed);
      CHECK(r.message.find("slack") != std::string::npos);
    } else {
      CHECK(r.passed);
    }
  }
}
