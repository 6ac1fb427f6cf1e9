#include "fano/report.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fano/number_theory.hpp"

namespace fano {

namespace {

constexpr std::array<std::pair<TableId, std::string_view>, 13> kTableNames{{
    {TableId::table2, "TABLE2"},
    {TableId::table3, "TABLE3"},
    {TableId::table4, "TABLE4"},
    {TableId::table5, "TABLE5"},
    {TableId::a1, "A1"},
    {TableId::a2, "A2"},
    {TableId::a3, "A3"},
    {TableId::a4, "A4"},
    {TableId::a5, "A5"},
    {TableId::corollary, "COROLLARY"},
    {TableId::curve_exclusion, "CURVE-EXCLUSION"},
    {TableId::torsion_exclusion, "TORSION-EXCLUSION"},
    {TableId::candidates, "CANDIDATES"},
}};

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ";";
    out += xs[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void push_unique(std::vector<std::int64_t>& xs, std::int64_t v) {
  if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
}

std::vector<std::int64_t> sorted(std::vector<std::int64_t> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::vector<std::string> row_prefix(const SieveRow& row) {
  return {format_multiset(row.rx()), std::to_string(row.r_x), row.rx_c2c1.str(), std::to_string(row.rx_deg)};
}

const std::vector<std::string> kRowColumns{"R_X", "r_X", "rX_c2c1", "rX_c1^3"};

std::vector<std::string> with_row_columns(std::initializer_list<std::string> extra) {
  auto cols = kRowColumns;
  cols.insert(cols.end(), extra.begin(), extra.end());
  return cols;
}

// Groups candidates by a key in first-appearance order.
template <typename Key, typename KeyFn>
std::vector<std::pair<Key, std::vector<const IndexedCase*>>> group_by(const std::vector<IndexedCase>& cases,
                                                                        KeyFn key_of) {
  std::vector<std::pair<Key, std::vector<const IndexedCase*>>> groups;
  for (const auto& c : cases) {
    Key k = key_of(c);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == k; });
    if (it == groups.end()) {
      groups.push_back({k, {&c}});
    } else {
      it->second.push_back(&c);
    }
  }
  return groups;
}

Rational high_slack(const SieveRow& row) { return row.rx_c2c1 - Rational(row.rx_deg, 4); }

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void RunConfig::validate() const {
  if (!(window.lower < window.upper)) throw std::invalid_argument("window needs LO < HI");
  constants.validate();
}

std::string_view to_string(TableId id) {
  for (const auto& [t, name] : kTableNames) {
    if (t == id) return name;
  }
  return "?";
}

std::optional<TableId> table_id_from_string(std::string_view name) {
  for (const auto& [t, n] : kTableNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

const std::vector<TableId>& golden_tables() {
  static const std::vector<TableId> ids{TableId::table2, TableId::table3, TableId::table4, TableId::table5,
                                        TableId::a1,     TableId::a2,     TableId::a3,     TableId::a4,
                                        TableId::a5,     TableId::corollary};
  return ids;
}

std::string golden_file_name(TableId id) {
  std::string name(to_string(id));
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  return name + ".csv";
}

TableArtifact table_regime(const CaseTable& table, TableId id) {
  TableArtifact out{id, with_row_columns({"slack"}), {}};
  for (const auto& g : table.groups) {
    if (g.none()) {
      out.rows.push_back({format_multiset(g.rx), std::to_string(g.r_x), g.rx_c2c1.str(), "None", ""});
      continue;
    }
    for (const auto& row : g.rows) {
      auto cells = row_prefix(row);
      cells.push_back(row.slack.str());
      out.rows.push_back(std::move(cells));
    }
  }
  return out;
}

TableArtifact table_high(const CaseTable& table) {
  TableArtifact out{TableId::table5, with_row_columns({"slack_relation", "slack_max"}), {}};
  for (const auto& g : table.groups) {
    std::vector<std::string> cells{format_multiset(g.rx), std::to_string(g.r_x), g.rx_c2c1.str()};
    if (g.none()) {
      cells.insert(cells.end(), {"None", "", ""});
    } else {
      std::vector<std::int64_t> degs;
      for (const auto& row : g.rows) push_unique(degs, row.rx_deg);
      cells.push_back(join(degs));
      cells.push_back(g.rows.size() == 1 ? "=" : "<=");
      cells.push_back(g.max_slack().str());
    }
    out.rows.push_back(std::move(cells));
  }
  return out;
}

TableArtifact table_a1(const CaseAnalysis& analysis) {
  TableArtifact out{TableId::a1, with_row_columns({"q_hat", "q", "J_A"}), {}};
  const auto& plan = analysis.plan(SubCase::low_unequal);
  auto groups = group_by<std::string>(plan.candidates, [](const IndexedCase& c) {
    return c.row.basket.str() + "|" + std::to_string(c.row.rx_deg) + "|" + std::to_string(c.q_hat);
  });
  for (const auto& [key, cases] : groups) {
    std::vector<std::int64_t> qs, jas;
    for (const auto* c : cases) {
      push_unique(qs, c->q);
      push_unique(jas, c->ja);
    }
    auto cells = row_prefix(cases.front()->row);
    cells.insert(cells.end(), {std::to_string(cases.front()->q_hat), join(sorted(qs)), join(sorted(jas))});
    out.rows.push_back(std::move(cells));
  }
  return out;
}

TableArtifact table_a2(const CaseAnalysis& analysis) {
  TableArtifact out{TableId::a2, with_row_columns({"q", "q_crossed", "slack"}), {}};
  const auto& plan = analysis.plan(SubCase::low_ja_eq_q);
  auto groups = group_by<std::string>(plan.candidates, [](const IndexedCase& c) { return c.row.key() + c.row.basket.str(); });
  for (const auto& [key, cases] : groups) {
    std::vector<std::int64_t> qs, crossed;
    for (const auto* c : cases) {
      push_unique(qs, c->q);
      if (c->fails(Exclusion::ja_bound_24)) push_unique(crossed, c->q);
    }
    auto cells = row_prefix(cases.front()->row);
    cells.insert(cells.end(), {join(sorted(qs)), join(sorted(crossed)), cases.front()->row.slack.str()});
    out.rows.push_back(std::move(cells));
  }
  return out;
}

TableArtifact table_a3(const CaseAnalysis& analysis) {
  TableArtifact out{TableId::a3, with_row_columns({"q_hat", "q_hat_crossed", "q", "J_A"}), {}};
  const auto& plan = analysis.plan(SubCase::six_unequal);
  auto groups = group_by<std::string>(plan.candidates, [](const IndexedCase& c) {
    return c.row.basket.str() + "|" + std::to_string(c.row.rx_deg) + "|" + std::to_string(c.q_hat);
  });
  for (const auto& [key, cases] : groups) {
    std::vector<std::int64_t> qs, jas;
    bool crossed = true;
    for (const auto* c : cases) {
      push_unique(qs, c->q);
      push_unique(jas, c->ja);
      crossed = crossed && c->fails(Exclusion::torsion_324);
    }
    const auto q_hat = std::to_string(cases.front()->q_hat);
    auto cells = row_prefix(cases.front()->row);
    cells.insert(cells.end(), {q_hat, crossed ? q_hat : "", join(sorted(qs)), join(sorted(jas))});
    out.rows.push_back(std::move(cells));
  }
  return out;
}

TableArtifact table_a4(const CaseAnalysis& analysis) {
  TableArtifact out{TableId::a4, with_row_columns({"factorization", "q", "slack"}), {}};
  const auto& plan = analysis.plan(SubCase::high_ja_eq_q);
  auto groups = group_by<std::string>(plan.candidates, [](const IndexedCase& c) { return c.row.key() + c.row.basket.str(); });
  for (const auto& [key, cases] : groups) {
    std::vector<std::int64_t> qs;
    for (const auto* c : cases) {
      if (!c->fails(Exclusion::ja_bound_25)) push_unique(qs, c->q);
    }
    if (qs.empty()) continue;
    const auto& row = cases.front()->row;
    auto cells = row_prefix(row);
    cells.insert(cells.end(), {format_factorization(factorize(row.rx_deg)), join(sorted(qs)), row.slack.str()});
    out.rows.push_back(std::move(cells));
  }
  return out;
}

TableArtifact table_a5(const CaseAnalysis& analysis) {
  TableArtifact out{TableId::a5, with_row_columns({"factorization", "q/J_A", "J_A", "J_A_crossed", "slack"}), {}};
  const auto& plan = analysis.plan(SubCase::high_ja_ne_q);
  auto groups = group_by<std::string>(plan.candidates, [](const IndexedCase& c) {
    return c.row.basket.str() + "|" + std::to_string(c.row.rx_deg) + "|" + std::to_string(c.q / c.ja);
  });
  for (const auto& [key, cases] : groups) {
    std::vector<std::int64_t> jas, crossed;
    for (const auto* c : cases) {
      push_unique(jas, c->ja);
      if (c->fails(Exclusion::ja_bound_25)) push_unique(crossed, c->ja);
    }
    const auto& row = cases.front()->row;
    auto cells = row_prefix(row);
    cells.insert(cells.end(), {format_factorization(factorize(row.rx_deg)),
                               std::to_string(cases.front()->q / cases.front()->ja), join(sorted(jas)),
                               join(sorted(crossed)), high_slack(row).str()});
    out.rows.push_back(std::move(cells));
  }
  return out;
}

TableArtifact table_survivors(const Classification& result) {
  TableArtifact out{TableId::table2, {"c1^3", "B_X", "r_X", "c2c1", "q", "q_hat", "J_A", "status"}, {}};
  for (const auto& e : result.table2) {
    auto jas = e.ja_values();
    out.rows.push_back({e.row.degree().str(), e.row.basket.str(), std::to_string(e.row.r_x), e.row.c2c1().str(),
                        std::to_string(e.q), std::to_string(e.q_hat), join(jas),
                        e.removed_by ? std::string(to_string(*e.removed_by)) : "SURVIVOR"});
  }
  return out;
}

TableArtifact table_corollary(const Classification& result) {
  return {TableId::corollary,
          {"max_degree", "q_equals_q_hat", "q_set"},
          {{result.max_degree().str(), result.q_equals_q_hat_at_max() ? "true" : "false",
            join(result.q_set_at_max())}}};
}

TableArtifact table_curve_exclusions(const Classification& result) {
  TableArtifact out{TableId::curve_exclusion, {"row", "check", "passed", "witness"}, {}};
  for (const auto& rec : result.curve_exclusions) {
    for (const auto& c : rec.checks) out.rows.push_back({rec.row_key, c.name, c.passed ? "true" : "false", c.witness});
  }
  return out;
}

TableArtifact table_torsion_exclusions(const Classification& result) {
  TableArtifact out{TableId::torsion_exclusion,
                    {"row", "q", "q_hat", "curve_bound", "configs", "values", "quotients", "rational_square",
                     "verdict"},
                    {}};
  for (const auto& rec : result.torsion_exclusions) {
    std::vector<std::string> configs, values, quotients, squares;
    for (const auto& c : rec.configs) configs.push_back(c.str());
    for (const auto& v : rec.values) values.push_back(v.str());
    for (const auto& q : rec.quotients) {
      quotients.push_back(q.str());
      squares.push_back(is_rational_square(q) ? "true" : "false");
    }
    out.rows.push_back({rec.row_key, std::to_string(rec.q), std::to_string(rec.q_hat), rec.curve_bound.str(),
                        join(configs), join(values), join(quotients), join(squares),
                        rec.verdict == Verdict::excluded ? "EXCLUDED" : "INCONCLUSIVE"});
  }
  return out;
}

TableArtifact table_candidates(const CaseAnalysis& analysis) {
  TableArtifact out{TableId::candidates, {"subcase", "row", "q", "q_hat", "J_A", "status", "failed"}, {}};
  for (const auto& plan : analysis.plans) {
    for (const auto& c : plan.candidates) {
      std::vector<std::string> failed;
      for (auto e : c.failed) failed.emplace_back(to_string(e));
      out.rows.push_back({std::string(to_string(plan.id)), c.row.key(), std::to_string(c.q),
                          std::to_string(c.q_hat), std::to_string(c.ja),
                          c.reason ? std::string(to_string(*c.reason)) : "SURVIVOR", join(failed)});
    }
  }
  return out;
}

std::vector<TableArtifact> cmd_tables(const RunConfig& config) {
  config.validate();
  return {table_regime(build_case_table(QRegime::low, config.window), TableId::table3),
          table_regime(build_case_table(QRegime::six, config.window), TableId::table4),
          table_high(build_case_table(QRegime::high, config.window))};
}

std::vector<TableArtifact> cmd_classify(const RunConfig& config) {
  config.validate();
  Classification result = classify(config.window, config.constants);
  const auto& a = result.analysis;
  std::vector<TableArtifact> out{table_a1(a),
                                 table_a2(a),
                                 table_a3(a),
                                 table_a4(a),
                                 table_a5(a),
                                 table_survivors(result),
                                 table_curve_exclusions(result),
                                 table_torsion_exclusions(result),
                                 table_corollary(result)};
  if (config.emit_excluded) out.push_back(table_candidates(a));
  return out;
}

std::string to_csv(const TableArtifact& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ",";
      out += csv_escape(cells[i]);
    }
    out += "\n";
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool pending = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
      continue;
    }
    pending = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      row.push_back(std::move(cell));
      cell.clear();
      rows.push_back(std::move(row));
      row.clear();
      pending = false;
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV cell");
  if (pending) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_markdown(const TableArtifact& table) {
  auto column_index = [&](const std::string& name) -> std::optional<std::size_t> {
    auto it = std::find(table.columns.begin(), table.columns.end(), name);
    if (it == table.columns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - table.columns.begin());
  };
  std::vector<std::size_t> shown;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    const auto& name = table.columns[i];
    if (name.size() > 8 && name.ends_with("_crossed")) continue;
    shown.push_back(i);
  }

  std::string out = "|";
  for (auto i : shown) out += " " + table.columns[i] + " |";
  out += "\n|";
  for (std::size_t k = 0; k < shown.size(); ++k) out += "---|";
  out += "\n";
  for (const auto& row : table.rows) {
    out += "|";
    for (auto i : shown) {
      const auto& name = table.columns[i];
      std::string cell = row[i];
      if (name.starts_with("slack") && name != "slack_relation" && !cell.empty()) {
        cell += " (" + Rational::parse(cell).decimal() + ")";
      } else if (auto crossed_col = column_index(name + "_crossed")) {
        auto crossed = split(row[*crossed_col], ';');
        std::vector<std::string> items;
        for (auto& item : split(cell, ';')) {
          bool struck = std::find(crossed.begin(), crossed.end(), item) != crossed.end();
          items.push_back(struck ? "~~" + item + "~~" : item);
        }
        cell.clear();
        for (std::size_t k = 0; k < items.size(); ++k) cell += (k ? ", " : "") + items[k];
      } else {
        std::replace(cell.begin(), cell.end(), ';', ' ');
      }
      out += " " + cell + " |";
    }
    out += "\n";
  }
  return out;
}

nlohmann::json to_json(const TableArtifact& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  return {{"name", std::string(to_string(table.id))}, {"columns", table.columns}, {"rows", rows}};
}

TableArtifact table_from_json(const nlohmann::json& j) {
  auto id = table_id_from_string(j.at("name").get<std::string>());
  if (!id) throw std::invalid_argument("unknown table name " + j.at("name").dump());
  TableArtifact out{*id, j.at("columns").get<std::vector<std::string>>(), {}};
  for (const auto& obj : j.at("rows")) {
    std::vector<std::string> row;
    for (const auto& col : out.columns) row.push_back(obj.at(col).get<std::string>());
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string render(const std::vector<TableArtifact>& tables, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::md:
      for (const auto& t : tables) out += "### " + std::string(to_string(t.id)) + "\n\n" + to_markdown(t) + "\n";
      break;
    case OutputFormat::csv:
      for (const auto& t : tables) out += "# " + std::string(to_string(t.id)) + "\n" + to_csv(t) + "\n";
      break;
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : tables) arr.push_back(to_json(t));
      out = arr.dump(2) + "\n";
      break;
    }
  }
  return out;
}

std::vector<DiffResult> cmd_diff(const std::filesystem::path& golden_dir, const RunConfig& config) {
  std::vector<TableArtifact> produced = cmd_tables(config);
  std::string classify_error;
  try {
    auto more = cmd_classify(config);
    produced.insert(produced.end(), more.begin(), more.end());
  } catch (const std::exception& ex) {
    classify_error = ex.what();
  }

  std::vector<DiffResult> results;
  for (auto id : golden_tables()) {
    DiffResult r{id, false, ""};
    const auto path = golden_dir / golden_file_name(id);
    auto it = std::find_if(produced.begin(), produced.end(), [&](const TableArtifact& t) { return t.id == id; });
    if (!std::filesystem::exists(path)) {
      r.message = "missing golden file " + path.string();
    } else if (it == produced.end()) {
      r.message = "not produced: " + classify_error;
    } else {
      const std::string expected = read_file(path);
      const std::string actual = to_csv(*it);
      if (expected == actual) {
        r.passed = true;
        r.message = "ok";
      } else {
        auto exp_rows = parse_csv(expected);
        auto act_rows = parse_csv(actual);
        r.message = "byte mismatch";
        for (std::size_t i = 0; i < std::max(exp_rows.size(), act_rows.size()); ++i) {
          if (i >= exp_rows.size() || i >= act_rows.size()) {
            r.message = "row count differs: expected " + std::to_string(exp_rows.size()) + ", got " +
                        std::to_string(act_rows.size());
            break;
          }
          const auto& e = exp_rows[i];
          const auto& a = act_rows[i];
          std::size_t n = std::max(e.size(), a.size());
          bool found = false;
          for (std::size_t k = 0; k < n; ++k) {
            std::string ev = k < e.size() ? e[k] : "<missing>";
            std::string av = k < a.size() ? a[k] : "<missing>";
            if (ev != av) {
              std::string col = k < exp_rows.front().size() ? exp_rows.front()[k] : std::to_string(k);
              r.message = "line " + std::to_string(i + 1) + ", column " + col + ": expected '" + ev + "', got '" +
                          av + "'";
              found = true;
              break;
            }
          }
          if (found) break;
        }
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace fano
