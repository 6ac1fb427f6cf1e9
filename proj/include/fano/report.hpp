#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fano/classify.hpp"
#include "fano/index_filters.hpp"
#include "fano/sieve.hpp"

namespace fano {

enum class OutputFormat { md, csv, json };

struct RunConfig {
  Window window;
  FilterConstants constants;
  OutputFormat format = OutputFormat::md;
  bool emit_excluded = false;

  void validate() const;
};

enum class TableId {
  table2,
  table3,
  table4,
  table5,
  a1,
  a2,
  a3,
  a4,
  a5,
  corollary,
  curve_exclusion,
  torsion_exclusion,
  candidates,
};

std::string_view to_string(TableId id);
std::optional<TableId> table_id_from_string(std::string_view name);

/// Artifacts compared against the shipped golden files.
const std::vector<TableId>& golden_tables();

/// A named table of canonical string cells. List-valued cells join items
/// with ';'. A column "X_crossed" holds the items of column X that are
/// struck out.
struct TableArtifact {
  TableId id = TableId::table2;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const TableArtifact&, const TableArtifact&) = default;
};

TableArtifact table_regime(const CaseTable& table, TableId id);  // TABLE3 / TABLE4
TableArtifact table_high(const CaseTable& table);                // TABLE5
TableArtifact table_a1(const CaseAnalysis& analysis);
TableArtifact table_a2(const CaseAnalysis& analysis);
TableArtifact table_a3(const CaseAnalysis& analysis);
TableArtifact table_a4(const CaseAnalysis& analysis);
TableArtifact table_a5(const CaseAnalysis& analysis);
TableArtifact table_survivors(const Classification& result);  // TABLE2
TableArtifact table_corollary(const Classification& result);
TableArtifact table_curve_exclusions(const Classification& result);
TableArtifact table_torsion_exclusions(const Classification& result);
TableArtifact table_candidates(const CaseAnalysis& analysis);

std::vector<TableArtifact> cmd_tables(const RunConfig& config);
std::vector<TableArtifact> cmd_classify(const RunConfig& config);

/// RFC 4180 with LF line endings and a header row.
std::string to_csv(const TableArtifact& table);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Markdown with ~~struck~~ crossed items and decimals next to slack fractions.
std::string to_markdown(const TableArtifact& table);

nlohmann::json to_json(const TableArtifact& table);
TableArtifact table_from_json(const nlohmann::json& j);

/// Renders a set of artifacts in the configured format.
std::string render(const std::vector<TableArtifact>& tables, OutputFormat format);

struct DiffResult {
  TableId id = TableId::table2;
  bool passed = false;
  std::string message;
};

/// Compares the canonical CSV of every golden table against DIR/<name>.csv.
std::vector<DiffResult> cmd_diff(const std::filesystem::path& golden_dir, const RunConfig& config);

std::string golden_file_name(TableId id);

}  // namespace fano
