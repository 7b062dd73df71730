#pragma once

#include <conewright/birat.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conewright::report {

// One labeled row of integer invariants.
struct TableRow {
  std::string label;
  std::vector<long long> values;
};

// A rectangular integer table with a stable name, used for both the text and
// the machine-readable output.
struct TableData {
  std::string name;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

// Wall-and-chamber data of a movable-cone slice.
struct ConeData {
  std::string case_name;
  std::vector<birat::Wall> walls;
  std::vector<std::string> chambers;  // size = walls.size() - 1
};

// The three headline tables: intersection numbers of the favored resolutions
// (table1), their topological numbers (table2), and the invariants of the
// quintic family's far-side model (table3).
TableData table1();
TableData table2();
TableData table3();
TableData table_by_name(std::string_view name);

ConeData cone(detcy::CaseId id);

// Fixed-width text renderings: right-aligned integer columns; cone walls
// printed inline between the chambers they bound, with one kind line per
// wall.
std::string render(const TableData& table);
std::string render(const ConeData& cone);

// Machine-readable serialization. Parsing an emitted string and re-rendering
// the text form is byte-identical to rendering the original.
std::string to_json_string(const TableData& table);
std::string to_json_string(const ConeData& cone);
TableData table_from_json_string(const std::string& text);
ConeData cone_from_json_string(const std::string& text);

// One expected-vs-computed comparison. Both sides are rendered exactly
// (integers, rationals, matrices, wall lists), so string equality is exact
// value equality.
struct CheckItem {
  std::string case_tag;  // "v4", "v5", or "gr24"
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
  std::string render() const;
};

// Recomputes every embedded expected constant for the given case (or all
// three): invariant rows, topological numbers, far-model rows, dual-model
// triples, both pushforward solver systems with their accepted and rejected
// roots, the involution matrix, wall lists, chamber labels, wall kinds, and
// fibration degrees.
CheckReport run_checks(std::optional<detcy::CaseId> only = std::nullopt);

}  // namespace conewright::report
