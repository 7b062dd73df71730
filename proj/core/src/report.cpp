#include <conewright/report.hpp>

#include <conewright/errors.hpp>

#include <json.hpp>

#include <array>
#include <initializer_list>
#include <sstream>
#include <utility>

namespace conewright::report {

namespace {

using detcy::CaseId;
using nlohmann::ordered_json;

constexpr std::array<CaseId, 3> kAllCases{CaseId::v4, CaseId::v5, CaseId::gr24};

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::vector<std::string> invariant_columns() {
  return {"L3", "L2H", "LH2", "H3", "c2L", "c2H", "ODP"};
}

std::vector<long long> row_values(const detcy::InvariantRow& r) {
  return {r.L3, r.L2H, r.LH2, r.H3, r.c2L, r.c2H, r.odp};
}

std::string map_text(const birat::Map2& m) {
  std::ostringstream out;
  out << "[[" << m.m[0][0] << "," << m.m[0][1] << "],[" << m.m[1][0] << ","
      << m.m[1][1] << "]]";
  return out.str();
}

std::string div_text(const birat::Div2& d) {
  return "(" + rat_to_string(d.a) + ", " + rat_to_string(d.b) + ")";
}

// Renders a signed combination like "47a^2 + 60ab + 18b^2", skipping zero
// terms and omitting unit coefficients.
std::string poly_text(std::initializer_list<std::pair<Rat, const char*>> terms) {
  std::string out;
  for (const auto& [coef, var] : terms) {
    if (coef == 0) continue;
    const Rat mag = coef < 0 ? Rat(-coef) : coef;
    const std::string mag_text = mag == 1 ? "" : rat_to_string(mag);
    if (out.empty()) {
      out = (coef < 0 ? "-" : "") + mag_text + var;
    } else {
      out += (coef < 0 ? " - " : " + ") + mag_text + var;
    }
  }
  return out.empty() ? "0" : out;
}

std::string linear_text(const birat::SolveResult& s) {
  return poly_text({{s.lin_L, "a"}, {s.lin_H, "b"}}) + " = " + rat_to_string(s.lin_rhs);
}

std::string quadratic_text(const birat::SolveResult& s) {
  return poly_text({{s.quad_LL, "a^2"}, {s.quad_LH, "ab"}, {s.quad_HH, "b^2"}}) +
         " = " + rat_to_string(s.quad_rhs);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

// Embedded expected constants for one family, against which run_checks
// recomputes everything.
struct CaseExpectations {
  std::array<long long, 7> row;
  long long chi_top, h21, ambient_euler;
  std::array<long long, 4> dual_triples;
  const char* chi_lin;
  const char* chi_quad;
  const char* chi_sol;
  const char* chi_mat;
  const char* walls;
  const char* kinds;
  const char* chambers;
  // Far-model expectations; the degree-4 family has no far model, and the
  // Grassmannian family's far model carries triple products only.
  bool has_far_row = false;
  std::array<long long, 7> far_row{};
  bool has_far_triples = false;
  std::array<long long, 4> far_triples{};
  const char* flop_lin = nullptr;
  const char* flop_quad = nullptr;
};

CaseExpectations expectations(CaseId id) {
  switch (id) {
    case CaseId::v4:
      return {{80, 48, 26, 12, 104, 60, 26},
              -92,
              48,
              -144,
              {0, 0, 10, 12},
              "10a + 12b = 26",
              "20ab + 12b^2 = 48",
              "(-1, 3)",
              "[[-1,0],[3,1]]",
              "15L-17H, 8L-9H, L-H, H, 3H-L",
              "edge (K3 fibration), flop, involution, flop, edge (K3 fibration)",
              "X_E, X_F, X_F, X_E"};
    case CaseId::v5: {
      CaseExpectations e{{110, 63, 33, 15, 116, 66, 29},
                         -92,
                         48,
                         -150,
                         {0, 0, 12, 15},
                         "12a + 15b = 33",
                         "24ab + 15b^2 = 63",
                         "(-1, 3)",
                         "[[-1,0],[3,1]]",
                         "4L-5H, 9L-11H, L-H, H, 3H-L",
                         "edge (K3 fibration), flop, flop, flop, edge (K3 fibration)",
                         "X_F++, X_F+, X_F, X_E"};
      e.has_far_row = true;
      e.far_row = {34, 23, 13, 5, 76, 50, 54};
      e.flop_lin = "17a + 12b = 13";
      e.flop_quad = "47a^2 + 60ab + 18b^2 = 23";
      return e;
    }
    case CaseId::gr24: {
      CaseExpectations e{{85, 45, 21, 8, 106, 56, 41},
                         -94,
                         49,
                         -176,
                         {0, 5, 11, 8},
                         "11a + 8b = 21",
                         "5a^2 + 22ab + 8b^2 = 45",
                         "(-1, 4)",
                         "[[-1,0],[4,1]]",
                         "4L-5H, L-H, H, 4H-L",
                         "edge (elliptic fibration), flop, flop, edge (elliptic fibration)",
                         "X_F+, X_F, X_E"};
      e.has_far_triples = true;
      e.far_triples = {47, 28, 14, 5};
      e.flop_lin = "16a + 11b = 14";
      e.flop_quad = "40a^2 + 48ab + 13b^2 = 28";
      return e;
    }
  }
  throw InternalError("unreachable case id");
}

struct Sweep {
  std::vector<CheckItem>& items;
  std::string tag;

  void add(std::string name, std::string expected, std::string computed) {
    const bool pass = expected == computed;
    items.push_back(CheckItem{tag, std::move(name), std::move(expected),
                              std::move(computed), pass});
  }
  void add_int(std::string name, long long expected, const Rat& computed) {
    add(std::move(name), std::to_string(expected), rat_to_string(computed));
  }
  void add_count(std::string name, long long expected, long long computed) {
    add(std::move(name), std::to_string(expected), std::to_string(computed));
  }
};

void sweep_case(std::vector<CheckItem>& items, CaseId id) {
  const CaseExpectations exp = expectations(id);
  Sweep s{items, detcy::case_name(id)};

  static const char* kRowNames[7] = {"L^3",  "L^2.H", "L.H^2", "H^3",
                                     "c2.L", "c2.H",  "ODP count"};

  const detcy::PairConfig cfg = detcy::case_config(id);
  const detcy::InvariantRow row = detcy::invariant_row(cfg);
  const std::vector<long long> got_row = row_values(row);
  for (int i = 0; i < 7; ++i) {
    s.add_count(kRowNames[i], exp.row[static_cast<std::size_t>(i)],
                got_row[static_cast<std::size_t>(i)]);
  }

  const auto [chi_top, h21] = detcy::cy_hodge(cfg);
  s.add_int("chi_top", exp.chi_top, chi_top);
  s.add_int("h^{2,1}", exp.h21, h21);
  s.add_int("ambient anticanonical Euler number", exp.ambient_euler,
            detcy::anticanonical_euler(*cfg.space));

  // Dual model and the pushforward matrix of the interior flop.
  static const char* kDualNames[4] = {"dual-model L^3", "dual-model L^2.H",
                                      "dual-model L.H^2", "dual-model H^3"};
  const detcy::PairConfig dual_cfg = detcy::dual_config(cfg);
  const std::array<Rat, 4> dual_triples = detcy::triple_products(dual_cfg);
  for (int i = 0; i < 4; ++i) {
    s.add_int(kDualNames[i], exp.dual_triples[static_cast<std::size_t>(i)],
              dual_triples[static_cast<std::size_t>(i)]);
  }
  const birat::TripleForm dual_form = birat::TripleForm::from_products(dual_triples);
  const birat::SolveResult chi_sol = birat::pushforward_solve(
      dual_form, birat::Div2{0, 1}, Rat(row.LH2), Rat(row.L2H));
  s.add("dual pushforward linear system", exp.chi_lin, linear_text(chi_sol));
  s.add("dual pushforward quadratic system", exp.chi_quad, quadratic_text(chi_sol));
  s.add("dual pushforward solution", exp.chi_sol, div_text(chi_sol.solution));
  s.add_count("dual pushforward rejected roots", 1,
              static_cast<long long>(chi_sol.rejected.size()));
  s.add("flop matrix", exp.chi_mat,
        map_text(birat::chi_matrix(detcy::case_fano_index(id))));

  // Far model and the solver for its pushforward matrix.
  const birat::TripleForm primal_form = birat::TripleForm::from_row(row);
  if (exp.has_far_row || exp.has_far_triples) {
    const detcy::PairConfig far_cfg = detcy::flop_side_config(id);
    if (exp.has_far_row) {
      static const char* kFarNames[7] = {
          "far-model L^3",  "far-model L^2.H", "far-model L.H^2",
          "far-model H^3",  "far-model c2.L",  "far-model c2.H",
          "far-model ODP count"};
      const std::vector<long long> far_row = row_values(detcy::invariant_row(far_cfg));
      for (int i = 0; i < 7; ++i) {
        s.add_count(kFarNames[i], exp.far_row[static_cast<std::size_t>(i)],
                    far_row[static_cast<std::size_t>(i)]);
      }
    }
    const std::array<Rat, 4> far_triples = detcy::triple_products(far_cfg);
    if (exp.has_far_triples) {
      static const char* kFarTripleNames[4] = {
          "far-model L^3", "far-model L^2.H", "far-model L.H^2", "far-model H^3"};
      for (int i = 0; i < 4; ++i) {
        s.add_int(kFarTripleNames[i], exp.far_triples[static_cast<std::size_t>(i)],
                  far_triples[static_cast<std::size_t>(i)]);
      }
    }
    const birat::SolveResult flop_sol = birat::pushforward_solve(
        primal_form, birat::Div2{1, -1}, far_triples[2], far_triples[1]);
    s.add("flop-chain linear system", exp.flop_lin, linear_text(flop_sol));
    s.add("flop-chain quadratic system", exp.flop_quad, quadratic_text(flop_sol));
    s.add("flop-chain solution", "(5, -6)", div_text(flop_sol.solution));
    s.add_count("flop-chain rejected roots", 1,
                static_cast<long long>(flop_sol.rejected.size()));
  }

  if (id == CaseId::v4) {
    const birat::Map2 iota = birat::involution_matrix(row);
    s.add_int("involution coefficient (H.(L-H)^2)", 8,
              primal_form.eval(birat::Div2{0, 1}, birat::Div2{1, -1},
                               birat::Div2{1, -1}));
    s.add("involution matrix", "[[9,8],[-10,-9]]", map_text(iota));
    s.add("involution squared", "[[1,0],[0,1]]", map_text(iota.compose(iota)));

    // Degree of the rank-drop locus of the degree-4 family's defining pair
    // restricted to a hyperplane 3-space.
    const auto& p3 = spaces::get("p3");
    const chern::Bundle cotangent_twist =
        chern::twist_by_line(chern::dual(p3.tangent), p3.hyperplane * Rat(2));
    const chern::Bundle v =
        chern::whitney_sum(cotangent_twist, chern::trivial_bundle(p3.ring, 1));
    const chern::Bundle f = chern::twist_by_line(v, p3.hyperplane);
    const chern::Bundle e = chern::trivial_bundle(p3.ring, 2);
    s.add_int("rank-drop locus degree (3-space pair)", 14,
              p3.integrate(detcy::porteous_class(e, f, 1)));
  }

  if (id == CaseId::v5) {
    const detcy::PairConfig far_cfg = detcy::flop_side_config(id);
    s.add_int("section-class degree (far model)", 2,
              far_cfg.space->integrate(chern::chern_class(far_cfg.e, 3) * far_cfg.h));
  }

  // Cone decomposition.
  const ConeData cd = cone(id);
  std::vector<std::string> wall_texts, wall_kinds;
  for (const auto& w : cd.walls) {
    wall_texts.push_back(w.text());
    wall_kinds.push_back(w.kind);
  }
  s.add("wall list", exp.walls, join(wall_texts));
  s.add("wall kinds", exp.kinds, join(wall_kinds));
  s.add("chamber list", exp.chambers, join(cd.chambers));

  // Fibration degrees and flop-invariant pairings.
  for (const auto& fc : birat::fiber_invariant_checks(id)) {
    s.add(fc.name, rat_to_string(fc.expected), rat_to_string(fc.computed));
  }
}

}  // namespace

TableData table1() {
  TableData t;
  t.name = "table1";
  t.columns = invariant_columns();
  for (CaseId id : kAllCases) {
    t.rows.push_back(TableRow{detcy::case_name(id),
                              row_values(detcy::invariant_row(detcy::case_config(id)))});
  }
  return t;
}

TableData table2() {
  TableData t;
  t.name = "table2";
  t.columns = {"chi_top", "h21"};
  for (CaseId id : kAllCases) {
    const auto [chi_top, h21] = detcy::cy_hodge(detcy::case_config(id));
    t.rows.push_back(TableRow{detcy::case_name(id), {to_int64(chi_top), to_int64(h21)}});
  }
  return t;
}

TableData table3() {
  TableData t;
  t.name = "table3";
  t.columns = invariant_columns();
  t.rows.push_back(TableRow{
      "v5+", row_values(detcy::invariant_row(detcy::flop_side_config(CaseId::v5)))});
  return t;
}

TableData table_by_name(std::string_view name) {
  if (name == "table1") return table1();
  if (name == "table2") return table2();
  if (name == "table3") return table3();
  throw ConfigError("unknown table: " + std::string(name));
}

ConeData cone(CaseId id) {
  const birat::ChamberDecomposition d = birat::assemble_chambers(id);
  return ConeData{detcy::case_name(id), d.walls, d.chambers};
}

std::string render(const TableData& table) {
  std::size_t label_width = 4;  // "case"
  for (const auto& row : table.rows) label_width = std::max(label_width, row.label.size());

  std::vector<std::size_t> widths;
  for (const auto& col : table.columns) widths.push_back(col.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : table.rows) {
    if (row.values.size() != table.columns.size()) {
      throw ConfigError("table row '" + row.label + "' does not match the columns");
    }
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      line.push_back(std::to_string(row.values[i]));
      widths[i] = std::max(widths[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }

  std::ostringstream out;
  out << table.name << '\n' << pad_right("case", label_width);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << "  " << pad_left(table.columns[i], widths[i]);
  }
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << pad_right(table.rows[r].label, label_width);
    for (std::size_t i = 0; i < cells[r].size(); ++i) {
      out << "  " << pad_left(cells[r][i], widths[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string render(const ConeData& cone) {
  if (cone.walls.size() != cone.chambers.size() + 1) {
    throw ConfigError("cone data needs exactly one more wall than chambers");
  }
  std::ostringstream out;
  out << "cone " << cone.case_name << '\n' << "  ";
  std::size_t wall_width = 0;
  for (std::size_t i = 0; i < cone.walls.size(); ++i) {
    const std::string text = cone.walls[i].text();
    wall_width = std::max(wall_width, text.size());
    out << text;
    if (i < cone.chambers.size()) out << " | " << cone.chambers[i] << " | ";
  }
  out << '\n';
  for (const auto& wall : cone.walls) {
    out << "  " << pad_right(wall.text(), wall_width) << "  " << wall.kind << '\n';
  }
  return out.str();
}

std::string to_json_string(const TableData& table) {
  ordered_json j;
  j["table"] = table.name;
  j["columns"] = table.columns;
  j["rows"] = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["case"] = row.label;
    r["values"] = row.values;
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string to_json_string(const ConeData& cone) {
  ordered_json j;
  j["case"] = cone.case_name;
  j["walls"] = ordered_json::array();
  for (const auto& wall : cone.walls) {
    ordered_json w;
    w["a"] = wall.a;
    w["b"] = wall.b;
    w["text"] = wall.text();
    w["kind"] = wall.kind;
    j["walls"].push_back(std::move(w));
  }
  j["chambers"] = cone.chambers;
  return j.dump(2) + "\n";
}

TableData table_from_json_string(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    TableData t;
    t.name = j.at("table").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
      t.rows.push_back(TableRow{r.at("case").get<std::string>(),
                                r.at("values").get<std::vector<long long>>()});
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed table document: ") + e.what());
  }
}

ConeData cone_from_json_string(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    ConeData c;
    c.case_name = j.at("case").get<std::string>();
    for (const auto& w : j.at("walls")) {
      c.walls.push_back(birat::Wall{w.at("a").get<long long>(),
                                    w.at("b").get<long long>(),
                                    w.at("kind").get<std::string>()});
    }
    c.chambers = j.at("chambers").get<std::vector<std::string>>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed cone document: ") + e.what());
  }
}

bool CheckReport::all_pass() const {
  for (const auto& item : items) {
    if (!item.pass) return false;
  }
  return true;
}

std::string CheckReport::render() const {
  std::size_t tag_width = 0;
  for (const auto& item : items) tag_width = std::max(tag_width, item.case_tag.size());
  std::ostringstream out;
  std::size_t failures = 0;
  for (const auto& item : items) {
    if (item.pass) {
      out << "ok    " << pad_right(item.case_tag, tag_width) << "  " << item.name
          << " = " << item.computed << '\n';
    } else {
      ++failures;
      out << "FAIL  " << pad_right(item.case_tag, tag_width) << "  " << item.name
          << ": expected " << item.expected << ", computed " << item.computed << '\n';
    }
  }
  out << "checks: " << items.size() << "  failures: " << failures << '\n';
  return out.str();
}

CheckReport run_checks(std::optional<CaseId> only) {
  CheckReport report;
  for (CaseId id : kAllCases) {
    if (only.has_value() && *only != id) continue;
    sweep_case(report.items, id);
  }
  return report;
}

}  // namespace conewright::report
