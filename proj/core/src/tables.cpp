#include "pretenders/tables.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "pretenders/pretender.hpp"

namespace pretenders {
namespace {

constexpr u64 kTable1Modulus = 1260;
constexpr u64 kTable1Stride = 180;
constexpr u64 kTable2Rows = 41;

std::string header_for(TableId id) {
  switch (id) {
    case TableId::mod36: return "residue,value";
    case TableId::t1: return "residue,offset,value";
    case TableId::t2: return "class,row,value";
    case TableId::t3: return "q,k,m,first_base,rarity";
  }
  return "";
}

}  // namespace

Cell class_value(const Cascade& cascade, u64 residue, u64 modulus) {
  for (const Characterization& e : cascade.entries()) {
    if (modulus % e.m != 0) return std::nullopt;
    if (e.contains(residue)) return e.q;
  }
  return std::nullopt;
}

Grid gen_mod36(const Cascade& cascade) {
  Grid grid;
  for (u64 r = 0; r < 36; ++r) grid.push_back({r, 0, class_value(cascade, r, 36)});
  return grid;
}

Grid gen_table1(const Cascade& cascade) {
  std::vector<u64> open36;
  for (const GridCell& c : gen_mod36(cascade))
    if (!c.value) open36.push_back(c.column);

  std::vector<u64> residues;
  for (u64 r = 0; r < kTable1Stride; ++r)
    if (std::find(open36.begin(), open36.end(), r % 36) != open36.end()) residues.push_back(r);

  Grid grid;
  for (u64 offset = 0; offset < kTable1Modulus; offset += kTable1Stride)
    for (u64 r : residues) {
      Cell v = class_value(cascade, r + offset, kTable1Modulus);
      if (v && *v < 22) grid.push_back({r, offset, v});
      else grid.push_back({r, offset, std::nullopt});
    }
  return grid;
}

Grid gen_table2(const Cascade& cascade) {
  std::set<u64> classes;
  for (const GridCell& c : gen_table1(cascade))
    if (!c.value) classes.insert(c.column + c.row);

  Grid grid;
  for (u64 row = 0; row < kTable2Rows; ++row)
    for (u64 cls : classes) grid.push_back({cls, row, cascade.classify(cls + kTable1Modulus * row)});
  return grid;
}

std::vector<u64> grid_columns(const Grid& grid) {
  std::vector<u64> cols;
  for (const GridCell& c : grid)
    if (std::find(cols.begin(), cols.end(), c.column) == cols.end()) cols.push_back(c.column);
  return cols;
}

RegressionReport regression(TableId id, const Grid& generated, const GoldenTable& golden) {
  RegressionReport report{id, 0, {}, {}};
  std::map<std::pair<u64, u64>, Cell> derived;
  for (const GridCell& c : generated) derived[{c.column, c.row}] = c.value;

  std::set<std::pair<u64, u64>> seen;
  for (const GridCell& g : golden.cells) {
    const std::pair<u64, u64> key{g.column, g.row};
    seen.insert(key);
    ++report.compared;
    auto it = derived.find(key);
    const std::string where = "(" + std::to_string(g.column) + "," + std::to_string(g.row) + ")";
    if (it == derived.end()) {
      report.mismatches.push_back(where + ": golden " + render_cell(g.value) + ", not generated");
      report.cells.push_back({g.column, g.row, g.value, std::nullopt});
    } else if (it->second != g.value) {
      report.mismatches.push_back(where + ": golden " + render_cell(g.value) + ", derived " +
                                  render_cell(it->second));
      report.cells.push_back({g.column, g.row, g.value, it->second});
    }
  }
  for (const auto& [key, value] : derived)
    if (!seen.count(key)) {
      report.mismatches.push_back("(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                  "): derived " + render_cell(value) + ", absent from golden");
      report.cells.push_back({key.first, key.second, std::nullopt, value});
    }
  return report;
}

RegressionReport regression(const CensusReport& report, const GoldenTable& golden) {
  RegressionReport out{TableId::t3, golden.rows.size() * 4, {}, {}};
  for (const T3Mismatch& m : rarity_regression(report, golden.rows))
    out.mismatches.push_back("q=" + std::to_string(m.q) + " " + m.field + ": golden " + m.expected +
                             ", derived " + m.derived);
  return out;
}

Adjudication adjudicate_t2(const CellMismatch& m) {
  Adjudication a{m.column + kTable1Modulus * m.row, 0, false, ""};
  a.oracle = primary_pretender_oracle(a.base);
  a.derived_agrees = m.derived && *m.derived && **m.derived == a.oracle;
  if (m.golden && *m.golden) {
    const u32 printed = **m.golden;
    if (printed < 4 || is_prime(printed))
      a.reason = "printed " + std::to_string(printed) + " is not composite";
    else if (!is_prime_pretender(printed, a.base))
      a.reason = "printed " + std::to_string(printed) + " is not a pretender to " + std::to_string(a.base);
    else if (a.oracle < printed)
      a.reason = "printed " + std::to_string(printed) + " is a pretender but " + std::to_string(a.oracle) +
                 " is smaller";
  }
  return a;
}

std::string render_grid_csv(TableId id, const Grid& grid) {
  std::ostringstream out;
  out << header_for(id) << '\n';
  for (const GridCell& c : grid) {
    out << c.column << ',';
    if (id != TableId::mod36) out << c.row << ',';
    out << render_cell(c.value) << '\n';
  }
  return out.str();
}

std::string render_grid_txt(TableId id, const Grid& grid) {
  const std::vector<u64> cols = grid_columns(grid);
  std::vector<u64> rows;
  for (const GridCell& c : grid)
    if (std::find(rows.begin(), rows.end(), c.row) == rows.end()) rows.push_back(c.row);

  std::map<std::pair<u64, u64>, Cell> at;
  for (const GridCell& c : grid) at[{c.column, c.row}] = c.value;

  const int width = id == TableId::mod36 ? 3 : 4;
  std::ostringstream out;
  out << std::setw(6) << (id == TableId::mod36 ? "b ==" : "b =") << " |";
  for (u64 col : cols) out << std::setw(width) << col;
  out << '\n' << std::string(8 + width * cols.size(), '-') << '\n';
  for (u64 row : rows) {
    std::string label = id == TableId::mod36 ? "q_b" : (id == TableId::t1 ? "+" : "") + std::to_string(row);
    out << std::setw(6) << label << " |";
    for (u64 col : cols) {
      auto it = at.find({col, row});
      out << std::setw(width) << (it == at.end() ? std::string(" ") : render_cell(it->second));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pretenders
