#pragma once

// Regenerates the residue-class tables from the cascade and diffs them against
// golden data.

#include <optional>
#include <string>
#include <vector>

#include "pretenders/cascade.hpp"
#include "pretenders/census.hpp"
#include "pretenders/golden.hpp"

namespace pretenders {

using Grid = std::vector<GridCell>;

/// The value q_b shared by every b == residue (mod modulus), or nullopt when
/// the class is not decided by its residue. Decided structurally: walk the
/// cascade while each entry's modulus divides `modulus`, stopping at the
/// first that contains the residue.
Cell class_value(const Cascade& cascade, u64 residue, u64 modulus);

/// q_b on each class mod 36.
Grid gen_mod36(const Cascade& cascade);

/// The "?" residues of the mod-36 row, lifted to mod 180, crossed with the
/// offsets 0, 180, ..., 1080. A cell shows q_b in {10, 14, 15, 21} when the
/// class mod 1260 decides it, else "?".
Grid gen_table1(const Cascade& cascade);

/// The "?" classes of Table 1 (mod 1260, ascending) x rows 0..40:
/// q_b for b = class + 1260 * row.
Grid gen_table2(const Cascade& cascade);

/// Column keys of a grid in first-appearance order.
std::vector<u64> grid_columns(const Grid& grid);

struct CellMismatch {
  u64 column;
  u64 row;
  std::optional<Cell> golden;   // absent: not in the golden table
  std::optional<Cell> derived;  // absent: not generated
};

struct RegressionReport {
  TableId id;
  std::size_t compared = 0;
  std::vector<std::string> mismatches;
  std::vector<CellMismatch> cells;  // grid tables only

  bool ok() const { return mismatches.empty(); }
};

/// Cell-by-cell comparison keyed on (column, row). Cells missing from either
/// side count as mismatches.
RegressionReport regression(TableId id, const Grid& generated, const GoldenTable& golden);

/// Table 3: k, m and first base exactly, rarity within +-0.01.
RegressionReport regression(const CensusReport& report, const GoldenTable& golden);

/// Brute-force ruling on a Table 2 mismatch at b = class + 1260 * row.
struct Adjudication {
  u64 base;
  u32 oracle;
  bool derived_agrees;
  std::string reason;  // why the printed value cannot be q_b, if it cannot
};

Adjudication adjudicate_t2(const CellMismatch& m);

std::string render_grid_csv(TableId id, const Grid& grid);
/// Column headers across, one line per row, padded like the printed layout.
std::string render_grid_txt(TableId id, const Grid& grid);

}  // namespace pretenders
