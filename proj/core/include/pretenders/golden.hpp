#pragma once

// Golden regression data transcribed from the printed tables, stored as CSV.
//   t3.csv    q,k,m,first_base,rarity
//   t1.csv    residue,offset,value      (value may be "?")
//   t2.csv    class,row,value
//   mod36.csv residue,value             (value may be "?")
//   period.txt the period's decimal digits on one line

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pretenders/arith.hpp"

namespace pretenders {

enum class TableId { mod36, t1, t2, t3 };

std::string_view to_string(TableId id);
/// Throws std::invalid_argument for an unknown name.
TableId parse_table_id(std::string_view name);

/// Distinguishes unreadable files from malformed contents.
class GoldenError : public std::runtime_error {
 public:
  enum class Kind { io, schema };
  GoldenError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A table value; nullopt is the "?" cell.
using Cell = std::optional<u32>;

std::string render_cell(const Cell& c);

/// One cell of a residue-class grid. For mod36 the row is always 0; for t1 the
/// column is the residue mod 180 and the row its offset; for t2 the column is
/// the class mod 1260 and the row the multiple of 1260 added.
struct GridCell {
  u64 column;
  u64 row;
  Cell value;

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

struct GoldenT3Row {
  u32 q;
  u32 k;
  u64 m;
  u64 first_base;
  std::string rarity;
};

struct GoldenTable {
  TableId id;
  std::vector<GridCell> cells;     // mod36, t1, t2
  std::vector<GoldenT3Row> rows;   // t3
  std::string provenance;
};

GoldenTable load_golden(const std::filesystem::path& dir, TableId id);
std::string load_golden_period(const std::filesystem::path& dir);

/// File name of a table's CSV asset inside the golden directory.
std::string golden_file_name(TableId id);

}  // namespace pretenders
