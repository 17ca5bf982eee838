#include "pretenders/golden.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pretenders {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                               const std::vector<std::string>& header) {
  std::ifstream in(path);
  if (!in) throw GoldenError(GoldenError::Kind::io, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw GoldenError(GoldenError::Kind::schema, path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (split(line) != header) throw GoldenError(GoldenError::Kind::schema, path.string() + ": unexpected header");

  std::vector<std::vector<std::string>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields.size() != header.size())
      throw GoldenError(GoldenError::Kind::schema,
                        path.string() + ":" + std::to_string(lineno) + ": wrong field count");
    rows.push_back(std::move(fields));
  }
  return rows;
}

u64 parse_u64(const std::string& s, const std::filesystem::path& path) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw GoldenError(GoldenError::Kind::schema, path.string() + ": not an integer: '" + s + "'");
  return v;
}

Cell parse_cell(const std::string& s, const std::filesystem::path& path) {
  if (s == "?") return std::nullopt;
  return static_cast<u32>(parse_u64(s, path));
}

bool is_decimal(const std::string& s) {
  std::size_t dots = 0;
  for (char c : s) {
    if (c == '.') ++dots;
    else if (c < '0' || c > '9') return false;
  }
  return !s.empty() && dots <= 1 && s.front() != '.' && s.back() != '.';
}

}  // namespace

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::mod36: return "mod36";
    case TableId::t1: return "t1";
    case TableId::t2: return "t2";
    case TableId::t3: return "t3";
  }
  return "?";
}

TableId parse_table_id(std::string_view name) {
  for (TableId id : {TableId::mod36, TableId::t1, TableId::t2, TableId::t3})
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown table '" + std::string(name) + "'");
}

std::string render_cell(const Cell& c) { return c ? std::to_string(*c) : "?"; }

std::string golden_file_name(TableId id) { return std::string(to_string(id)) + ".csv"; }

GoldenTable load_golden(const std::filesystem::path& dir, TableId id) {
  const auto path = dir / golden_file_name(id);
  GoldenTable table{id, {}, {}, "transcribed from the printed table; " + path.filename().string()};
  switch (id) {
    case TableId::mod36:
      for (const auto& f : read_csv(path, {"residue", "value"}))
        table.cells.push_back({parse_u64(f[0], path), 0, parse_cell(f[1], path)});
      break;
    case TableId::t1:
      for (const auto& f : read_csv(path, {"residue", "offset", "value"}))
        table.cells.push_back({parse_u64(f[0], path), parse_u64(f[1], path), parse_cell(f[2], path)});
      break;
    case TableId::t2:
      for (const auto& f : read_csv(path, {"class", "row", "value"})) {
        Cell v = parse_cell(f[2], path);
        if (!v) throw GoldenError(GoldenError::Kind::schema, path.string() + ": '?' not allowed in t2");
        table.cells.push_back({parse_u64(f[0], path), parse_u64(f[1], path), v});
      }
      break;
    case TableId::t3:
      for (const auto& f : read_csv(path, {"q", "k", "m", "first_base", "rarity"})) {
        if (!is_decimal(f[4]))
          throw GoldenError(GoldenError::Kind::schema, path.string() + ": bad rarity '" + f[4] + "'");
        table.rows.push_back({static_cast<u32>(parse_u64(f[0], path)), static_cast<u32>(parse_u64(f[1], path)),
                              parse_u64(f[2], path), parse_u64(f[3], path), f[4]});
      }
      break;
  }
  return table;
}

std::string load_golden_period(const std::filesystem::path& dir) {
  const auto path = dir / "period.txt";
  std::ifstream in(path);
  if (!in) throw GoldenError(GoldenError::Kind::io, "cannot open " + path.string());
  std::string digits;
  std::getline(in, digits);
  if (!digits.empty() && digits.back() == '\r') digits.pop_back();
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw GoldenError(GoldenError::Kind::schema, path.string() + ": expected one line of digits");
  return digits;
}

}  // namespace pretenders
