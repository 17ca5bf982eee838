#include "pretenders/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace pretenders {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "txt") return Format::txt;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string roots_label(u32 k, u64 m) {
  std::string suffix = "th";
  if (k % 100 < 11 || k % 100 > 13) {
    if (k % 10 == 1) suffix = "st";
    else if (k % 10 == 2) suffix = "nd";
    else if (k % 10 == 3) suffix = "rd";
  }
  return std::to_string(k) + suffix + "(" + std::to_string(m) + ")";
}

std::string render_cascade(const Cascade& cascade, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv:
      out << "q,k,m,density_num,density_den,rarity\n";
      for (const auto& e : cascade.entries())
        out << e.q << ',' << e.k << ',' << e.m << ',' << e.density.numerator().get_str() << ','
            << e.density.denominator().get_str() << ',' << e.rarity().render_decimal(2) << '\n';
      break;
    case Format::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& e : cascade.entries())
        rows.push_back({{"q", e.q},
                        {"k", e.k},
                        {"m", e.m},
                        {"density_num", e.density.numerator().get_str()},
                        {"density_den", e.density.denominator().get_str()},
                        {"rarity", e.rarity().render_decimal(2)}});
      out << rows.dump(2) << '\n';
      break;
    }
    case Format::txt:
      out << std::setw(5) << "q" << "  " << std::left << std::setw(10) << "roots" << std::right
          << std::setw(14) << "rarity" << '\n';
      for (const auto& e : cascade.entries())
        out << std::setw(5) << e.q << "  " << std::left << std::setw(10) << roots_label(e.k, e.m)
            << std::right << std::setw(14) << e.rarity().render_decimal(2) << '\n';
      break;
  }
  return out.str();
}

std::string render_census_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "q,k,m,first_base,density_num,density_den,rarity\n";
  for (const CensusRow& r : report.rows) {
    out << r.q << ',' << r.k << ',' << r.m << ',';
    if (r.first_base) out << *r.first_base;
    out << ',' << r.density.numerator().get_str() << ',' << r.density.denominator().get_str() << ','
        << r.rarity_display << '\n';
  }
  return out.str();
}

}  // namespace pretenders
