#pragma once

#include <string>

#include "pretenders/cascade.hpp"
#include "pretenders/census.hpp"

namespace pretenders {

enum class Format { csv, json, txt };

/// Throws std::invalid_argument for anything but csv, json or txt.
Format parse_format(const std::string& name);

/// "kth(m)" as printed in the roots column, e.g. "1st(4)", "22nd(529)".
std::string roots_label(u32 k, u64 m);

/// One row per entry: q, k, m, density numerator and denominator, rarity.
std::string render_cascade(const Cascade& cascade, Format format);

/// q,k,m,first_base,density_num,density_den,rarity (first_base empty if unknown).
std::string render_census_csv(const CensusReport& report);

}  // namespace pretenders
