#pragma once

#include <iosfwd>
#include <string>

#include "pbern/pbern.hpp"

namespace pbern {

/// CSV layout: header "n,p,numerator,denominator", one row per cell,
/// n-major order, '\n' line endings. Rationals travel as separate exact
/// integer fields, never as decimals.
void write_table_csv(const PBernoulliTable& table, std::ostream& os);

/// JSON layout: top-level array of {"n", "p", "numerator", "denominator"}
/// objects in the same n-major order; numerator/denominator are decimal
/// strings so arbitrary precision survives any JSON reader.
void write_table_json(const PBernoulliTable& table, std::ostream& os);

std::string table_to_csv(const PBernoulliTable& table);
std::string table_to_json(const PBernoulliTable& table);

/// Inverse of write_table_csv / write_table_json: rebuilds the exact grid.
/// Throws std::runtime_error on malformed input or an incomplete grid.
PBernoulliTable parse_table_csv(std::istream& is);
PBernoulliTable parse_table_json(std::istream& is);

}  // namespace pbern
