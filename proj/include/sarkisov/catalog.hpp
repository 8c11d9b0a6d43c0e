// Ambient catalog: the smooth Fano threefolds of Picard rank 1 that can play
// the role of Y (and of the partner Y+). Each entry carries its Fano index r
// and anticanonical degree (-K_Y)^3; r^3 must divide the degree so that
// H^3 = (-K_Y)^3 / r^3 is an integer.
#pragma once

#include "sarkisov/errors.hpp"
#include "sarkisov/ints.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sarkisov {

struct AmbientFano {
    std::string label;
    int index = 0;             // Fano index r, 1 <= r <= 4
    Int anticanonical_degree;  // (-K_Y)^3 > 0

    Int fundamental_cube() const; // H^3 = degree / r^3
};

// Validates one entry; throws Error(invalid_ambient) on bad index, degree,
// or failed divisibility.
void validate_ambient(const AmbientFano& ambient);

// The builtin table: P3 (r=4, 64), Q3 (r=3, 54), V1..V5 (r=2, 8..40),
// X2..X22 (r=1, even degrees 2..22). Order is fixed; search results that
// iterate the catalog inherit it.
std::span<const AmbientFano> builtin_catalog();

// Catalog files: one entry per line, "label index degree", '#' starts a
// comment, blank lines ignored. Throws Error(catalog_error) naming the line
// number on malformed lines, duplicate labels, or entries failing
// validate_ambient.
std::vector<AmbientFano> parse_catalog(std::istream& in, const std::string& origin);
std::vector<AmbientFano> load_catalog(const std::string& path);

// Lookup by label; throws Error(catalog_error) when absent.
const AmbientFano& find_ambient(std::span<const AmbientFano> catalog, const std::string& label);

} // namespace sarkisov
