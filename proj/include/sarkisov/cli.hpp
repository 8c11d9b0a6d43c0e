// In-process CLI driver so tests can exercise the tool without spawning.
// Exit codes: 0 conclusive verdict (or informational subcommand), 2 the
// classification ran but is INCONCLUSIVE, 1 usage or input errors.
#pragma once

#include "sarkisov/divisor_lattice.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace sarkisov {

// Parses "4H-1E" style expressions: signed terms with an optional integer
// coefficient and a mandatory H or E, whitespace ignored. Throws
// Error(parse_error) pointing at the offending position.
DivisorClass parse_divisor(const std::string& text);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sarkisov
