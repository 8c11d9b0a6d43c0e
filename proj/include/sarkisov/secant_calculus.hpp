// Enumerative input for the flop: the classical count of 4-secant lines to a
// general smooth space curve of degree d and genus g,
//   N = (d-2)(d-3)^2(d-4)/12 - (d^2 - 7d + 13 - g) g / 2,
// valid for d >= 5. On X = Bl_C(P3) the strict transform of a 4-secant has
// H.l = 1, E.l = 4, hence (-K_X).l = 0: these are the flopping curves.
#pragma once

#include "sarkisov/divisor_lattice.hpp"
#include "sarkisov/ints.hpp"

namespace sarkisov {

// d >= 5, g >= 0, else Error(domain_error). Also throws domain_error if the
// two fractions fail to combine to an integer (they never do on the valid
// domain; the check guards against misuse).
Int quadrisecant_count(const Int& degree, const Int& genus);

struct SecantProfile {
    Int count;                // number of 4-secant lines
    Int h_deg;                // H . l = 1
    Int e_deg;                // E . l = 4
    Int anticanonical_degree; // (-K_X) . l = r * h_deg - e_deg
};

// Only the index-4 ambient (P3) has this secant model; other ambients throw
// Error(unsupported_ambient). degree < 5 propagates the domain_error above.
SecantProfile flopping_profile(const BlowupSetup& setup);

} // namespace sarkisov
