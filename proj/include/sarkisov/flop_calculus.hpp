// Transport of cubical data across an Atiyah flop in disjoint (-1, -1)
// curves l_i: linear pairings are unchanged while cubes pick up
//   Dtilde^3 = D^3 - sum_i mult_i (D . l_i)^3.
// Flopping curves must be K-trivial, which on the curve-blowup lattice means
// r * (H.l) == (E.l).
#pragma once

#include "sarkisov/divisor_lattice.hpp"
#include "sarkisov/ints.hpp"

#include <span>
#include <utility>
#include <vector>

namespace sarkisov {

struct FlopCurve {
    Int h_deg;        // H . l
    Int e_deg;        // E . l
    Int multiplicity; // number of such curves, >= 1
};

struct FlopData {
    std::vector<FlopCurve> curves;
};

// Checks multiplicity >= 1 and K-triviality of every curve against the
// setup's ambient index; throws Error(invariant_violation).
void validate_flop_data(const BlowupSetup& setup, const FlopData& flop);

// D . l for one curve class.
Int pairing_with_curve(const DivisorClass& d, const FlopCurve& curve);

// Core correction: cube - sum mult * p^3 over (pairing, multiplicity) pairs.
Int cube_across_flop(const Int& cube, std::span<const std::pair<Int, Int>> pairing_mults);

// Dtilde^3 on the flopped side for D = xH + yE.
Int strict_transform_cube(const DivisorClass& d, const BlowupSetup& setup, const FlopData& flop);

struct FlopDefect {
    Int e;          // E^3 - Etilde^3 = sum mult (E.l)^3
    Rat normalized; // e / r^3
};

FlopDefect defect(const BlowupSetup& setup, const FlopData& flop);

// The three invariants that survive to the flopped side for a class D:
// (-K)^2.D and (-K).D^2 verbatim (K-trivial curves), the cube corrected.
struct FlopSidePairings {
    Int kk_d;  // (-K)^2 . D
    Int k_dd;  // (-K) . D^2
    Int cube;  // Dtilde^3
};

FlopSidePairings flop_side_pairings(const DivisorClass& d, const BlowupSetup& setup,
                                    const FlopData& flop);

} // namespace sarkisov
