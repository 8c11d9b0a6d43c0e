#include "sarkisov/flop_calculus.hpp"

#include "sarkisov/errors.hpp"

namespace sarkisov {

void validate_flop_data(const BlowupSetup& setup, const FlopData& flop) {
    validate_setup(setup);
    const Int r = setup.ambient.index;
    for (const auto& curve : flop.curves) {
        if (curve.multiplicity < 1) {
            throw Error(Errc::invariant_violation, "flopping curve multiplicity must be >= 1");
        }
        if (r * curve.h_deg - curve.e_deg != 0) {
            throw Error(Errc::invariant_violation,
                        "flopping curve (H.l, E.l) = (" + dec(curve.h_deg) + ", " +
                            dec(curve.e_deg) + ") is not K-trivial for index " + dec(r));
        }
    }
}

Int pairing_with_curve(const DivisorClass& d, const FlopCurve& curve) {
    return d.h * curve.h_deg + d.e * curve.e_deg;
}

Int cube_across_flop(const Int& cube, std::span<const std::pair<Int, Int>> pairing_mults) {
    Int out = cube;
    for (const auto& [pairing, mult] : pairing_mults) {
        out -= mult * pairing * pairing * pairing;
    }
    return out;
}

Int strict_transform_cube(const DivisorClass& d, const BlowupSetup& setup, const FlopData& flop) {
    validate_flop_data(setup, flop);
    Int cube = triple_product(d, d, d, setup);
    for (const auto& curve : flop.curves) {
        const Int p = pairing_with_curve(d, curve);
        cube -= curve.multiplicity * p * p * p;
    }
    return cube;
}

FlopDefect defect(const BlowupSetup& setup, const FlopData& flop) {
    validate_flop_data(setup, flop);
    // e = E^3 - Etilde^3 = sum mult (E.l)^3; normalized by r^3 it counts the
    // flopping curves when each meets E with multiplicity r.
    Int e = 0;
    for (const auto& curve : flop.curves) {
        e += curve.multiplicity * curve.e_deg * curve.e_deg * curve.e_deg;
    }
    const Int r = setup.ambient.index;
    return {e, Rat(e, r * r * r)};
}

FlopSidePairings flop_side_pairings(const DivisorClass& d, const BlowupSetup& setup,
                                    const FlopData& flop) {
    // K-triviality keeps both anticanonical pairings unchanged across the
    // flop; only the pure cube needs the correction term.
    const auto k = anticanonical_class(setup);
    FlopSidePairings out;
    out.kk_d = triple_product(k, k, d, setup);
    out.k_dd = triple_product(k, d, d, setup);
    out.cube = strict_transform_cube(d, setup, flop);
    return out;
}

} // namespace sarkisov
