#include "sarkisov/secant_calculus.hpp"

#include "sarkisov/errors.hpp"

namespace sarkisov {

Int quadrisecant_count(const Int& degree, const Int& genus) {
    if (degree < 5) {
        throw Error(Errc::domain_error, "quadrisecant count requires degree >= 5");
    }
    if (genus < 0) {
        throw Error(Errc::domain_error, "genus must be >= 0");
    }
    const Int& d = degree;
    const Int& g = genus;
    // N = (d-2)(d-3)^2(d-4)/12 - (d^2 - 7d + 13 - g) g / 2, combined over 12.
    const Int numerator = (d - 2) * (d - 3) * (d - 3) * (d - 4) - 6 * (d * d - 7 * d + 13 - g) * g;
    if (numerator % 12 != 0) {
        throw Error(Errc::domain_error, "quadrisecant formula returned a non-integer");
    }
    return numerator / 12;
}

SecantProfile flopping_profile(const BlowupSetup& setup) {
    validate_setup(setup);
    if (setup.ambient.index != 4) {
        throw Error(Errc::unsupported_ambient,
                    "4-secant flop model is only available for the index-4 ambient");
    }
    SecantProfile p;
    p.count = quadrisecant_count(setup.degree, setup.genus);
    p.h_deg = 1;
    p.e_deg = 4;
    p.anticanonical_degree = Int(setup.ambient.index) * p.h_deg - p.e_deg; // = 0
    return p;
}

} // namespace sarkisov
