#include "sarkisov/k3_lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sarkisov {

BinaryForm K3LatticeData::gram_form() const {
    return {2 * n, 2 * d, 2 * g - 2};
}

void validate_k3(const K3LatticeData& lattice) {
    if (lattice.n < 1) {
        throw Error(Errc::domain_error, "K3 polarization needs n >= 1");
    }
    if (lattice.d < 1) {
        throw Error(Errc::domain_error, "K3 curve degree must be >= 1");
    }
    if (lattice.g < 0) {
        throw Error(Errc::domain_error, "K3 curve genus must be >= 0");
    }
}

Int k3_self_intersection(const K3LatticeData& lattice, const Int& a, const Int& b) {
    validate_k3(lattice);
    return 2 * lattice.n * a * a + 2 * lattice.d * a * b + (2 * lattice.g - 2) * b * b;
}

namespace {

// "m divides 2n" in the criterion's sense: false unless m is positive.
bool divides_2n(const Int& m, const Int& n) {
    return m > 0 && (2 * n) % m == 0;
}

} // namespace

CriterionVerdict is_nef_kH_minus_C(const K3LatticeData& lattice, const Int& k) {
    validate_k3(lattice);
    if (k < 1) {
        throw Error(Errc::domain_error, "nef criterion needs k >= 1");
    }
    const Int& n = lattice.n;
    const Int& d = lattice.d;
    const Int& g = lattice.g;
    if (2 * n * k <= d) {
        return {false, "2nk <= d"};
    }
    if (n * k * k - d * k + g - 1 < 0) {
        return {false, "nk^2 - dk + g - 1 < 0"};
    }
    if (2 * n * k - d == 2 * n + 1 && n * k * k - d * k + g == n + 1) {
        return {false, "exceptional pair (2nk - d, nk^2 - dk + g) = (2n + 1, n + 1)"};
    }
    return {true, ""};
}

CriterionVerdict is_free_kH_minus_C(const K3LatticeData& lattice, const Int& k) {
    const auto nef = is_nef_kH_minus_C(lattice, k);
    if (!nef.holds) {
        return {false, "not nef: " + nef.reason};
    }
    const Int& n = lattice.n;
    const Int& d = lattice.d;
    if (d * d - 4 * n * (lattice.g - 1) == 1) {
        if (divides_2n(2 * n * k - d - 1, n)) {
            return {false, "d^2 - 4n(g-1) = 1 and 2nk - d - 1 divides 2n"};
        }
        if (divides_2n(2 * n * k - d + 1, n)) {
            return {false, "d^2 - 4n(g-1) = 1 and 2nk - d + 1 divides 2n"};
        }
    }
    return {true, ""};
}

bool no_rational_curves_obstruction(const K3LatticeData& lattice) {
    validate_k3(lattice);
    const bool holds =
        (2 * lattice.n) % 4 == 0 && lattice.d % 4 == 0 && (2 * lattice.g - 2) % 4 == 0;
    if (holds) {
        // The Gram form is then 0 mod 4, so -2 must be obstructed; cross-check.
        const auto probe = represents(lattice.gram_form(), -2, 4, 4);
        if (probe.status != RepresentabilityVerdict::Status::not_represented) {
            throw Error(Errc::invariant_violation,
                        "4Z lattice failed to obstruct a (-2)-class");
        }
    }
    return holds;
}

Smallness smallness_certificate(const K3LatticeData& lattice, const Int& a, const Int& b,
                                int ambient_index) {
    validate_k3(lattice);
    if (ambient_index < 1 || ambient_index > 4) {
        throw Error(Errc::domain_error, "ambient index must lie in 1..4");
    }
    if (a == 0 && b == 0) {
        throw Error(Errc::non_primitive_class, "zero class has no primitivity");
    }
    if (boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                   boost::multiprecision::abs(b)) != 1) {
        throw Error(Errc::non_primitive_class,
                    "class (" + dec(a) + ", " + dec(b) + ") is not primitive");
    }
    // Certified small when the contracted curve class has square <= -4 and
    // the lattice cannot contain (-2)-curves, ruling out divisorial behavior.
    if (k3_self_intersection(lattice, a, b) <= -4 && no_rational_curves_obstruction(lattice)) {
        return Smallness::small_certified;
    }
    return Smallness::unknown;
}

} // namespace sarkisov
