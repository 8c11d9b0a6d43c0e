#include "sarkisov/weak_fano_gate.hpp"

#include "sarkisov/errors.hpp"
#include "sarkisov/secant_calculus.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sarkisov {

namespace {

bool is_p3(const AmbientFano& a) {
    return a.index == 4 && a.fundamental_cube() == 1;
}

} // namespace

WeakFanoReport assess_weak_fano(const BlowupSetup& setup, const GateOptions& options) {
    validate_setup(setup);
    WeakFanoReport report;
    report.minus_k_cubed = anticanonical_cube(setup);
    report.big = report.minus_k_cubed > 0;

    // Nefness: certified through the quartic K3 route only. C sits on a
    // smooth quartic S (n = 2) and -K_X restricts to 4H_S - C there, so
    // freeness of that class on S pulls back to nefness upstairs.
    if (!is_p3(setup.ambient)) {
        report.nef = NefCertificate::unknown;
        report.nef_note = "no nef certificate for this ambient";
    } else if (!options.k3_quartic_hypothesis) {
        report.nef = NefCertificate::unknown;
        report.nef_note = "K3 membership hypothesis disabled";
    } else {
        const K3LatticeData lattice{2, setup.degree, setup.genus};
        const auto free = is_free_kH_minus_C(lattice, 4);
        if (free.holds) {
            report.nef = NefCertificate::certified;
            report.nef_note = "4H_S - C base point free on the quartic K3";
            report.hypotheses.push_back(hypothesis::k3_member);
            report.hypotheses.push_back(hypothesis::k3_restriction);
        } else {
            report.nef = NefCertificate::unknown;
            report.nef_note = free.reason;
        }
    }

    // Non-ampleness: witnessed by 4-secant lines (K-trivial curves) when the
    // secant model applies and the curve is in general position.
    if (setup.degree < 5) {
        report.secant_domain_warning = true;
        report.ample = AmpleVerdict::possibly_ample;
    } else {
        const Int n = quadrisecant_count(setup.degree, setup.genus);
        report.quadrisecants = n;
        if (n >= 1 && options.curve_general_position && is_p3(setup.ambient)) {
            report.ample = AmpleVerdict::not_ample;
            report.hypotheses.push_back(hypothesis::general_position);
        } else {
            report.ample = AmpleVerdict::possibly_ample;
        }
    }
    return report;
}

ContractedRay contracted_ray_class(const BlowupSetup& setup) {
    const auto table = intersection_table(setup);
    const auto k = anticanonical_class(setup);
    ContractedRay ray;
    ray.pairing_h = triple_product(k, k, {1, 0}, table);
    ray.pairing_e = triple_product(k, k, {0, 1}, table);
    if (ray.pairing_h == 0 && ray.pairing_e == 0) {
        throw Error(Errc::degenerate_pairing, "(-K)^2 pairs to zero with the whole lattice");
    }
    // Kernel of D -> (-K)^2.D is spanned by (pairing_e, -pairing_h).
    Int a = ray.pairing_e;
    Int b = -ray.pairing_h;
    const Int g = boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                             boost::multiprecision::abs(b));
    a /= g;
    b /= g;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    ray.cls = {a, b};
    return ray;
}

SmallnessReport assess_smallness(const BlowupSetup& setup, const GateOptions& options) {
    validate_setup(setup);
    SmallnessReport report;
    const auto ray = contracted_ray_class(setup);
    report.contracted = ray.cls;
    if (triple_product(anticanonical_class(setup), anticanonical_class(setup), ray.cls, setup) !=
        0) {
        throw Error(Errc::invariant_violation, "contracted ray does not pair to zero");
    }
    if (!is_p3(setup.ambient)) {
        report.certificate = Smallness::unknown;
        report.note = "smallness certificate needs the quartic K3 route (index-4 ambient)";
        return report;
    }
    if (!options.k3_quartic_hypothesis) {
        report.certificate = Smallness::unknown;
        report.note = "K3 membership hypothesis disabled";
        return report;
    }
    // H -> H_S, E -> C on the quartic; the contracted ray maps verbatim.
    const K3LatticeData lattice{2, setup.degree, setup.genus};
    report.certificate = smallness_certificate(lattice, ray.cls.h, ray.cls.e, setup.ambient.index);
    if (report.certificate == Smallness::small_certified) {
        report.note = "contracted class has square <= -4 in a 4Z lattice";
    } else if (k3_self_intersection(lattice, ray.cls.h, ray.cls.e) > -4) {
        report.note = "contracted class square exceeds -4";
    } else {
        report.note = "lattice admits self-intersections outside 4Z";
    }
    return report;
}

} // namespace sarkisov
