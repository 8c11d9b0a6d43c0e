// Entry gates of the pipeline: is -K_X big, is it nef (certified through the
// quartic K3 route when the ambient is P3), is it non-ample (witnessed by
// 4-secants), and is the anticanonical contraction small (K3 smallness
// certificate on the contracted ray).
#pragma once

#include "sarkisov/divisor_lattice.hpp"
#include "sarkisov/k3_lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sarkisov {

// Hypothesis tokens recorded whenever a verdict leans on them.
namespace hypothesis {
inline constexpr const char* k3_member = "k3:curve-on-quartic-pic-rank-2";
inline constexpr const char* k3_restriction = "k3:restriction-surjective";
inline constexpr const char* general_position = "curve:general-position";
inline constexpr const char* atiyah_flop = "flop:atiyah-model";
inline constexpr const char* smallness_assumed = "smallness:assumed";
} // namespace hypothesis

struct GateOptions {
    // Assume C lies on a smooth quartic K3 with Picard rank 2 and that the
    // restriction map of linear systems is surjective, enabling the nef
    // certificate. Off -> nefness stays UNKNOWN.
    bool k3_quartic_hypothesis = true;
    // Assume the curve is in general position, so a positive 4-secant count
    // witnesses non-ampleness. Off -> ampleness stays POSSIBLY_AMPLE.
    bool curve_general_position = true;
};

enum class NefCertificate { certified, unknown };
enum class AmpleVerdict { not_ample, possibly_ample };

struct WeakFanoReport {
    Int minus_k_cubed;
    bool big = false;
    NefCertificate nef = NefCertificate::unknown;
    std::string nef_note;
    AmpleVerdict ample = AmpleVerdict::possibly_ample;
    std::optional<Int> quadrisecants;  // set when d >= 5
    bool secant_domain_warning = false; // d < 5: no secant model, not an error
    std::vector<std::string> hypotheses;
};

WeakFanoReport assess_weak_fano(const BlowupSetup& setup, const GateOptions& options = {});

// Primitive generator of the ray contracted by |-K_X|: the primitive (a, b)
// with (-K)^2.(aH + bE) == 0, normalized so the H coefficient is positive
// (or (0, 1) if it vanishes). Throws Error(degenerate_pairing) when
// (-K)^2.H == (-K)^2.E == 0.
struct ContractedRay {
    DivisorClass cls;
    Int pairing_h; // (-K)^2 . H
    Int pairing_e; // (-K)^2 . E
};

ContractedRay contracted_ray_class(const BlowupSetup& setup);

struct SmallnessReport {
    std::optional<DivisorClass> contracted;
    Smallness certificate = Smallness::unknown;
    std::string note;
};

// Maps the contracted ray into the K3 lattice (H -> H_S, E -> C, n = 2) and
// runs smallness_certificate. Non-P3 ambients report UNKNOWN with a note.
SmallnessReport assess_smallness(const BlowupSetup& setup, const GateOptions& options = {});

} // namespace sarkisov
