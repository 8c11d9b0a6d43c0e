// The classifier proper: rule out every non-E1 way the anticanonical model
// of X+ could contract (conic bundles, del Pezzo fibrations, the three
// point-type divisorial families), then search for the E1 partner data
// (Y+, d+, g+) solving the two-ray game numerology. All verdicts are either
// exact or explicitly bounded by the recorded search boxes.
#pragma once

#include "sarkisov/binary_forms.hpp"
#include "sarkisov/catalog.hpp"
#include "sarkisov/divisor_lattice.hpp"
#include "sarkisov/flop_calculus.hpp"
#include "sarkisov/secant_calculus.hpp"
#include "sarkisov/weak_fano_gate.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sarkisov {

enum class ContractionFamily { conic_bundle, del_pezzo, e2, e3_e4, e5 };

std::string_view family_name(ContractionFamily f);

// Numerical fingerprint ((-K)^2.T, (-K).T^2, T^3) of the exceptional divisor
// of each point-type divisorial contraction.
struct PointTypeInvariants {
    ContractionFamily family;
    Int kk_t;
    Int k_tt;
    Int ttt;
};

std::span<const PointTypeInvariants> point_type_table();

struct DiophantineBounds {
    Int modulus_sweep_max = 64;
    Int search_box = 1000;
};

struct PartnerBounds {
    Int box = 64;   // |x|, |y| of candidate classes
    Int d_max = 64; // cap on partner degree
    Int g_max = 64; // cap on partner genus
};

struct ExclusionResult {
    enum class Evidence {
        congruence_obstruction, // representability NOT_REPRESENTED (modulus)
        non_square_discriminant,
        linear_obstruction,     // gcd of pairings does not divide the target
        box_exhausted,          // bounded search found nothing
        witness,                // a class realizing the family's numerology
        undecided,              // representability UNKNOWN within bounds
    };

    ContractionFamily family;
    bool excluded = false;
    Evidence evidence = Evidence::undecided;
    std::optional<RepresentabilityVerdict> verdict; // congruence/undecided cases
    std::optional<Int> discriminant;                // del Pezzo case
    std::optional<DivisorClass> witness_class;      // witness case
    std::optional<Int> search_box;                  // bounded cases
    std::string note;
};

// Conic bundle: needs a class with (-K).D^2 == 2; decided by represents().
ExclusionResult exclude_conic_bundle(const BlowupSetup& setup, const DiophantineBounds& bounds = {});

// Del Pezzo fibration: needs an isotropic direction of the anticanonical
// form; decided exactly by the discriminant.
ExclusionResult exclude_del_pezzo(const BlowupSetup& setup);

// Point types E2/E3-E4/E5: needs an integral class matching the full triple
// of invariants. A represents(q, -2) obstruction kills all three at once;
// otherwise each family is settled by a linear-equation walk inside the box.
std::vector<ExclusionResult> exclude_point_type(const BlowupSetup& setup, const FlopData& flop,
                                                const DiophantineBounds& bounds = {});

// First class T = xH + yE with |x|, |y| <= box satisfying
// (-K)^2.T == kk, (-K).T^2 == k_tt, Ttilde^3 == cube (deterministic order).
std::optional<DivisorClass> search_class_with_pairings(const BlowupSetup& setup,
                                                       const FlopData& flop, const Int& kk,
                                                       const Int& k_tt, const Int& cube,
                                                       const Int& box);

struct LinkCandidate {
    AmbientFano partner_ambient;
    Int partner_degree; // d+
    Int partner_genus;  // g+
    DivisorClass partner_exceptional; // Etilde+ in the (H, E) basis
    Rat alpha, beta;                  // same class in the (-K, E) basis
};

// Scan |x|, |y| <= bounds.box for classes T whose flopped invariants
//   A = (-K)^2.T, B = (-K).T^2, Ttilde^3 = -A - 2B,
//   g+ = (B + 2)/2 integral in [0, g_max],
//   r+ d+ = A + B with d+ in [1, d_max],
//   (-K_X)^3 == (-K_Y+)^3 - 2 r+ d+ - 2 + 2 g+
// match some catalog ambient. Empty catalog -> Error(catalog_error).
std::vector<LinkCandidate> e1_partner_search(const BlowupSetup& setup, const FlopData& flop,
                                             std::span<const AmbientFano> catalog,
                                             const PartnerBounds& bounds = {});

enum class LinkVerdict { e1_e1, e1_other, not_weak_fano, inconclusive };

std::string_view verdict_name(LinkVerdict v);

struct ClassifyOptions {
    GateOptions gate;
    DiophantineBounds diophantine;
    PartnerBounds partner;
};

struct LinkClassification {
    BlowupSetup setup;
    WeakFanoReport weak_fano;
    std::optional<SmallnessReport> smallness;
    std::optional<SecantProfile> secants;
    std::optional<FlopData> flop;
    std::optional<FlopDefect> flop_defect;
    std::vector<ExclusionResult> exclusions;
    std::vector<LinkCandidate> partners;
    LinkVerdict verdict = LinkVerdict::inconclusive;
    std::string reason;
    std::vector<std::string> hypotheses;
    ClassifyOptions options; // bounds echoed so empty results stay qualified
};

// Full pipeline. E1_E1 requires every exclusion to hold and exactly one
// partner candidate; failed gates degrade to NOT_WEAK_FANO or INCONCLUSIVE
// rather than guessing. An uncertified smallness check is recorded as the
// hypothesis "smallness:assumed" and does not block the verdict.
LinkClassification classify(const BlowupSetup& setup, std::span<const AmbientFano> catalog,
                            const ClassifyOptions& options = {});

} // namespace sarkisov
