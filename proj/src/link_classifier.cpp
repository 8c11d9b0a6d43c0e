#include "sarkisov/link_classifier.hpp"

#include "sarkisov/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <utility>

namespace sarkisov {

std::string_view family_name(ContractionFamily f) {
    switch (f) {
    case ContractionFamily::conic_bundle: return "conic_bundle";
    case ContractionFamily::del_pezzo: return "del_pezzo";
    case ContractionFamily::e2: return "E2";
    case ContractionFamily::e3_e4: return "E3_E4";
    case ContractionFamily::e5: return "E5";
    }
    return "unknown";
}

std::span<const PointTypeInvariants> point_type_table() {
    // ((-K)^2.T, (-K).T^2, T^3) of the divisor contracted to a point:
    // E2 contracts to a smooth point, E3/E4 to a quadric point (identical
    // numerology), E5 to a half-point. All share (-K).T^2 = -2.
    static const std::array<PointTypeInvariants, 3> table = {{
        {ContractionFamily::e2, 4, -2, 1},
        {ContractionFamily::e3_e4, 2, -2, 2},
        {ContractionFamily::e5, 1, -2, 4},
    }};
    return table;
}

std::string_view verdict_name(LinkVerdict v) {
    switch (v) {
    case LinkVerdict::e1_e1: return "E1_E1";
    case LinkVerdict::e1_other: return "E1_OTHER";
    case LinkVerdict::not_weak_fano: return "NOT_WEAK_FANO";
    case LinkVerdict::inconclusive: return "INCONCLUSIVE";
    }
    return "unknown";
}

ExclusionResult exclude_conic_bundle(const BlowupSetup& setup, const DiophantineBounds& bounds) {
    // A conic bundle on the other side of the link needs a class D with
    // (-K).D^2 = 2 (the discriminant of a conic fiber).
    const auto q = anticanonical_quadratic_form(setup);
    const auto verdict =
        represents({q.a, q.b, q.c}, 2, bounds.modulus_sweep_max, bounds.search_box);
    ExclusionResult out;
    out.family = ContractionFamily::conic_bundle;
    out.verdict = verdict;
    switch (verdict.status) {
    case RepresentabilityVerdict::Status::not_represented:
        out.excluded = true;
        out.evidence = ExclusionResult::Evidence::congruence_obstruction;
        out.note = "(-K).D^2 = 2 obstructed mod " + dec(verdict.modulus);
        break;
    case RepresentabilityVerdict::Status::represented:
        out.excluded = false;
        out.evidence = ExclusionResult::Evidence::witness;
        out.witness_class = DivisorClass{verdict.x, verdict.y};
        out.note = "class with (-K).D^2 = 2 exists";
        break;
    case RepresentabilityVerdict::Status::unknown:
        out.excluded = false;
        out.evidence = ExclusionResult::Evidence::undecided;
        out.search_box = verdict.search_box;
        out.note = "(-K).D^2 = 2 undecided within bounds";
        break;
    }
    return out;
}

ExclusionResult exclude_del_pezzo(const BlowupSetup& setup) {
    // A del Pezzo fibration needs a fiber class F != 0 with (-K).F^2 = 0,
    // i.e. an isotropic direction of the anticanonical form over Q.
    const auto q = anticanonical_quadratic_form(setup);
    const BinaryForm form{q.a, q.b, q.c};
    ExclusionResult out;
    out.family = ContractionFamily::del_pezzo;
    out.discriminant = form.discriminant();
    if (const auto witness = isotropy_witness(form)) {
        out.excluded = false;
        out.evidence = ExclusionResult::Evidence::witness;
        out.witness_class = DivisorClass{witness->first, witness->second};
        out.note = "anticanonical form is isotropic over Q";
    } else {
        out.excluded = true;
        out.evidence = ExclusionResult::Evidence::non_square_discriminant;
        out.note = "discriminant " + dec(*out.discriminant) + " is not a square";
    }
    return out;
}

namespace {

struct LineWalk {
    bool solvable = false; // gcd divides the target
    Int x0, y0;            // base solution
    Int dx, dy;            // step per unit of the line parameter
    Int gcd;
};

// Parameterize the integral solutions of sH * x + sE * y == target.
LineWalk solve_pairing_line(const Int& s_h, const Int& s_e, const Int& target) {
    LineWalk walk;
    Int u, v;
    walk.gcd = ext_gcd(s_h, s_e, u, v);
    if (walk.gcd == 0) {
        throw Error(Errc::degenerate_pairing, "(-K)^2 pairs to zero with the whole lattice");
    }
    if (target % walk.gcd != 0) {
        return walk;
    }
    const Int scale = target / walk.gcd;
    walk.solvable = true;
    walk.x0 = u * scale;
    walk.y0 = v * scale;
    walk.dx = s_e / walk.gcd;
    walk.dy = -s_h / walk.gcd;
    return walk;
}

// Narrow [lo, hi] so that |c0 + s * t| <= box along the walk; "constrained"
// tracks whether lo/hi hold anything yet. Returns false when empty.
bool parameter_window(const Int& c0, const Int& s, const Int& box, Int& lo, Int& hi,
                      bool& constrained) {
    if (s == 0) {
        return -box <= c0 && c0 <= box;
    }
    Int a, b;
    if (s > 0) {
        a = ceil_div(-box - c0, s);
        b = floor_div(box - c0, s);
    } else {
        a = ceil_div(box - c0, s);
        b = floor_div(-box - c0, s);
    }
    if (constrained) {
        if (a > lo) {
            lo = a;
        }
        if (b < hi) {
            hi = b;
        }
    } else {
        lo = a;
        hi = b;
        constrained = true;
    }
    return lo <= hi;
}

} // namespace

std::optional<DivisorClass> search_class_with_pairings(const BlowupSetup& setup,
                                                       const FlopData& flop, const Int& kk,
                                                       const Int& k_tt, const Int& cube,
                                                       const Int& box) {
    if (box < 1) {
        throw Error(Errc::domain_error, "search box must be >= 1");
    }
    validate_flop_data(setup, flop);
    const auto table = intersection_table(setup);
    const auto q = anticanonical_quadratic_form(setup);

    // All classes with (-K)^2.T == kk live on one affine line in the
    // lattice, since (-K)^2.(xH + yE) = ((-K)^2.H) x + sigma y; walk that
    // line instead of scanning the whole box.
    const auto mk = anticanonical_class(setup);
    const Int pairing_h = triple_product(mk, mk, {1, 0}, table);
    const auto walk = solve_pairing_line(pairing_h, q.sigma, kk);
    if (!walk.solvable) {
        return std::nullopt;
    }
    Int lo = 0, hi = 0;
    bool constrained = false;
    if (!parameter_window(walk.x0, walk.dx, box, lo, hi, constrained) ||
        !parameter_window(walk.y0, walk.dy, box, lo, hi, constrained)) {
        return std::nullopt;
    }
    if (!constrained) {
        throw Error(Errc::degenerate_pairing, "pairing line has no finite direction");
    }
    for (Int t = lo; t <= hi; ++t) {
        const Int x = walk.x0 + walk.dx * t;
        const Int y = walk.y0 + walk.dy * t;
        if (q.evaluate(x, y) != k_tt) {
            continue;
        }
        const DivisorClass candidate{x, y};
        Int c = triple_product(candidate, candidate, candidate, table);
        for (const auto& curve : flop.curves) {
            const Int p = pairing_with_curve(candidate, curve);
            c -= curve.multiplicity * p * p * p;
        }
        if (c == cube) {
            return candidate;
        }
    }
    return std::nullopt;
}

std::vector<ExclusionResult> exclude_point_type(const BlowupSetup& setup, const FlopData& flop,
                                                const DiophantineBounds& bounds) {
    validate_flop_data(setup, flop);
    const auto q = anticanonical_quadratic_form(setup);
    const BinaryForm form{q.a, q.b, q.c};
    std::vector<ExclusionResult> results;
    results.reserve(point_type_table().size());

    // Every point-type family needs (-K).T^2 = -2, so one representability
    // obstruction for -2 excludes all three at once.
    const auto minus2 = represents(form, -2, bounds.modulus_sweep_max, bounds.search_box);
    if (minus2.status == RepresentabilityVerdict::Status::not_represented) {
        for (const auto& row : point_type_table()) {
            ExclusionResult out;
            out.family = row.family;
            out.excluded = true;
            out.evidence = ExclusionResult::Evidence::congruence_obstruction;
            out.verdict = minus2;
            out.note = "(-K).T^2 = -2 obstructed mod " + dec(minus2.modulus);
            results.push_back(std::move(out));
        }
        return results;
    }

    const auto mk = anticanonical_class(setup);
    const Int pairing_h = triple_product(mk, mk, {1, 0}, setup); // (-K)^2.H
    for (const auto& row : point_type_table()) {
        ExclusionResult out;
        out.family = row.family;
        const auto walk = solve_pairing_line(pairing_h, q.sigma, row.kk_t);
        if (!walk.solvable) {
            out.excluded = true;
            out.evidence = ExclusionResult::Evidence::linear_obstruction;
            out.note = "gcd(" + dec(pairing_h) + ", " + dec(q.sigma) +
                       ") does not divide (-K)^2.T = " + dec(row.kk_t);
            results.push_back(std::move(out));
            continue;
        }
        const auto witness =
            search_class_with_pairings(setup, flop, row.kk_t, row.k_tt, row.ttt, bounds.search_box);
        if (witness) {
            out.excluded = false;
            out.evidence = ExclusionResult::Evidence::witness;
            out.witness_class = *witness;
            out.note = "class matches the full invariant triple";
        } else {
            out.excluded = true;
            out.evidence = ExclusionResult::Evidence::box_exhausted;
            out.search_box = bounds.search_box;
            out.note = "no class matches the triple within the box";
        }
        results.push_back(std::move(out));
    }
    return results;
}

std::vector<LinkCandidate> e1_partner_search(const BlowupSetup& setup, const FlopData& flop,
                                             std::span<const AmbientFano> catalog,
                                             const PartnerBounds& bounds) {
    validate_flop_data(setup, flop);
    if (catalog.empty()) {
        throw Error(Errc::catalog_error, "partner search needs a nonempty ambient catalog");
    }
    if (bounds.box < 1 || bounds.d_max < 1 || bounds.g_max < 0) {
        throw Error(Errc::domain_error, "partner bounds must be positive");
    }
    for (const auto& ambient : catalog) {
        validate_ambient(ambient);
    }
    const auto table = intersection_table(setup);
    const auto q = anticanonical_quadratic_form(setup);
    const Int kx3 = q.minus_k_cubed;
    const auto mk = anticanonical_class(setup);
    const Int pairing_h = triple_product(mk, mk, {1, 0}, table); // (-K)^2.H
    const Int pairing_e = q.sigma;                               // (-K)^2.E

    std::vector<LinkCandidate> found;
    for (Int x = -bounds.box; x <= bounds.box; ++x) {
        for (Int y = -bounds.box; y <= bounds.box; ++y) {
            // A = (-K)^2.T and B = (-K).T^2 survive the flop unchanged; on
            // the partner side they must match E1 blowup numerology:
            //   B = 2g+ - 2, A + B = r+ d+, Ttilde^3 = -A - 2B,
            //   (-K_X)^3 = (-K_Y+)^3 - 2 r+ d+ - 2 + 2 g+.
            const Int a_pair = pairing_h * x + pairing_e * y;
            // A is sigma+ = (-K)^2.E+ on the partner side. -K stays nef
            // across the flop and the anticanonical contraction is small, so
            // an E1 end needs A > 0; candidates violating that are spurious.
            if (a_pair < 1) {
                continue;
            }
            const Int b_pair = q.evaluate(x, y);
            if ((b_pair + 2) % 2 != 0) {
                continue;
            }
            const Int g_plus = (b_pair + 2) / 2;
            if (g_plus < 0 || g_plus > bounds.g_max) {
                continue;
            }
            const Int rd_plus = a_pair + b_pair;
            if (rd_plus < 1) {
                continue;
            }
            bool cube_checked = false;
            bool cube_ok = false;
            for (const auto& ambient : catalog) {
                const Int r_plus = ambient.index;
                if (rd_plus % r_plus != 0) {
                    continue;
                }
                const Int d_plus = rd_plus / r_plus;
                if (d_plus < 1 || d_plus > bounds.d_max) {
                    continue;
                }
                if (kx3 != ambient.anticanonical_degree - 2 * rd_plus - 2 + 2 * g_plus) {
                    continue;
                }
                if (!cube_checked) {
                    cube_checked = true;
                    const DivisorClass t{x, y};
                    Int cube = triple_product(t, t, t, table);
                    for (const auto& curve : flop.curves) {
                        const Int p = pairing_with_curve(t, curve);
                        cube -= curve.multiplicity * p * p * p;
                    }
                    cube_ok = cube == -a_pair - 2 * b_pair;
                }
                if (!cube_ok) {
                    break; // the cube test does not depend on the ambient
                }
                LinkCandidate cand;
                cand.partner_ambient = ambient;
                cand.partner_degree = d_plus;
                cand.partner_genus = g_plus;
                cand.partner_exceptional = {x, y};
                const auto [alpha, beta] = in_anticanonical_basis(cand.partner_exceptional, setup);
                cand.alpha = alpha;
                cand.beta = beta;
                found.push_back(std::move(cand));
            }
        }
    }
    return found;
}

namespace {

void add_hypothesis(std::vector<std::string>& list, const std::string& token) {
    for (const auto& t : list) {
        if (t == token) {
            return;
        }
    }
    list.push_back(token);
}

} // namespace

LinkClassification classify(const BlowupSetup& setup, std::span<const AmbientFano> catalog,
                            const ClassifyOptions& options) {
    validate_setup(setup);
    LinkClassification out;
    out.setup = setup;
    out.options = options;

    out.weak_fano = assess_weak_fano(setup, options.gate);
    for (const auto& h : out.weak_fano.hypotheses) {
        add_hypothesis(out.hypotheses, h);
    }
    if (!out.weak_fano.big) {
        out.verdict = LinkVerdict::not_weak_fano;
        out.reason = "(-K_X)^3 = " + dec(out.weak_fano.minus_k_cubed) + " is not positive";
        return out;
    }
    if (out.weak_fano.nef != NefCertificate::certified) {
        out.verdict = LinkVerdict::inconclusive;
        out.reason = "nefness of -K_X not certified (" + out.weak_fano.nef_note + ")";
        return out;
    }
    if (out.weak_fano.ample != AmpleVerdict::not_ample) {
        out.verdict = LinkVerdict::inconclusive;
        if (out.weak_fano.secant_domain_warning) {
            out.reason = "no secant model for degree < 5";
        } else if (out.weak_fano.quadrisecants && *out.weak_fano.quadrisecants < 1) {
            out.reason = "no 4-secant witness (count = " + dec(*out.weak_fano.quadrisecants) +
                         "), -K_X may be ample";
        } else {
            out.reason = "non-ampleness not witnessed (general-position hypothesis disabled)";
        }
        return out;
    }

    // Anticanonical model: record the contracted ray and, when available,
    // the K3 certificate that the contraction is small. An uncertified
    // check is carried as an explicit hypothesis rather than a hard stop.
    out.smallness = assess_smallness(setup, options.gate);
    if (out.smallness->certificate != Smallness::small_certified) {
        add_hypothesis(out.hypotheses, hypothesis::smallness_assumed);
    }

    out.secants = flopping_profile(setup);
    FlopData flop;
    flop.curves.push_back({out.secants->h_deg, out.secants->e_deg, out.secants->count});
    out.flop = flop;
    out.flop_defect = defect(setup, flop);
    add_hypothesis(out.hypotheses, hypothesis::atiyah_flop);

    out.exclusions.push_back(exclude_conic_bundle(setup, options.diophantine));
    out.exclusions.push_back(exclude_del_pezzo(setup));
    for (auto& r : exclude_point_type(setup, flop, options.diophantine)) {
        out.exclusions.push_back(std::move(r));
    }

    out.partners = e1_partner_search(setup, flop, catalog, options.partner);

    std::string undecided, witnessed;
    for (const auto& r : out.exclusions) {
        if (r.excluded) {
            continue;
        }
        auto& bucket =
            r.evidence == ExclusionResult::Evidence::undecided ? undecided : witnessed;
        if (!bucket.empty()) {
            bucket += ", ";
        }
        bucket += family_name(r.family);
    }
    if (!undecided.empty()) {
        out.verdict = LinkVerdict::inconclusive;
        out.reason = "representability undecided for " + undecided + " within bounds";
    } else if (!witnessed.empty()) {
        out.verdict = LinkVerdict::e1_other;
        out.reason = "alternative contraction numerology admitted by " + witnessed;
    } else if (out.partners.size() == 1) {
        out.verdict = LinkVerdict::e1_e1;
        const auto& p = out.partners.front();
        out.reason = "unique E1 partner: " + p.partner_ambient.label + " curve of degree " +
                     dec(p.partner_degree) + " genus " + dec(p.partner_genus);
    } else if (out.partners.size() > 1) {
        out.verdict = LinkVerdict::e1_other;
        out.reason = "multiple E1 partner candidates (" + std::to_string(out.partners.size()) +
                     ") within bounds";
    } else {
        out.verdict = LinkVerdict::inconclusive;
        out.reason = "all alternatives excluded but no E1 partner within bounds";
    }
    return out;
}

} // namespace sarkisov
