#include "sarkisov/reports.hpp"

#include "sarkisov/errors.hpp"

#include <iomanip>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

namespace sarkisov {

namespace {

const char* smallness_name(Smallness s) {
    return s == Smallness::small_certified ? "SMALL_CERTIFIED" : "UNKNOWN";
}

const char* nef_name(NefCertificate n) {
    return n == NefCertificate::certified ? "CERTIFIED" : "UNKNOWN";
}

const char* ample_name(AmpleVerdict a) {
    return a == AmpleVerdict::not_ample ? "NOT_AMPLE" : "POSSIBLY_AMPLE";
}

const char* evidence_name(ExclusionResult::Evidence e) {
    switch (e) {
    case ExclusionResult::Evidence::congruence_obstruction: return "congruence_obstruction";
    case ExclusionResult::Evidence::non_square_discriminant: return "non_square_discriminant";
    case ExclusionResult::Evidence::linear_obstruction: return "linear_obstruction";
    case ExclusionResult::Evidence::box_exhausted: return "box_exhausted";
    case ExclusionResult::Evidence::witness: return "witness";
    case ExclusionResult::Evidence::undecided: return "undecided";
    }
    return "unknown";
}

// Display form of a verdict for text reports ("E1-E1" etc.).
std::string display_verdict(LinkVerdict v) {
    switch (v) {
    case LinkVerdict::e1_e1: return "E1-E1";
    case LinkVerdict::e1_other: return "E1-other";
    case LinkVerdict::not_weak_fano: return "NOT_WEAK_FANO";
    case LinkVerdict::inconclusive: return "INCONCLUSIVE";
    }
    return "unknown";
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) {
            out += sep;
        }
        out += item;
    }
    return out;
}

ordered_json verdict_json(const RepresentabilityVerdict& v) {
    ordered_json j;
    switch (v.status) {
    case RepresentabilityVerdict::Status::represented:
        j["status"] = "REPRESENTED";
        j["witness"] = ordered_json{{"x", dec(v.x)}, {"y", dec(v.y)}};
        break;
    case RepresentabilityVerdict::Status::not_represented:
        j["status"] = "NOT_REPRESENTED";
        j["modulus"] = dec(v.modulus);
        break;
    case RepresentabilityVerdict::Status::unknown:
        j["status"] = "UNKNOWN";
        j["search_box"] = dec(v.search_box);
        break;
    }
    return j;
}

} // namespace

ordered_json classification_json(const LinkClassification& c) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;

    j["setup"] = ordered_json{{"ambient", c.setup.ambient.label},
                              {"ambient_index", c.setup.ambient.index},
                              {"ambient_degree", dec(c.setup.ambient.anticanonical_degree)},
                              {"degree", dec(c.setup.degree)},
                              {"genus", dec(c.setup.genus)}};

    const auto& wf = c.weak_fano;
    ordered_json jwf{{"minus_k_cubed", dec(wf.minus_k_cubed)},
                     {"big", wf.big},
                     {"nef", nef_name(wf.nef)},
                     {"nef_note", wf.nef_note},
                     {"ample", ample_name(wf.ample)}};
    if (wf.quadrisecants) {
        jwf["quadrisecants"] = dec(*wf.quadrisecants);
    }
    jwf["secant_domain_warning"] = wf.secant_domain_warning;
    j["weak_fano"] = std::move(jwf);

    if (c.smallness) {
        ordered_json js;
        if (c.smallness->contracted) {
            js["contracted_class"] = to_string(*c.smallness->contracted);
        }
        js["certificate"] = smallness_name(c.smallness->certificate);
        js["note"] = c.smallness->note;
        j["smallness"] = std::move(js);
    } else {
        j["smallness"] = nullptr;
    }

    if (c.flop) {
        ordered_json curves = ordered_json::array();
        for (const auto& curve : c.flop->curves) {
            curves.push_back(ordered_json{{"h_deg", dec(curve.h_deg)},
                                          {"e_deg", dec(curve.e_deg)},
                                          {"multiplicity", dec(curve.multiplicity)}});
        }
        ordered_json jf{{"curves", std::move(curves)}};
        if (c.flop_defect) {
            jf["defect"] = dec(c.flop_defect->e);
            jf["defect_over_r3"] = dec(c.flop_defect->normalized);
        }
        j["flop"] = std::move(jf);
    } else {
        j["flop"] = nullptr;
    }

    ordered_json exclusions = ordered_json::array();
    for (const auto& r : c.exclusions) {
        ordered_json je{{"family", std::string(family_name(r.family))},
                        {"excluded", r.excluded},
                        {"evidence", evidence_name(r.evidence)}};
        if (r.verdict) {
            je["representability"] = verdict_json(*r.verdict);
        }
        if (r.discriminant) {
            je["discriminant"] = dec(*r.discriminant);
        }
        if (r.witness_class) {
            je["witness_class"] = to_string(*r.witness_class);
        }
        if (r.search_box) {
            je["search_box"] = dec(*r.search_box);
        }
        je["note"] = r.note;
        exclusions.push_back(std::move(je));
    }
    j["exclusions"] = std::move(exclusions);

    ordered_json partners = ordered_json::array();
    for (const auto& p : c.partners) {
        partners.push_back(ordered_json{{"ambient", p.partner_ambient.label},
                                        {"degree", dec(p.partner_degree)},
                                        {"genus", dec(p.partner_genus)},
                                        {"exceptional_class", to_string(p.partner_exceptional)},
                                        {"alpha", dec(p.alpha)},
                                        {"beta", dec(p.beta)}});
    }
    j["partners"] = std::move(partners);

    j["verdict"] = std::string(verdict_name(c.verdict));
    j["reason"] = c.reason;
    j["hypotheses"] = c.hypotheses;
    j["bounds"] = ordered_json{{"modulus_sweep_max", dec(c.options.diophantine.modulus_sweep_max)},
                               {"search_box", dec(c.options.diophantine.search_box)},
                               {"partner_box", dec(c.options.partner.box)},
                               {"partner_d_max", dec(c.options.partner.d_max)},
                               {"partner_g_max", dec(c.options.partner.g_max)}};
    return j;
}

std::string render_classification_text(const LinkClassification& c) {
    std::ostringstream out;
    out << "Sarkisov link classification: " << c.setup.ambient.label << " blowup of a curve of degree "
        << c.setup.degree << " genus " << c.setup.genus << "\n";
    out << "  (-K_X)^3 = " << c.weak_fano.minus_k_cubed << (c.weak_fano.big ? "  (big)" : "  (not big)")
        << "\n";
    out << "  nef: " << nef_name(c.weak_fano.nef);
    if (!c.weak_fano.nef_note.empty()) {
        out << " (" << c.weak_fano.nef_note << ")";
    }
    out << "\n";
    out << "  ample: " << ample_name(c.weak_fano.ample) << "\n";
    if (c.weak_fano.quadrisecants) {
        out << "  quadrisecants: " << *c.weak_fano.quadrisecants << "\n";
    }
    if (c.smallness && c.smallness->contracted) {
        out << "  contracted ray: " << to_string(*c.smallness->contracted)
            << "  smallness: " << smallness_name(c.smallness->certificate) << "\n";
    }
    if (c.secants && c.flop_defect) {
        out << "  flopping curves: " << c.secants->count << " x (H.l = " << c.secants->h_deg
            << ", E.l = " << c.secants->e_deg << ")\n";
        out << "  flop defect: e = " << c.flop_defect->e << ", e/r^3 = "
            << dec(c.flop_defect->normalized) << "\n";
    }
    if (!c.exclusions.empty()) {
        out << "  exclusions:\n";
        for (const auto& r : c.exclusions) {
            out << "    " << family_name(r.family) << ": "
                << (r.excluded ? "excluded" : "not excluded") << " (" << evidence_name(r.evidence);
            if (r.witness_class) {
                out << " " << to_string(*r.witness_class);
            }
            out << "; " << r.note << ")\n";
        }
    }
    for (const auto& p : c.partners) {
        out << "  partner d=" << p.partner_degree << " g=" << p.partner_genus << " on "
            << p.partner_ambient.label << ", class " << to_string(p.partner_exceptional)
            << " = " << dec(p.alpha) << "(-K) " << (p.beta >= 0 ? "+ " : "- ")
            << dec(boost::multiprecision::abs(Rat(p.beta))) << "E\n";
    }
    out << "  verdict: " << display_verdict(c.verdict);
    if (!c.reason.empty()) {
        out << " (" << c.reason << ")";
    }
    out << "\n";
    if (!c.hypotheses.empty()) {
        out << "  hypotheses: " << join(c.hypotheses, ", ") << "\n";
    }
    return out.str();
}

OutputFormat parse_format(const std::string& name) {
    if (name == "text") {
        return OutputFormat::text;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    throw Error(Errc::usage_error, "unknown output format '" + name + "'");
}

std::string scan_csv_header() {
    return "d,g,minus_K_cubed,quadrisecants,smallness,verdict,partner_d,partner_g,"
           "defect_over_r3,hypotheses";
}

namespace {

struct ScanRow {
    std::string d, g, kx3, quadrisecants, smallness, verdict, partner_d, partner_g,
        defect_over_r3, hypotheses;
};

ScanRow make_row(const LinkClassification& c) {
    ScanRow row;
    row.d = dec(c.setup.degree);
    row.g = dec(c.setup.genus);
    row.kx3 = dec(c.weak_fano.minus_k_cubed);
    if (c.weak_fano.quadrisecants) {
        row.quadrisecants = dec(*c.weak_fano.quadrisecants);
    }
    if (c.smallness) {
        row.smallness = smallness_name(c.smallness->certificate);
    }
    row.verdict = std::string(verdict_name(c.verdict));
    if (c.partners.size() == 1) {
        row.partner_d = dec(c.partners.front().partner_degree);
        row.partner_g = dec(c.partners.front().partner_genus);
    }
    if (c.flop_defect) {
        row.defect_over_r3 = dec(c.flop_defect->normalized);
    }
    row.hypotheses = join(c.hypotheses, ";");
    return row;
}

std::string csv_line(const ScanRow& r) {
    return r.d + "," + r.g + "," + r.kx3 + "," + r.quadrisecants + "," + r.smallness + "," +
           r.verdict + "," + r.partner_d + "," + r.partner_g + "," + r.defect_over_r3 + "," +
           r.hypotheses;
}

} // namespace

std::string run_scan(const ScanRequest& request, std::span<const AmbientFano> catalog) {
    if (request.d_min < 5) {
        throw Error(Errc::usage_error, "scan requires d_min >= 5 (secant model domain)");
    }
    if (request.d_max < request.d_min) {
        throw Error(Errc::usage_error, "scan requires d_min <= d_max");
    }
    if (request.g_min < 0 || request.g_max < request.g_min) {
        throw Error(Errc::usage_error, "scan requires 0 <= g_min <= g_max");
    }
    if (request.jobs < 1) {
        throw Error(Errc::usage_error, "scan requires jobs >= 1");
    }
    const AmbientFano ambient = find_ambient(catalog, request.ambient);

    std::vector<std::pair<Int, Int>> cells;
    for (Int d = request.d_min; d <= request.d_max; ++d) {
        for (Int g = request.g_min; g <= request.g_max; ++g) {
            cells.emplace_back(d, g);
        }
    }

    // Cells are classified independently (possibly in parallel) and rendered
    // strictly in lexicographic order, so output bytes never depend on jobs.
    std::vector<LinkClassification> results(cells.size());
    const auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < cells.size(); i += stride) {
            results[i] = classify({ambient, cells[i].first, cells[i].second}, catalog,
                                  request.options);
        }
    };
    const std::size_t jobs =
        std::min<std::size_t>(static_cast<std::size_t>(request.jobs), std::max<std::size_t>(cells.size(), 1));
    if (jobs <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t) {
            workers.emplace_back(work, t, jobs);
        }
        for (auto& w : workers) {
            w.join();
        }
    }

    switch (request.format) {
    case OutputFormat::csv: {
        std::string out = scan_csv_header() + "\n";
        for (const auto& c : results) {
            out += csv_line(make_row(c)) + "\n";
        }
        return out;
    }
    case OutputFormat::json: {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["ambient"] = ambient.label;
        ordered_json rows = ordered_json::array();
        for (const auto& c : results) {
            const ScanRow r = make_row(c);
            rows.push_back(ordered_json{{"d", r.d},
                                        {"g", r.g},
                                        {"minus_K_cubed", r.kx3},
                                        {"quadrisecants", r.quadrisecants},
                                        {"smallness", r.smallness},
                                        {"verdict", r.verdict},
                                        {"partner_d", r.partner_d},
                                        {"partner_g", r.partner_g},
                                        {"defect_over_r3", r.defect_over_r3},
                                        {"hypotheses", r.hypotheses}});
        }
        j["rows"] = std::move(rows);
        return j.dump(2) + "\n";
    }
    case OutputFormat::text: {
        std::ostringstream out;
        out << std::left << std::setw(5) << "d" << std::setw(5) << "g" << std::setw(10)
            << "(-K)^3" << std::setw(10) << "4-secants" << std::setw(17) << "smallness"
            << std::setw(15) << "verdict" << std::setw(10) << "partner_d" << std::setw(10)
            << "partner_g" << std::setw(8) << "e/r^3" << "\n";
        for (const auto& c : results) {
            const ScanRow r = make_row(c);
            out << std::left << std::setw(5) << r.d << std::setw(5) << r.g << std::setw(10)
                << r.kx3 << std::setw(10) << r.quadrisecants << std::setw(17)
                << (r.smallness.empty() ? "-" : r.smallness) << std::setw(15) << r.verdict
                << std::setw(10) << (r.partner_d.empty() ? "-" : r.partner_d) << std::setw(10)
                << (r.partner_g.empty() ? "-" : r.partner_g) << std::setw(8)
                << (r.defect_over_r3.empty() ? "-" : r.defect_over_r3) << "\n";
        }
        return out.str();
    }
    }
    throw Error(Errc::usage_error, "unsupported output format");
}

} // namespace sarkisov
