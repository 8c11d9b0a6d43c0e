#include "sarkisov/cli.hpp"

#include "sarkisov/catalog.hpp"
#include "sarkisov/errors.hpp"
#include "sarkisov/k3_lattice.hpp"
#include "sarkisov/link_classifier.hpp"
#include "sarkisov/reports.hpp"
#include "sarkisov/secant_calculus.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace sarkisov {

DivisorClass parse_divisor(const std::string& text) {
    std::string s;
    for (const char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    if (s.empty()) {
        throw Error(Errc::parse_error, "empty divisor expression");
    }
    DivisorClass out{0, 0};
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw Error(Errc::parse_error, "expected '+' or '-' before position " +
                                               std::to_string(i + 1) + " in '" + s + "'");
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
        }
        if (i >= s.size() || (s[i] != 'H' && s[i] != 'E')) {
            throw Error(Errc::parse_error, "expected 'H' or 'E' at position " +
                                               std::to_string(i + 1) + " in '" + s + "'");
        }
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        if (sign < 0) {
            coeff = -coeff;
        }
        if (s[i] == 'H') {
            out.h += coeff;
        } else {
            out.e += coeff;
        }
        ++i;
        first = false;
    }
    return out;
}

namespace {

struct CatalogHolder {
    std::vector<AmbientFano> owned;
    std::span<const AmbientFano> view;
};

CatalogHolder resolve_catalog(const std::string& path_flag) {
    CatalogHolder holder;
    std::string path = path_flag;
    if (path.empty()) {
        if (const char* env = std::getenv("SARKISOV_CATALOG")) {
            path = env;
        }
    }
    if (path.empty()) {
        holder.view = builtin_catalog();
    } else {
        holder.owned = load_catalog(path);
        holder.view = holder.owned;
    }
    return holder;
}

struct BoundsFlags {
    long long modulus_max = 64;
    long long box = 1000;
    long long partner_box = 64;
    long long partner_d_max = 64;
    long long partner_g_max = 64;
    bool no_k3 = false;
    bool no_genericity = false;

    ClassifyOptions to_options() const {
        ClassifyOptions opts;
        opts.gate.k3_quartic_hypothesis = !no_k3;
        opts.gate.curve_general_position = !no_genericity;
        opts.diophantine.modulus_sweep_max = modulus_max;
        opts.diophantine.search_box = box;
        opts.partner.box = partner_box;
        opts.partner.d_max = partner_d_max;
        opts.partner.g_max = partner_g_max;
        return opts;
    }
};

void add_bounds_flags(CLI::App* cmd, BoundsFlags& flags) {
    cmd->add_option("--modulus-max", flags.modulus_max,
                    "largest modulus swept for congruence obstructions");
    cmd->add_option("--box", flags.box, "search box for representability witnesses");
    cmd->add_option("--partner-box", flags.partner_box, "coefficient box for partner classes");
    cmd->add_option("--partner-d-max", flags.partner_d_max, "cap on partner curve degree");
    cmd->add_option("--partner-g-max", flags.partner_g_max, "cap on partner curve genus");
    cmd->add_flag("--no-k3-hypothesis", flags.no_k3,
                  "drop the quartic K3 membership hypothesis (nefness stays UNKNOWN)");
    cmd->add_flag("--no-genericity-hypothesis", flags.no_genericity,
                  "drop the general-position hypothesis (non-ampleness stays unwitnessed)");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic Sarkisov link classifier for blowups of rank-1 Fano "
                 "threefolds along smooth curves"};
    app.name("sarkisov");
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand(
        "classify", "Classify the link for one (degree, genus) blowup of an ambient");
    long long cls_d = 0, cls_g = 0;
    std::string cls_ambient = "P3", cls_catalog, cls_format = "text";
    BoundsFlags cls_bounds;
    classify_cmd->add_option("-d,--d,--degree", cls_d, "curve degree")->required();
    classify_cmd->add_option("-g,--g,--genus", cls_g, "curve genus")->required();
    classify_cmd->add_option("--ambient", cls_ambient, "ambient label from the catalog");
    classify_cmd->add_option("--catalog", cls_catalog,
                             "catalog file (default: $SARKISOV_CATALOG or builtin)");
    classify_cmd->add_option("--format", cls_format, "text or json");
    add_bounds_flags(classify_cmd, cls_bounds);

    // scan
    auto* scan_cmd =
        app.add_subcommand("scan", "Classify every (d, g) in a rectangle and tabulate");
    long long scan_dmin = 0, scan_dmax = 0, scan_gmin = 0, scan_gmax = 0;
    long long scan_jobs = 1;
    std::string scan_ambient = "P3", scan_catalog, scan_format = "text";
    BoundsFlags scan_bounds;
    scan_cmd->add_option("--d-min", scan_dmin, "smallest degree")->required();
    scan_cmd->add_option("--d-max", scan_dmax, "largest degree")->required();
    scan_cmd->add_option("--g-min", scan_gmin, "smallest genus")->required();
    scan_cmd->add_option("--g-max", scan_gmax, "largest genus")->required();
    scan_cmd->add_option("--ambient", scan_ambient, "ambient label from the catalog");
    scan_cmd->add_option("--catalog", scan_catalog,
                         "catalog file (default: $SARKISOV_CATALOG or builtin)");
    scan_cmd->add_option("--format", scan_format, "text, json or csv");
    scan_cmd->add_option("--jobs", scan_jobs, "worker threads (output is identical for any value)");
    add_bounds_flags(scan_cmd, scan_bounds);

    // k3
    auto* k3_cmd = app.add_subcommand("k3", "Nef/free criterion for kH_S - C on a K3");
    long long k3_n = 2, k3_d = 0, k3_g = 0, k3_k = 0;
    k3_cmd->add_option("-n,--n,--polarization", k3_n, "H_S^2 = 2n (default quartic, n = 2)");
    k3_cmd->add_option("-d,--d,--degree", k3_d, "curve degree H_S.C")->required();
    k3_cmd->add_option("-g,--g,--genus", k3_g, "curve genus")->required();
    k3_cmd->add_option("-k,--k,--multiple", k3_k, "class kH_S - C")->required();

    // secants
    auto* secants_cmd = app.add_subcommand("secants", "4-secant line count for a space curve");
    long long sec_d = 0, sec_g = 0;
    secants_cmd->add_option("-d,--d,--degree", sec_d, "curve degree")->required();
    secants_cmd->add_option("-g,--g,--genus", sec_g, "curve genus")->required();

    // triple
    auto* triple_cmd =
        app.add_subcommand("triple", "Triple product of divisor classes on the blowup");
    std::vector<std::string> triple_exprs;
    long long tri_d = 0, tri_g = 0;
    std::string tri_ambient = "P3", tri_catalog;
    triple_cmd->add_option("classes", triple_exprs, "three divisor expressions like 4H-1E")
        ->expected(3);
    triple_cmd->add_option("-d,--d,--degree", tri_d, "curve degree")->required();
    triple_cmd->add_option("-g,--g,--genus", tri_g, "curve genus")->required();
    triple_cmd->add_option("--ambient", tri_ambient, "ambient label from the catalog");
    triple_cmd->add_option("--catalog", tri_catalog,
                           "catalog file (default: $SARKISOV_CATALOG or builtin)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(classify_cmd)) {
            if (cls_d < 5) {
                throw Error(Errc::usage_error,
                            "classify needs degree >= 5 (the 4-secant model domain)");
            }
            const auto format = parse_format(cls_format);
            if (format == OutputFormat::csv) {
                throw Error(Errc::usage_error, "classify supports text or json output");
            }
            const auto catalog = resolve_catalog(cls_catalog);
            const BlowupSetup setup{find_ambient(catalog.view, cls_ambient), cls_d, cls_g};
            const auto result = classify(setup, catalog.view, cls_bounds.to_options());
            if (format == OutputFormat::json) {
                out << classification_json(result).dump(2) << "\n";
            } else {
                out << render_classification_text(result);
            }
            return result.verdict == LinkVerdict::inconclusive ? 2 : 0;
        }
        if (app.got_subcommand(scan_cmd)) {
            const auto catalog = resolve_catalog(scan_catalog);
            ScanRequest request;
            request.d_min = scan_dmin;
            request.d_max = scan_dmax;
            request.g_min = scan_gmin;
            request.g_max = scan_gmax;
            request.ambient = scan_ambient;
            request.format = parse_format(scan_format);
            request.options = scan_bounds.to_options();
            if (scan_jobs < 1 || scan_jobs > 1024) {
                throw Error(Errc::usage_error, "jobs must lie in 1..1024");
            }
            request.jobs = static_cast<int>(scan_jobs);
            out << run_scan(request, catalog.view);
            return 0;
        }
        if (app.got_subcommand(k3_cmd)) {
            const K3LatticeData lattice{k3_n, k3_d, k3_g};
            const auto nef = is_nef_kH_minus_C(lattice, k3_k);
            const auto free = is_free_kH_minus_C(lattice, k3_k);
            out << "class " << k3_k << "H_S - C on a K3 with H_S^2 = " << 2 * k3_n
                << ", H_S.C = " << k3_d << ", C^2 = " << 2 * k3_g - 2 << "\n";
            out << "nef: " << (nef.holds ? "yes" : "no");
            if (!nef.holds) {
                out << " (" << nef.reason << ")";
            }
            out << ", free: " << (free.holds ? "yes" : "no");
            if (!free.holds) {
                out << " (" << free.reason << ")";
            }
            out << "\n";
            return 0;
        }
        if (app.got_subcommand(secants_cmd)) {
            out << quadrisecant_count(sec_d, sec_g) << "\n";
            return 0;
        }
        if (app.got_subcommand(triple_cmd)) {
            const auto catalog = resolve_catalog(tri_catalog);
            const BlowupSetup setup{find_ambient(catalog.view, tri_ambient), tri_d, tri_g};
            const auto d1 = parse_divisor(triple_exprs.at(0));
            const auto d2 = parse_divisor(triple_exprs.at(1));
            const auto d3 = parse_divisor(triple_exprs.at(2));
            out << triple_product(d1, d2, d3, setup) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

} // namespace sarkisov
