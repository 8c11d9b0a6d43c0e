#include "sarkisov/catalog.hpp"

#include "sarkisov/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sarkisov {

Int AmbientFano::fundamental_cube() const {
    const Int r3 = Int(index) * index * index;
    return anticanonical_degree / r3;
}

void validate_ambient(const AmbientFano& ambient) {
    if (ambient.label.empty()) {
        throw Error(Errc::invalid_ambient, "ambient label must be nonempty");
    }
    if (ambient.index < 1 || ambient.index > 4) {
        throw Error(Errc::invalid_ambient,
                    "ambient '" + ambient.label + "': Fano index must lie in 1..4");
    }
    if (ambient.anticanonical_degree < 1) {
        throw Error(Errc::invalid_ambient,
                    "ambient '" + ambient.label + "': anticanonical degree must be positive");
    }
    const Int r3 = Int(ambient.index) * ambient.index * ambient.index;
    if (ambient.anticanonical_degree % r3 != 0) {
        throw Error(Errc::invalid_ambient, "ambient '" + ambient.label + "': index^3 = " +
                                               dec(r3) + " must divide the degree " +
                                               dec(ambient.anticanonical_degree));
    }
}

std::span<const AmbientFano> builtin_catalog() {
    static const std::vector<AmbientFano> table = [] {
        std::vector<AmbientFano> t;
        t.push_back({"P3", 4, 64});
        t.push_back({"Q3", 3, 54});
        for (int k = 1; k <= 5; ++k) { // index-2 del Pezzo threefolds V_k
            t.push_back({"V" + std::to_string(k), 2, Int(8) * k});
        }
        for (int k = 2; k <= 22; k += 2) { // index-1 families by degree
            t.push_back({"X" + std::to_string(k), 1, k});
        }
        for (const auto& a : t) {
            validate_ambient(a);
        }
        return t;
    }();
    return table;
}

std::vector<AmbientFano> parse_catalog(std::istream& in, const std::string& origin) {
    std::vector<AmbientFano> out;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string label;
        if (!(fields >> label)) {
            continue; // blank or comment-only line
        }
        const std::string where = origin + ":" + std::to_string(lineno);
        long long index = 0;
        std::string degree_text;
        if (!(fields >> index >> degree_text)) {
            throw Error(Errc::catalog_error,
                        where + ": expected 'label index degree', got '" + line + "'");
        }
        std::string extra;
        if (fields >> extra) {
            throw Error(Errc::catalog_error, where + ": trailing field '" + extra + "'");
        }
        Int degree;
        try {
            degree = Int(degree_text);
        } catch (const std::exception&) {
            throw Error(Errc::catalog_error, where + ": bad degree '" + degree_text + "'");
        }
        if (!seen.insert(label).second) {
            throw Error(Errc::catalog_error, where + ": duplicate label '" + label + "'");
        }
        AmbientFano ambient{label, static_cast<int>(index), degree};
        try {
            validate_ambient(ambient);
        } catch (const Error& e) {
            throw Error(Errc::catalog_error, where + ": " + e.what());
        }
        out.push_back(std::move(ambient));
    }
    if (out.empty()) {
        throw Error(Errc::catalog_error, origin + ": catalog has no entries");
    }
    return out;
}

std::vector<AmbientFano> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::catalog_error, "cannot open catalog file '" + path + "'");
    }
    return parse_catalog(in, path);
}

const AmbientFano& find_ambient(std::span<const AmbientFano> catalog, const std::string& label) {
    for (const auto& a : catalog) {
        if (a.label == label) {
            return a;
        }
    }
    throw Error(Errc::catalog_error, "unknown ambient label '" + label + "'");
}

} // namespace sarkisov
