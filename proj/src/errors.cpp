#include "sarkisov/errors.hpp"

namespace sarkisov {

std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::invalid_ambient: return "invalid_ambient";
    case Errc::domain_error: return "domain_error";
    case Errc::unsupported_ambient: return "unsupported_ambient";
    case Errc::degenerate_pairing: return "degenerate_pairing";
    case Errc::non_primitive_class: return "non_primitive_class";
    case Errc::invariant_violation: return "invariant_violation";
    case Errc::parse_error: return "parse_error";
    case Errc::catalog_error: return "catalog_error";
    case Errc::usage_error: return "usage_error";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

} // namespace sarkisov
