// Single exception type for the engine. Every throwing operation documents
// which code it uses; the CLI maps any Error to exit code 1.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sarkisov {

enum class Errc {
    invalid_ambient,     // ambient data fails its divisibility/range checks
    domain_error,        // operation called outside its stated domain
    unsupported_ambient, // operation only implemented for some ambients
    degenerate_pairing,  // contracted-ray pairing vanished identically
    non_primitive_class, // class required to be primitive is not
    invariant_violation, // internal cross-check failed (engine bug if seen)
    parse_error,         // divisor expression or similar input rejected
    catalog_error,       // ambient catalog file/list problems
    usage_error,         // bad request-level arguments (ranges, formats)
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message);
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace sarkisov
