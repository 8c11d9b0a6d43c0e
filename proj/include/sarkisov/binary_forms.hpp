// Integral binary quadratic forms q(x, y) = a x^2 + b x y + c y^2 and the
// sound-but-incomplete representability machinery the classifier relies on:
// congruence obstructions give exact NOT_REPRESENTED answers, a bounded box
// search gives exact witnesses, and everything else stays UNKNOWN rather
// than guess. Isotropy over Q is decided exactly via the discriminant.
#pragma once

#include "sarkisov/errors.hpp"
#include "sarkisov/ints.hpp"

#include <optional>
#include <utility>

namespace sarkisov {

struct BinaryForm {
    Int a, b, c;

    Int evaluate(const Int& x, const Int& y) const;
    Int discriminant() const; // b^2 - 4ac
    bool is_zero() const;

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

struct RepresentabilityVerdict {
    enum class Status { represented, not_represented, unknown };

    Status status = Status::unknown;
    Int x, y;       // witness, valid when represented
    Int modulus;    // obstructing modulus, valid when not_represented
    Int search_box; // exhausted bound, valid when unknown

    bool conclusive() const { return status != Status::unknown; }

    static RepresentabilityVerdict represented(Int x, Int y);
    static RepresentabilityVerdict not_represented(Int modulus);
    static RepresentabilityVerdict unknown(Int search_box);
};

// True iff q(x, y) == target has no solution in (Z/m)^2. m >= 2.
bool congruence_obstructed(const BinaryForm& form, const Int& target, const Int& modulus);

// Decision procedure: sweep moduli 2..modulus_sweep_max for an obstruction,
// then search |x|, |y| <= search_box for a witness (with a sound radius clamp
// when the form is definite). Never returns a wrong conclusive answer.
// modulus_sweep_max >= 2, search_box >= 1, else Error(domain_error).
RepresentabilityVerdict represents(const BinaryForm& form, const Int& target,
                                   const Int& modulus_sweep_max = 64,
                                   const Int& search_box = 1000);

// Exact: a nonzero form has a nontrivial rational zero iff its discriminant
// is a perfect square (including 0). Zero form -> Error(domain_error).
bool isotropic_over_rationals(const BinaryForm& form);

// A primitive integral zero when one exists (nullopt otherwise).
std::optional<std::pair<Int, Int>> isotropy_witness(const BinaryForm& form);

} // namespace sarkisov
