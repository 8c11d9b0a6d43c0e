// Picard-rank-2 K3 lattice generated by a degree-2n polarization H_S and a
// curve class C of degree d and genus g:
//   H_S^2 = 2n,  H_S.C = d,  C^2 = 2g - 2.
// Supplies the nef/base-point-free criterion for kH_S - C, the 4Z congruence
// that rules out (-2)-classes, and the smallness certificate built from both.
#pragma once

#include "sarkisov/binary_forms.hpp"
#include "sarkisov/divisor_lattice.hpp"
#include "sarkisov/ints.hpp"

#include <string>

namespace sarkisov {

struct K3LatticeData {
    Int n; // polarization degree 2n, n >= 1
    Int d; // H_S . C >= 1
    Int g; // genus >= 0

    // Gram form of xH_S + yC: (2n) x^2 + 2d x y + (2g - 2) y^2.
    BinaryForm gram_form() const;
};

void validate_k3(const K3LatticeData& lattice);

// (a H_S + b C)^2 = 2n a^2 + 2 d a b + (2g - 2) b^2.
Int k3_self_intersection(const K3LatticeData& lattice, const Int& a, const Int& b);

struct CriterionVerdict {
    bool holds = false;
    std::string reason; // first failing clause; empty when holds

    explicit operator bool() const { return holds; }
};

// Nefness of kH_S - C (k >= 1, else Error(domain_error)):
//   2nk > d,  nk^2 - dk + g - 1 >= 0,  and not the exceptional pair
//   (2nk - d, nk^2 - dk + g) == (2n + 1, n + 1).
CriterionVerdict is_nef_kH_minus_C(const K3LatticeData& lattice, const Int& k);

// Base-point-freeness: nef, and not (d^2 - 4n(g-1) == 1 with 2nk - d -+ 1
// dividing 2n); "divides" is false when the left operand is <= 0.
CriterionVerdict is_free_kH_minus_C(const K3LatticeData& lattice, const Int& k);

// True iff 2n, d and 2g - 2 are all divisible by 4, so every self-
// intersection lies in 4Z and no (-2)-class can exist.
bool no_rational_curves_obstruction(const K3LatticeData& lattice);

enum class Smallness { small_certified, unknown };

// Certificate that the anticanonical contraction is small along the given
// primitive class a H_S + b C: self-intersection <= -4 plus the 4Z
// obstruction. Non-primitive or zero (a, b) -> Error(non_primitive_class);
// ambient_index outside 1..4 -> Error(domain_error).
Smallness smallness_certificate(const K3LatticeData& lattice, const Int& a, const Int& b,
                                int ambient_index);

} // namespace sarkisov
