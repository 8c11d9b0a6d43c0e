// Rank-2 divisor lattice of X = Bl_C(Y): Y a rank-1 Fano with fundamental
// divisor H and index r, C a smooth curve of degree d = H.C and genus g,
// E the exceptional divisor. Pic(X) = Z<H> + Z<E> and every cup product is
// determined by the four generators
//   H^3 = (-K_Y)^3 / r^3,  H^2 E = 0,  H E^2 = -d,  E^3 = 2 - 2g - r d.
// The anticanonical class is -K_X = rH - E.
#pragma once

#include "sarkisov/catalog.hpp"
#include "sarkisov/ints.hpp"

#include <string>
#include <utility>

namespace sarkisov {

struct DivisorClass {
    Int h; // coefficient of H
    Int e; // coefficient of E

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(const Int& s, const DivisorClass& a);

// Renders "3H-1E" style (always both coefficients, explicit sign between).
std::string to_string(const DivisorClass& d);

struct BlowupSetup {
    AmbientFano ambient;
    Int degree; // d = H.C >= 1
    Int genus;  // g >= 0
};

// Throws Error(invalid_ambient) / Error(domain_error) on bad data.
void validate_setup(const BlowupSetup& setup);

struct IntersectionTable {
    Int hhh; // H^3
    Int hhe; // H^2 E, always 0 for a curve blowup
    Int hee; // H E^2 = -d
    Int eee; // E^3 = 2 - 2g - r d
};

IntersectionTable intersection_table(const BlowupSetup& setup);

// Trilinear symmetric product D1.D2.D3 expanded over the table.
Int triple_product(const DivisorClass& d1, const DivisorClass& d2,
                   const DivisorClass& d3, const IntersectionTable& table);
Int triple_product(const DivisorClass& d1, const DivisorClass& d2,
                   const DivisorClass& d3, const BlowupSetup& setup);

DivisorClass anticanonical_class(const BlowupSetup& setup); // rH - E

// (-K_X)^3 = (-K_Y)^3 - 2 r d - 2 + 2 g.
Int anticanonical_cube(const BlowupSetup& setup);

// The quadratic form q(x, y) = (-K_X).(xH + yE)^2 together with the two
// mixed anticanonical pairings. In the (H, E) basis
//   q = (r H^3) x^2 + 2 d x y + (2g - 2) y^2,
// and rewriting classes as alpha(-K) + beta E turns q into
//   ((-K)^3) a^2 + 2 sigma a b + tau b^2 with sigma = (-K)^2.E, tau = (-K).E^2.
struct AnticanonicalForm {
    Int a, b, c;        // q in the (H, E) basis
    Int minus_k_cubed;  // (-K_X)^3
    Int sigma;          // (-K)^2 . E = r d + 2 - 2g
    Int tau;            // (-K) . E^2 = 2g - 2

    Int evaluate(const Int& x, const Int& y) const; // q(x, y)
};

AnticanonicalForm anticanonical_quadratic_form(const BlowupSetup& setup);

// Coordinates of xH + yE in the (-K, E) basis: (alpha, beta) = (x/r, y + x/r).
std::pair<Rat, Rat> in_anticanonical_basis(const DivisorClass& d, const BlowupSetup& setup);

} // namespace sarkisov
