#include "sarkisov/divisor_lattice.hpp"

#include "sarkisov/errors.hpp"

namespace sarkisov {

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    return {a.h + b.h, a.e + b.e};
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    return {a.h - b.h, a.e - b.e};
}

DivisorClass operator-(const DivisorClass& a) {
    return {-a.h, -a.e};
}

DivisorClass operator*(const Int& s, const DivisorClass& a) {
    return {s * a.h, s * a.e};
}

std::string to_string(const DivisorClass& d) {
    std::string out = dec(d.h) + "H";
    if (d.e >= 0) {
        out += "+";
    }
    out += dec(d.e) + "E";
    return out;
}

void validate_setup(const BlowupSetup& setup) {
    validate_ambient(setup.ambient);
    if (setup.degree < 1) {
        throw Error(Errc::domain_error, "curve degree must be >= 1");
    }
    if (setup.genus < 0) {
        throw Error(Errc::domain_error, "curve genus must be >= 0");
    }
}

IntersectionTable intersection_table(const BlowupSetup& setup) {
    validate_setup(setup);
    const Int r = setup.ambient.index;
    IntersectionTable t;
    t.hhh = setup.ambient.fundamental_cube();
    t.hhe = 0;
    t.hee = -setup.degree;
    t.eee = 2 - 2 * setup.genus - r * setup.degree;
    return t;
}

Int triple_product(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3,
                   const IntersectionTable& t) {
    // Expand (x1 H + y1 E)(x2 H + y2 E)(x3 H + y3 E) over the four generators.
    const Int& x1 = d1.h;
    const Int& y1 = d1.e;
    const Int& x2 = d2.h;
    const Int& y2 = d2.e;
    const Int& x3 = d3.h;
    const Int& y3 = d3.e;
    const Int hhh_c = x1 * x2 * x3;
    const Int hhe_c = x1 * x2 * y3 + x1 * y2 * x3 + y1 * x2 * x3;
    const Int hee_c = x1 * y2 * y3 + y1 * x2 * y3 + y1 * y2 * x3;
    const Int eee_c = y1 * y2 * y3;
    return hhh_c * t.hhh + hhe_c * t.hhe + hee_c * t.hee + eee_c * t.eee;
}

Int triple_product(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3,
                   const BlowupSetup& setup) {
    return triple_product(d1, d2, d3, intersection_table(setup));
}

DivisorClass anticanonical_class(const BlowupSetup& setup) {
    validate_setup(setup);
    return {Int(setup.ambient.index), Int(-1)};
}

Int anticanonical_cube(const BlowupSetup& setup) {
    validate_setup(setup);
    const Int r = setup.ambient.index;
    return setup.ambient.anticanonical_degree - 2 * r * setup.degree - 2 + 2 * setup.genus;
}

Int AnticanonicalForm::evaluate(const Int& x, const Int& y) const {
    return a * x * x + b * x * y + c * y * y;
}

AnticanonicalForm anticanonical_quadratic_form(const BlowupSetup& setup) {
    const auto t = intersection_table(setup);
    const Int r = setup.ambient.index;
    AnticanonicalForm q;
    q.a = r * t.hhh;
    q.b = 2 * setup.degree;
    q.c = 2 * setup.genus - 2;
    q.minus_k_cubed = anticanonical_cube(setup);
    q.sigma = r * setup.degree + 2 - 2 * setup.genus; // (-K)^2.E
    q.tau = 2 * setup.genus - 2;                      // (-K).E^2
    return q;
}

std::pair<Rat, Rat> in_anticanonical_basis(const DivisorClass& d, const BlowupSetup& setup) {
    validate_setup(setup);
    // xH + yE = alpha(-K) + beta E with -K = rH - E.
    const Rat alpha = Rat(d.h, setup.ambient.index);
    const Rat beta = Rat(d.e) + alpha;
    return {alpha, beta};
}

} // namespace sarkisov
