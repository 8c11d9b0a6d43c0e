// Exact integer and rational scalars used throughout the engine, plus the
// handful of elementary number-theory helpers the lattice code leans on.
// Everything is arbitrary precision; there are no silent overflow paths.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sarkisov {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor / ceiling division with the usual mathematician's convention,
// e.g. floor_div(-7, 2) == -4. b must be nonzero.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// True iff v is a perfect square (v < 0 returns false). When it is, *root
// receives the nonnegative square root.
bool is_perfect_square(const Int& v, Int* root = nullptr);

// Extended gcd: returns g = gcd(a, b) >= 0 and sets u, v with a*u + b*v == g.
// gcd(0, 0) == 0 with u = v = 0.
Int ext_gcd(const Int& a, const Int& b, Int& u, Int& v);

// Decimal rendering. Rationals come out canonical: "p" when the denominator
// is 1, otherwise "p/q" with q > 0 and gcd(p, q) == 1.
std::string dec(const Int& v);
std::string dec(const Rat& v);

} // namespace sarkisov
