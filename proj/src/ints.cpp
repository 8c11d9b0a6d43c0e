#include "sarkisov/ints.hpp"

#include <utility>

namespace sarkisov {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b; // truncates toward zero
    if (a % b != 0 && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) == (b < 0))) {
        ++q;
    }
    return q;
}

bool is_perfect_square(const Int& v, Int* root) {
    if (v < 0) {
        return false;
    }
    const Int r = boost::multiprecision::sqrt(v); // floor sqrt
    if (r * r != v) {
        return false;
    }
    if (root != nullptr) {
        *root = r;
    }
    return true;
}

Int ext_gcd(const Int& a, const Int& b, Int& u, Int& v) {
    // Iterative extended Euclid; keeps g >= 0.
    Int old_r = a, r = b;
    Int old_u = 1, cur_u = 0;
    Int old_v = 0, cur_v = 1;
    while (r != 0) {
        const Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_u - q * cur_u;
        old_u = std::move(cur_u);
        cur_u = std::move(tmp);
        tmp = old_v - q * cur_v;
        old_v = std::move(cur_v);
        cur_v = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    u = std::move(old_u);
    v = std::move(old_v);
    return old_r;
}

std::string dec(const Int& v) {
    return v.str();
}

std::string dec(const Rat& v) {
    // cpp_rational keeps gcd(p, q) == 1 and q > 0 canonically.
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

} // namespace sarkisov
