#include "sarkisov/binary_forms.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>

namespace sarkisov {

Int BinaryForm::evaluate(const Int& x, const Int& y) const {
    return a * x * x + b * x * y + c * y * y;
}

Int BinaryForm::discriminant() const {
    return b * b - 4 * a * c;
}

bool BinaryForm::is_zero() const {
    return a == 0 && b == 0 && c == 0;
}

RepresentabilityVerdict RepresentabilityVerdict::represented(Int x, Int y) {
    RepresentabilityVerdict v;
    v.status = Status::represented;
    v.x = std::move(x);
    v.y = std::move(y);
    return v;
}

RepresentabilityVerdict RepresentabilityVerdict::not_represented(Int modulus) {
    RepresentabilityVerdict v;
    v.status = Status::not_represented;
    v.modulus = std::move(modulus);
    return v;
}

RepresentabilityVerdict RepresentabilityVerdict::unknown(Int search_box) {
    RepresentabilityVerdict v;
    v.status = Status::unknown;
    v.search_box = std::move(search_box);
    return v;
}

namespace {

long long mod_reduce(const Int& v, long long m) {
    Int r = v % m;
    if (r < 0) {
        r += m;
    }
    return r.convert_to<long long>();
}

// Exhaustive check of q(x, y) == target over (Z/m)^2 in 64-bit arithmetic.
// Safe for m up to ~2^20 since all operands stay below m^2 < 2^40.
bool obstructed_small(const BinaryForm& f, const Int& target, long long m) {
    const long long a = mod_reduce(f.a, m);
    const long long b = mod_reduce(f.b, m);
    const long long c = mod_reduce(f.c, m);
    const long long t = mod_reduce(target, m);
    for (long long x = 0; x < m; ++x) {
        const long long ax = a * x % m * x % m;
        const long long bx = b * x % m;
        for (long long y = 0; y < m; ++y) {
            if ((ax + bx * y + c * y % m * y) % m == t) {
                return false;
            }
        }
    }
    return true;
}

bool obstructed_big(const BinaryForm& f, const Int& target, const Int& m) {
    Int t = target % m;
    if (t < 0) {
        t += m;
    }
    for (Int x = 0; x < m; ++x) {
        for (Int y = 0; y < m; ++y) {
            Int v = f.evaluate(x, y) % m;
            if (v < 0) {
                v += m;
            }
            if (v == t) {
                return false;
            }
        }
    }
    return true;
}

bool fits_int64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

// Ring search specialised to 64-bit scalars. Caller guarantees no overflow
// (coefficients and box small enough that |q| < 2^62).
RepresentabilityVerdict ring_search_small(const BinaryForm& f, const Int& target, const Int& bound,
                                          const Int& reported_box) {
    const long long a = f.a.convert_to<long long>();
    const long long b = f.b.convert_to<long long>();
    const long long c = f.c.convert_to<long long>();
    const long long t = target.convert_to<long long>();
    const long long B = bound.convert_to<long long>();
    const auto q = [&](long long x, long long y) { return a * x * x + b * x * y + c * y * y; };
    if (t == 0) {
        return RepresentabilityVerdict::represented(0, 0);
    }
    for (long long k = 1; k <= B; ++k) {
        for (long long x = -k; x <= k; ++x) {
            if (q(x, k) == t) {
                return RepresentabilityVerdict::represented(x, k);
            }
            if (q(x, -k) == t) {
                return RepresentabilityVerdict::represented(x, -k);
            }
        }
        for (long long y = -k + 1; y <= k - 1; ++y) {
            if (q(k, y) == t) {
                return RepresentabilityVerdict::represented(k, y);
            }
            if (q(-k, y) == t) {
                return RepresentabilityVerdict::represented(-k, y);
            }
        }
    }
    return RepresentabilityVerdict::unknown(reported_box);
}

RepresentabilityVerdict ring_search_big(const BinaryForm& f, const Int& target, const Int& bound,
                                        const Int& reported_box) {
    if (target == 0) {
        return RepresentabilityVerdict::represented(0, 0);
    }
    for (Int k = 1; k <= bound; ++k) {
        for (Int x = -k; x <= k; ++x) {
            if (f.evaluate(x, k) == target) {
                return RepresentabilityVerdict::represented(x, k);
            }
            if (f.evaluate(x, -k) == target) {
                return RepresentabilityVerdict::represented(x, -k);
            }
        }
        for (Int y = -k + 1; y <= k - 1; ++y) {
            if (f.evaluate(k, y) == target) {
                return RepresentabilityVerdict::represented(k, y);
            }
            if (f.evaluate(-k, y) == target) {
                return RepresentabilityVerdict::represented(-k, y);
            }
        }
    }
    return RepresentabilityVerdict::unknown(reported_box);
}

} // namespace

bool congruence_obstructed(const BinaryForm& form, const Int& target, const Int& modulus) {
    if (modulus < 2) {
        throw Error(Errc::domain_error, "congruence modulus must be >= 2");
    }
    if (modulus <= (1 << 20)) {
        return obstructed_small(form, target, modulus.convert_to<long long>());
    }
    return obstructed_big(form, target, modulus);
}

RepresentabilityVerdict represents(const BinaryForm& form, const Int& target,
                                   const Int& modulus_sweep_max, const Int& search_box) {
    if (modulus_sweep_max < 2) {
        throw Error(Errc::domain_error, "modulus sweep bound must be >= 2");
    }
    if (search_box < 1) {
        throw Error(Errc::domain_error, "search box must be >= 1");
    }
    for (Int m = 2; m <= modulus_sweep_max; ++m) {
        if (congruence_obstructed(form, target, m)) {
            return RepresentabilityVerdict::not_represented(m);
        }
    }

    // For definite forms the level set lives inside an ellipse; shrinking the
    // box below it is sound because nothing outside can hit the target.
    Int bound = search_box;
    const Int disc = form.discriminant();
    if (disc < 0) { // definite, and then a != 0 automatically
        const Int four_at = boost::multiprecision::abs(4 * form.a * target);
        const Int y_arg = four_at / -disc;
        const Int y_max = boost::multiprecision::sqrt(y_arg) + 1;
        const Int lin = boost::multiprecision::sqrt(four_at) + 1; // |2ax + by| bound
        const Int x_max =
            (lin + boost::multiprecision::abs(form.b) * y_max) /
                (2 * boost::multiprecision::abs(form.a)) +
            1;
        const Int ellipse = y_max > x_max ? y_max : x_max;
        if (ellipse < bound) {
            bound = ellipse;
        }
    }

    const Int abs_cap = Int(1) << 30;
    const bool small = bound <= 32768 && fits_int64(target) &&
                       boost::multiprecision::abs(form.a) <= abs_cap &&
                       boost::multiprecision::abs(form.b) <= abs_cap &&
                       boost::multiprecision::abs(form.c) <= abs_cap;
    if (small) {
        return ring_search_small(form, target, bound, search_box);
    }
    return ring_search_big(form, target, bound, search_box);
}

std::optional<std::pair<Int, Int>> isotropy_witness(const BinaryForm& form) {
    if (form.is_zero()) {
        throw Error(Errc::domain_error, "isotropy of the zero form is undefined");
    }
    if (form.a == 0) {
        return std::make_pair(Int(1), Int(0)); // q(1, 0) = a = 0
    }
    Int s;
    if (!is_perfect_square(form.discriminant(), &s)) {
        return std::nullopt;
    }
    // q(-b + s, 2a) = a((s^2 - b^2) + (... )) = a(s^2 - disc) = 0.
    Int x = -form.b + s;
    Int y = 2 * form.a;
    const Int g = boost::multiprecision::gcd(boost::multiprecision::abs(x),
                                             boost::multiprecision::abs(y));
    if (g > 1) {
        x /= g;
        y /= g;
    }
    if (y < 0 || (y == 0 && x < 0)) {
        x = -x;
        y = -y;
    }
    return std::make_pair(std::move(x), std::move(y));
}

bool isotropic_over_rationals(const BinaryForm& form) {
    return isotropy_witness(form).has_value();
}

} // namespace sarkisov
