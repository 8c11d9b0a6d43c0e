// Entry gates: bigness, the K3 nef certificate, the 4-secant ampleness
// witness, contracted rays, and smallness reports.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sarkisov/weak_fano_gate.hpp"

#include <algorithm>

using namespace sarkisov;

namespace {

BlowupSetup p3_setup(long long d, long long g) {
    return {find_ambient(builtin_catalog(), "P3"), d, g};
}

bool has_hypothesis(const std::vector<std::string>& list, const char* token) {
    return std::find(list.begin(), list.end(), token) != list.end();
}

} // namespace

TEST_CASE("weak Fano gate at (8,5)") {
    const auto r = assess_weak_fano(p3_setup(8, 5));
    CHECK(r.minus_k_cubed == 8);
    CHECK(r.big);
    CHECK(r.nef == NefCertificate::certified);
    CHECK(r.ample == AmpleVerdict::not_ample);
    REQUIRE(r.quadrisecants.has_value());
    CHECK(*r.quadrisecants == 10);
    CHECK_FALSE(r.secant_domain_warning);
    CHECK(has_hypothesis(r.hypotheses, hypothesis::k3_member));
    CHECK(has_hypothesis(r.hypotheses, hypothesis::k3_restriction));
    CHECK(has_hypothesis(r.hypotheses, hypothesis::general_position));
}

TEST_CASE("weak Fano gate at (9,5): not big") {
    const auto r = assess_weak_fano(p3_setup(9, 5));
    CHECK(r.minus_k_cubed == 0);
    CHECK_FALSE(r.big);
}

TEST_CASE("dropping the K3 hypothesis leaves nef UNKNOWN") {
    GateOptions options;
    options.k3_quartic_hypothesis = false;
    const auto r = assess_weak_fano(p3_setup(8, 5), options);
    CHECK(r.big);
    CHECK(r.nef == NefCertificate::unknown);
    CHECK_FALSE(has_hypothesis(r.hypotheses, hypothesis::k3_member));
}

TEST_CASE("dropping the genericity hypothesis leaves ample POSSIBLY_AMPLE") {
    GateOptions options;
    options.curve_general_position = false;
    const auto r = assess_weak_fano(p3_setup(8, 5), options);
    CHECK(r.ample == AmpleVerdict::possibly_ample);
    REQUIRE(r.quadrisecants.has_value());
    CHECK(*r.quadrisecants == 10);
}

TEST_CASE("degree below the secant domain warns instead of failing") {
    const auto r = assess_weak_fano(p3_setup(4, 0));
    CHECK(r.secant_domain_warning);
    CHECK_FALSE(r.quadrisecants.has_value());
    CHECK(r.ample == AmpleVerdict::possibly_ample);
}

TEST_CASE("non-P3 ambients get no nef certificate") {
    const BlowupSetup quadric{find_ambient(builtin_catalog(), "Q3"), 6, 3};
    const auto r = assess_weak_fano(quadric);
    CHECK(r.nef == NefCertificate::unknown);
}

TEST_CASE("contracted ray at (8,5) and (6,3)") {
    const auto ray85 = contracted_ray_class(p3_setup(8, 5));
    CHECK(ray85.cls == DivisorClass{3, -1});
    CHECK(ray85.pairing_h == 8);  // (-K)^2.H = 16 - d
    CHECK(ray85.pairing_e == 24); // (-K)^2.E

    const auto ray63 = contracted_ray_class(p3_setup(6, 3));
    CHECK(ray63.cls == DivisorClass{2, -1});
    CHECK(ray63.pairing_h == 10);
    CHECK(ray63.pairing_e == 20);
}

TEST_CASE("contracted ray is primitive and pairs to zero across a grid") {
    for (long long d = 5; d <= 20; ++d) {
        for (long long g = 0; g <= 20; ++g) {
            const auto setup = p3_setup(d, g);
            if (anticanonical_cube(setup) <= 0) {
                continue;
            }
            const auto ray = contracted_ray_class(setup);
            const auto k = anticanonical_class(setup);
            CHECK(triple_product(k, k, ray.cls, setup) == 0);
            const Int g_coeff = boost::multiprecision::gcd(
                boost::multiprecision::abs(ray.cls.h), boost::multiprecision::abs(ray.cls.e));
            CHECK(g_coeff == 1);
            CHECK(ray.cls.h >= 0);
        }
    }
}

TEST_CASE("degenerate pairing throws") {
    // (16, 33): (-K)^2.H = 0 and (-K)^2.E = 0 simultaneously.
    CHECK_THROWS_AS(contracted_ray_class(p3_setup(16, 33)), Error);
}

TEST_CASE("smallness report at (8,5)") {
    const auto r = assess_smallness(p3_setup(8, 5));
    REQUIRE(r.contracted.has_value());
    CHECK(*r.contracted == DivisorClass{3, -1});
    CHECK(r.certificate == Smallness::small_certified);
}

TEST_CASE("smallness report at (10,11): no 4Z certificate") {
    const auto r = assess_smallness(p3_setup(10, 11));
    REQUIRE(r.contracted.has_value());
    CHECK(r.certificate == Smallness::unknown);
    CHECK(r.note.find("4Z") != std::string::npos);
}

TEST_CASE("smallness rejects nothing but reports regression guard") {
    // (3H - 1E) pairs to zero against (-K)^2 but not against (-K).D^2;
    // the certificate must be about the former, not the latter.
    const auto setup = p3_setup(8, 5);
    const auto q = anticanonical_quadratic_form(setup);
    CHECK(q.evaluate(3, -1) == -4); // nonzero: not an isotropic direction
    const auto r = assess_smallness(setup);
    CHECK(r.certificate == Smallness::small_certified);
}
