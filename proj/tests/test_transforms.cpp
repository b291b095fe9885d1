#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "oracle_values.hpp"

#include "freespec/errors.hpp"
#include "freespec/transforms.hpp"

using namespace freespec;

TEST_CASE("psi") {
    CHECK(psi(dirac(1.0), 0.5) == doctest::Approx(1.0));
    CHECK(std::abs(psi(MeasureR::from_atoms({{0.0, 0.5}, {1.0, 0.5}}), 0.5) - oracle::psi_half_atoms_at_half) < 1e-15);
    CHECK(std::abs(psi(arcsine01(), -1.0) - oracle::psi_arcsine01_at_minus_one) < 1e-12);
    CHECK_THROWS_AS(psi(dirac(2.0), 0.5), SingularityError);
    CHECK_THROWS_AS(psi(arcsine01(), 2.0), SingularityError);
}

TEST_CASE("S-transform point values") {
    CHECK(s_transform(dirac(4.0), -0.3) == doctest::Approx(0.25));
    CHECK(s_transform(arcsine01(), -0.5) == doctest::Approx(3.0).epsilon(1e-12));
    const MeasureR two = MeasureR::from_atoms({{1.0, 0.5}, {4.0, 0.5}});
    CHECK(s_transform(two, -0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(s_transform(arcsine01(), 0.1), DomainError);
    CHECK_THROWS_AS(s_transform(arcsine01(), -1.0), DomainError);
    CHECK_THROWS_AS(make_s_transform(dirac(0.0)), DomainError);
    CHECK_THROWS_AS(make_s_transform(arcsine_sym()), DomainError);
}

TEST_CASE("method dispatch") {
    CHECK(make_s_transform(dirac(2.0)).method() == STransformMethod::dirac);
    CHECK(make_s_transform(arcsine01()).method() == STransformMethod::arcsine);
    CHECK(make_s_transform(MeasureR::from_atoms({{1.0, 0.5}, {4.0, 0.5}})).method() == STransformMethod::two_atom);
    CHECK(make_s_transform(arcsine01(), SMethodChoice::numeric).method() == STransformMethod::numeric);
    CHECK(to_string(STransformMethod::numeric) == "numeric-inversion");
}

TEST_CASE("closed forms agree with the numeric-inversion oracle at 20 points") {
    const auto arc = make_s_transform(arcsine01());
    for (const auto& [w, s] : oracle::s_arcsine01) CHECK(std::abs(arc(w) - s) < 1e-10 * s);

    const auto two = make_s_transform(MeasureR::from_atoms({{1.0, 0.5}, {4.0, 0.5}}));
    for (const auto& [w, s] : oracle::s_two_atom_1_4) CHECK(std::abs(two(w) - s) < 1e-12 * s);

    const auto q4 = make_s_transform(MeasureR::from_atoms({{0.25, 0.5}, {4.0, 0.5}}));
    for (const auto& [w, s] : oracle::s_two_atom_quarter_4) CHECK(std::abs(q4(w) - s) < 1e-12 * s);
}

TEST_CASE("property: closed-form and numeric S agree within 1e-8") {
    const double atoms[] = {0.25, 1.0, 4.0};
    for (double a : atoms)
        for (double b : atoms) {
            if (a >= b) continue;
            const MeasureR mu = MeasureR::from_atoms({{a, 0.5}, {b, 0.5}});
            const auto closed = make_s_transform(mu);
            const auto numeric = make_s_transform(mu, SMethodChoice::numeric);
            for (int k = 1; k <= 20; ++k) {
                const double w = -k / 21.0;
                CHECK(std::abs(closed(w) - numeric(w)) < 1e-8 * closed(w));
            }
        }
    const auto closed = make_s_transform(arcsine01());
    const auto numeric = make_s_transform(arcsine01(), SMethodChoice::numeric);
    for (int k = 1; k <= 20; ++k) CHECK(std::abs(closed(-k / 21.0) - numeric(-k / 21.0)) < 1e-8 * closed(-k / 21.0));
}

TEST_CASE("property: chi inverts psi and psi is increasing") {
    auto e = gen::engine(21);
    for (int trial = 0; trial < 10; ++trial) {
        const MeasureR mu = gen::atoms(e, 0.1, 3.0);
        if (mu.dirac_location()) continue;
        const double zmax = 1.0 / mu.support().hi;
        double prev = -1e300;
        for (int k = 0; k < 20; ++k) {
            // log-spaced magnitudes on the negative side, then toward 1/max support
            const double z = k < 10 ? -std::pow(10.0, 2.0 - 0.4 * k) : zmax * (k - 9) / 11.0;
            const double p = psi(mu, z);
            CHECK(p > prev);
            prev = p;
            if (z < 0.0) CHECK(std::abs(chi_numeric(mu, p) - z) < 1e-8 * std::max(1.0, std::abs(z)));
        }
    }
}

TEST_CASE("s_product") {
    const auto one = make_s_transform(dirac(1.0));
    const auto arc = make_s_transform(arcsine01());
    const auto prod = s_product(one, arc);
    for (double w : {-0.9, -0.5, -0.1}) CHECK(prod(w) == doctest::Approx(arc(w)));
    CHECK(s_product(make_s_transform(dirac(2.0)), make_s_transform(dirac(3.0)))(-0.4) == doctest::Approx(1.0 / 6.0));
    CHECK(s_product(arc, arc)(-0.5) == doctest::Approx(9.0).epsilon(1e-12));
    const auto half = make_s_transform(MeasureR::from_atoms({{0.0, 0.5}, {1.0, 0.5}}));
    CHECK(s_product(half, arc).domain().lo == doctest::Approx(-0.5));
}

TEST_CASE("property: S is positive on its domain") {
    auto e = gen::engine(22);
    for (int trial = 0; trial < 20; ++trial) {
        const MeasureR mu = gen::atoms(e, 0.05, 5.0);
        const auto s = make_s_transform(mu);
        for (int k = 1; k < 10; ++k) CHECK(s(-k / 10.0) > 0.0);
    }
}
