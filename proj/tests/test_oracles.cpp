// Frozen oracle values not covered by the per-module suites.
#include <cmath>

#include "doctest.h"
#include "oracle_values.hpp"

#include "freespec/brown.hpp"
#include "freespec/measures.hpp"
#include "freespec/spectra.hpp"
#include "freespec/transforms.hpp"

using namespace freespec;

TEST_CASE("fourth moments of the arcsine laws") {
    CHECK(std::abs(integrate_moment(arcsine01(), 4) - oracle::arcsine01_moment_4) < 1e-12);
    CHECK(std::abs(integrate_moment(arcsine_sym(), 4) - oracle::arcsine_sym_moment_4) < 1e-12);
}

TEST_CASE("mean of t(1-t) under the arcsine law") {
    CHECK(std::abs(integrate_moment(arcsine_product_law(1.0), 1) - oracle::arcsine01_one_eighth) < 1e-10);
    CHECK(std::abs(integrate_moment(arcsine_product_law(4.0), 1) - 4.0 * oracle::arcsine01_one_eighth) < 1e-10);
}

TEST_CASE("nilpotent sum log potential at every oracle point") {
    const RadialMeasure nu = brown_sum_nilpotents(1.0, 1.0);
    for (const auto& [lam, value] : oracle::nilpotent_sum_log_potential)
        CHECK(std::abs(log_potential(nu, lam) - value) < 1e-6);
}

TEST_CASE("cardioid roots on the positive axis") {
    const auto pts = spectrum_example_66(2.0, 2.0).boundary(360);
    double small = 1e9, big = 0.0;
    for (const auto& z : pts)
        if (std::abs(z.imag()) < 1e-12 && z.real() > 0.0) {
            small = std::min(small, z.real());
            big = std::max(big, z.real());
        }
    CHECK(std::abs(small - oracle::cardioid_c2_small) < 1e-12);
    CHECK(std::abs(big - oracle::cardioid_c2_big) < 1e-12);
}

TEST_CASE("psi of the arcsine law from the generic quadrature path") {
    const MeasureR tab = MeasureR::from_density(arcsine01().continuous()->grid, arcsine01().continuous()->density, {}, true);
    CHECK(std::abs(psi(tab, -1.0) - oracle::psi_arcsine01_at_minus_one) < 1e-4);
}
