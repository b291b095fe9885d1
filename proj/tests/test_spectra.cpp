#include <cmath>
#include <variant>

#include "doctest.h"
#include "generators.hpp"
#include "oracle_values.hpp"

#include "freespec/errors.hpp"
#include "freespec/spectra.hpp"

using namespace freespec;

namespace {

const Mat2 E12 = mat2::make(0.0, 1.0, 0.0, 0.0);
const Mat2 W = mat2::make(0.0, 1.0, 1.0, 0.0);

Mat2 conj(const Mat2& u, const Mat2& a) { return u * a * u.adjoint(); }

}  // namespace

TEST_CASE("spectral radius of a product") {
    CHECK(spectral_radius_product(mat2::make(1.0, 0.0, 0.0, 2.0), mat2::make(3.0, 0.0, 0.0, 1.0), RadiusMode::normal) ==
          doctest::Approx(6.0));
    CHECK(spectral_radius_product(E12, W, RadiusMode::traceless) == doctest::Approx(1.0));
    CHECK(spectral_radius_product(mat2::make(0.0, 2.0, 1.0, 0.0), mat2::make(0.0, 3.0, 1.0, 0.0),
                                  RadiusMode::traceless) == doctest::Approx(6.0));
    CHECK_THROWS_AS(spectral_radius_product(E12, W, RadiusMode::normal), PreconditionError);
    CHECK_THROWS_AS(spectral_radius_product(Mat2::Identity(), W, RadiusMode::traceless), PreconditionError);
}

TEST_CASE("traceless product spectrum") {
    SUBCASE("invertible factors give an annulus") {
        const SpectrumRegion r = spectrum_product_traceless(W, mat2::make(0.0, 6.0, 1.0, 0.0));
        REQUIRE(r.kind() == "annulus");
        const auto& a = std::get<Annulus>(r.shape);
        CHECK(a.r_inner == doctest::Approx(1.0));
        CHECK(a.r_outer == doctest::Approx(6.0));
        CHECK(r.contains({0.0, 3.0}));
        CHECK(!r.contains(0.5));
        CHECK(r.distance(0.5) == doctest::Approx(0.5));
        CHECK(r.distance(8.0) == doctest::Approx(2.0));
    }
    SUBCASE("a singular factor gives a disk") {
        const SpectrumRegion r = spectrum_product_traceless(E12, W);
        CHECK(r.kind() == "disk");
        CHECK(r.contains(0.0));
        CHECK(r.contains(1.0));
        CHECK(!r.contains(1.01));
    }
    SUBCASE("unitary factors give the circle") {
        const SpectrumRegion r = spectrum_product_traceless(W, W);
        CHECK(r.contains(std::polar(1.0, 0.7)));
        CHECK(!r.contains(0.9));
    }
    CHECK_THROWS_AS(spectrum_product_traceless(Mat2::Identity(), W), PreconditionError);
}

TEST_CASE("canonical traceless form") {
    const CanonicalForm f = canonical_traceless(mat2::make(0.0, 2.0, 0.5, 0.0));
    CHECK(f.alpha == doctest::Approx(2.0));
    CHECK(f.beta == doctest::Approx(0.5));
    const CanonicalForm g = canonical_traceless(E12);
    CHECK(g.alpha == doctest::Approx(1.0));
    CHECK(std::abs(g.beta) < 1e-14);
    CHECK_THROWS_AS(canonical_traceless(Mat2::Identity()), PreconditionError);
}

TEST_CASE("property: canonical form preserves singular values and determinant") {
    auto e = gen::engine(41);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat2 a = gen::traceless(e);
        const CanonicalForm f = canonical_traceless(a);
        CHECK(f.alpha >= f.beta);
        CHECK(f.beta >= 0.0);
        CHECK(std::abs(std::abs(f.phase) - 1.0) < 1e-12);
        const Mat2 m = f.matrix();
        CHECK(std::abs(mat2::op_norm(m) - mat2::op_norm(a)) < 1e-10 * mat2::op_norm(a));
        CHECK(std::abs(mat2::det(m) - mat2::det(a)) < 1e-10 * std::max(1.0, std::abs(mat2::det(a))));
    }
}

TEST_CASE("representation sampler") {
    SUBCASE("two flips stay on the unit circle") {
        const RepresentationCloud c = representation_spectrum_sampler(W, W, 120);
        CHECK(c.which == RepresentationCase::invertible);
        CHECK(c.min_modulus == doctest::Approx(1.0));
        CHECK(c.max_modulus == doctest::Approx(1.0));
    }
    SUBCASE("a nilpotent factor fills the disk") {
        const RepresentationCloud c = representation_spectrum_sampler(E12, W, 120);
        CHECK(c.which == RepresentationCase::singular);
        CHECK(c.min_modulus < 1e-9);
        CHECK(c.max_modulus == doctest::Approx(1.0).epsilon(1e-6));
    }
    CHECK(representation_spectrum_sampler(Mat2::Zero(), W, 40).which == RepresentationCase::zero);
}

TEST_CASE("property: sampler moduli lie in the universal annulus") {
    auto e = gen::engine(42);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat2 a = gen::traceless_invertible(e), b = gen::traceless_invertible(e);
        const SpectrumRegion r = spectrum_product_traceless(a, b);
        const auto& ann = std::get<Annulus>(r.shape);
        const RepresentationCloud c = representation_spectrum_sampler(a, b, 180);
        CHECK(c.min_modulus >= ann.r_inner * (1.0 - 1e-9));
        CHECK(c.max_modulus <= ann.r_outer * (1.0 + 1e-9));
        CHECK(std::abs(c.min_modulus - ann.r_inner) < 1e-2 * ann.r_outer);
        CHECK(std::abs(c.max_modulus - ann.r_outer) < 1e-2 * ann.r_outer);
    }
}

TEST_CASE("property: spectra are invariant under unitary conjugation of either factor") {
    auto e = gen::engine(43);
    for (int trial = 0; trial < 25; ++trial) {
        const Mat2 a = gen::traceless_invertible(e), b = gen::traceless_invertible(e);
        const Mat2 u = gen::unitary(e), v = gen::unitary(e);
        const auto x = std::get<Annulus>(spectrum_product_traceless(a, b).shape);
        const auto y = std::get<Annulus>(spectrum_product_traceless(conj(u, a), conj(v, b)).shape);
        CHECK(std::abs(x.r_inner - y.r_inner) < 1e-10 * x.r_outer);
        CHECK(std::abs(x.r_outer - y.r_outer) < 1e-10 * x.r_outer);
        CHECK(spectral_radius_product(a, b, RadiusMode::traceless) ==
              doctest::Approx(spectral_radius_product(conj(u, a), conj(v, b), RadiusMode::traceless)));
    }
}

TEST_CASE("ellipse families") {
    const auto [a1, b1] = ellipse_axes_radial(2.0, 3.0, 1.0);
    CHECK(a1 == doctest::Approx(7.0));
    CHECK(b1 == doctest::Approx(5.0));
    const auto [a2, b2] = ellipse_axes_linear(2.0, 3.0, 0.0);
    CHECK(a2 == doctest::Approx(7.0));
    CHECK(b2 == doctest::Approx(5.0));
    const auto [a3, b3] = ellipse_axes_radial(2.0, 3.0, std::sqrt(6.0));
    CHECK(a3 == doctest::Approx(2.0 * std::sqrt(6.0)));
    CHECK(std::abs(b3) < 1e-12);

    const EllipseComparison c = ellipse_families_equal(2.0, 3.0, 256);
    CHECK(c.equal);
    CHECK(c.hausdorff < 1e-2 * 7.0 + 2.0 * c.pixel);
    CHECK(ellipse_families_equal(1.5, 1.5, 256).equal);
    CHECK_THROWS_AS(ellipse_families_equal(0.5, 2.0), PreconditionError);
}

TEST_CASE("raster and point-set Hausdorff") {
    std::vector<char> x(16, 0), y(16, 0);
    x[0] = 1;
    y[3] = 1;
    CHECK(raster_hausdorff(x, y, 4, 0.5) == doctest::Approx(1.5));
    CHECK(raster_hausdorff(x, x, 4, 0.5) == 0.0);
    CHECK_THROWS_AS(raster_hausdorff(x, std::vector<char>(9, 0), 4, 0.5), PreconditionError);
    CHECK(hausdorff_distance({0.0, 1.0}, {0.0}) == doctest::Approx(1.0));
}

TEST_CASE("cardioid region") {
    const SpectrumRegion r = spectrum_example_66(2.0, 2.0);
    CHECK(r.kind() == "implicit_cardioid");
    CHECK(std::get<ImplicitCardioid>(r.shape).c == doctest::Approx(2.0));
    CHECK(r.contains(oracle::cardioid_c2_small + 1e-9));
    CHECK(r.contains(oracle::cardioid_c2_big - 1e-9));
    CHECK(!r.contains(oracle::cardioid_c2_small - 1e-6));
    CHECK(!r.contains(0.0));
    const auto pts = r.boundary(360);
    CHECK(pts.size() >= 360);
    CHECK(pts.size() <= 720);
    for (const auto& z : pts) CHECK(std::abs(std::norm(z - 1.0) - 2.0 * std::abs(z)) < 1e-9 * std::max(1.0, std::abs(z)));
    CHECK(spectrum_example_66(1.0, 1.0).kind() == "implicit_cardioid");
    CHECK(std::get<ImplicitCardioid>(spectrum_example_66(1.0, 1.0).shape).c == doctest::Approx(0.5));

    const SpectrumRegion one = spectrum_example_66(1.0, 0.0);
    CHECK(one.contains(1.0));
    CHECK(!one.contains(1.1));
}
