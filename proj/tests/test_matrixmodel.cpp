#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "generators.hpp"

#include "freespec/errors.hpp"
#include "freespec/linalg.hpp"
#include "freespec/matrixmodel.hpp"

using namespace freespec;

namespace {

const Mat2 E12 = mat2::make(0.0, 1.0, 0.0, 0.0);
const Mat2 W = mat2::make(0.0, 1.0, 1.0, 0.0);

ModelConfig config(Eigen::Index n, int trials, std::uint64_t seed) {
    ModelConfig c;
    c.N = n;
    c.trials = trials;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("Haar unitaries") {
    Rng rng = make_rng(1, 0);
    const Eigen::MatrixXcd u = haar_unitary(64, rng);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(64, 64)).norm() < 1e-12);

    const Eigen::MatrixXcd c = haar_columns(40, 10, rng);
    CHECK((c.adjoint() * c - Eigen::MatrixXcd::Identity(10, 10)).norm() < 1e-12);

    cplx mean = 0.0;
    const int draws = 4000;
    for (int k = 0; k < draws; ++k) mean += haar_unitary(1, rng)(0, 0);
    CHECK(std::abs(mean) / draws < 4.0 / std::sqrt(draws));

    double second = 0.0;
    const int big = 400;
    for (int k = 0; k < big; ++k) second += std::norm(haar_unitary(64, rng).trace());
    CHECK(std::abs(second / big - 1.0) < 0.25);
}

TEST_CASE("embedding keeps the spectrum of each factor") {
    Rng rng = make_rng(2, 0);
    const Mat2 a = mat2::make(2.0, 1.0, 0.0, -1.0);
    const EmbeddedPair p = embed_pair(a, W, 32, rng);
    CHECK(std::abs(p.a.trace() - 32.0) < 1e-10);
    CHECK(std::abs((p.b * p.b).trace() - 64.0) < 1e-10);
    CHECK((p.b * p.b - Eigen::MatrixXcd::Identity(64, 64)).norm() < 1e-10);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(p.a);
    CHECK(std::abs(svd.singularValues()(0) - mat2::op_norm(a)) < 1e-10);
    CHECK((kron_identity(a, 3) - kron_identity(a, 3)).norm() == 0.0);
    CHECK(kron_identity(a, 3)(0, 3) == cplx(1.0));
}

TEST_CASE("trace of a product factorizes on average") {
    const Mat2 a = mat2::make(1.0, 2.0, 0.0, 3.0), b = mat2::make(0.5, 0.0, 1.0, 1.5);
    const ComplexEstimate est = trace_word_estimate({{1, a}, {2, b}}, config(64, 32, 5));
    const cplx exact = mat2::tau(a) * mat2::tau(b);
    CHECK(std::abs(est.mean - exact) < 4.0 * est.stderr_ + 1e-3);
    CHECK(est.per_trial.size() == 32);
}

TEST_CASE("runs are reproducible and independent of the worker count") {
    ModelConfig one = config(32, 4, 11), many = config(32, 4, 11);
    one.threads = 1;
    many.threads = 4;
    const EmpiricalSpectrum x = empirical_brown(E12, W, Kind::sum, one);
    const EmpiricalSpectrum y = empirical_brown(E12, W, Kind::sum, many);
    REQUIRE(x.samples.size() == 4 * 64);
    CHECK(x.samples == y.samples);
    CHECK(x.trial == y.trial);
    CHECK(empirical_brown(E12, W, Kind::sum, config(32, 4, 12)).samples != x.samples);
    CHECK_THROWS_AS(validate(config(1, 4, 1)), PreconditionError);
    CHECK_THROWS_AS(validate(config(8, 0, 1)), PreconditionError);
}

TEST_CASE("empirical radial CDF") {
    SUBCASE("nilpotent times flip has an atom of one half") {
        const RadialMeasure nu = empirical_radial_cdf(empirical_brown(E12, W, Kind::product, config(128, 2, 3)));
        CHECK(nu.atom_at_zero() == doctest::Approx(0.5).epsilon(0.02));
        CHECK(nu.r_outer() <= 1.0 + 0.1);
    }
    SUBCASE("two flips stay on the unit circle") {
        const EmpiricalSpectrum s = empirical_brown(W, W, Kind::product, config(64, 1, 3));
        for (const auto& z : s.samples) CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
        const RadialMeasure nu = empirical_radial_cdf(s);
        CHECK(nu.atom_at_zero() == 0.0);
        CHECK(nu.cdf(1.0 + 1e-9) == 1.0);
    }
    SUBCASE("zero operator") {
        const RadialMeasure nu = empirical_radial_cdf(empirical_brown(Mat2::Zero(), W, Kind::product, config(16, 1, 3)));
        CHECK(nu.atom_at_zero() == 1.0);
    }
}

TEST_CASE("singular values") {
    ModelConfig c = config(32, 1, 4);
    c.what = Observable::singular_values;
    const EmpiricalSpectrum s = empirical_brown(W, W, Kind::product, c);
    CHECK(s.singular_values);
    for (const auto& z : s.samples) CHECK(std::abs(z - 1.0) < 1e-10);
}

TEST_CASE("log determinant potential") {
    SUBCASE("a unitary product seen from outside the circle") {
        const auto est = log_determinant_potential(W, W, Kind::product, {2.0, cplx(0.0, 3.0)}, config(128, 1, 6));
        CHECK(std::abs(est[0].mean - std::log(2.0)) < 1e-2);
        CHECK(std::abs(est[1].mean - std::log(3.0)) < 1e-2);
    }
    SUBCASE("at zero the determinant factorizes") {
        const Mat2 a = mat2::make(2.0, 1.0, 0.0, 0.5), b = mat2::make(1.0, 0.0, 3.0, 4.0);
        const auto est = log_determinant_potential(a, b, Kind::product, {0.0}, config(64, 2, 6));
        const double exact = 0.5 * (std::log(std::abs(mat2::det(a))) + std::log(std::abs(mat2::det(b))));
        CHECK(std::abs(est[0].mean - exact) < 1e-9);
        CHECK(est[0].stderr_ < 1e-9);
    }
}

TEST_CASE("compression of a projection follows the arcsine law") {
    const auto ev = compression_spectrum(mat2::make(1.0, 0.0, 0.0, 0.0), config(256, 1, 8));
    REQUIRE(ev.size() == 256);
    CHECK(*std::min_element(ev.begin(), ev.end()) > -1e-10);
    CHECK(*std::max_element(ev.begin(), ev.end()) < 1.0 + 1e-10);
    CHECK(ks_distance(ev, arcsine01_cdf) < 0.08);
}

TEST_CASE("KS distance and the arcsine CDF") {
    CHECK(arcsine01_cdf(0.5) == doctest::Approx(0.5));
    CHECK(arcsine01_cdf(0.0) == 0.0);
    CHECK(arcsine01_cdf(1.0) == doctest::Approx(1.0));
    std::vector<double> grid;
    for (int k = 0; k < 100; ++k) grid.push_back((k + 0.5) / 100.0);
    CHECK(ks_distance(grid, [](double t) { return std::clamp(t, 0.0, 1.0); }) == doctest::Approx(0.005));
}

TEST_CASE("property: nilpotent sum eigenvalues stay near the disc") {
    const EmpiricalSpectrum s = empirical_brown(E12, E12, Kind::sum, config(128, 1, 9));
    double worst = 0.0;
    for (const auto& z : s.samples) worst = std::max(worst, std::abs(z));
    CHECK(worst < 1.0 / std::numbers::sqrt2 + 0.1);
}
