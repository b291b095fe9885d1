#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "generators.hpp"

#include "freespec/cumulants.hpp"
#include "freespec/errors.hpp"
#include "freespec/matrixmodel.hpp"
#include "freespec/moments.hpp"

using namespace freespec;

namespace {

const Mat2 E11 = mat2::make(1.0, 0.0, 0.0, 0.0);
const Mat2 E12 = mat2::make(0.0, 1.0, 0.0, 0.0);
const Mat2 W = mat2::make(0.0, 1.0, 1.0, 0.0);

FreeWord product_power(const Mat2& a, const Mat2& b, int k) {
    FreeWord w;
    for (int i = 0; i < k; ++i) {
        w.push_back({1, a});
        w.push_back({2, b});
    }
    return w;
}

}  // namespace

TEST_CASE("trace of short words") {
    CHECK(std::abs(trace_word({}) - 1.0) < 1e-15);
    CHECK(std::abs(trace_word({{1, E11}}) - 0.5) < 1e-15);
    CHECK(std::abs(trace_word({{1, E11}, {2, E11}}) - 0.25) < 1e-15);
    // tau(p q p q) = tau(p)^2 tau(q) + tau(p) tau(q)^2 - tau(p)^2 tau(q)^2
    CHECK(std::abs(trace_word(product_power(E11, E11, 2)) - 0.1875) < 1e-15);
    CHECK_THROWS_AS(trace_word({{3, E11}}), PreconditionError);
}

TEST_CASE("property: alternating centered words have zero trace") {
    auto e = gen::engine(61);
    for (int trial = 0; trial < 100; ++trial) {
        const FreeWord w = gen::alternating_centered(e, 1 + trial % 8);
        CHECK(std::abs(trace_word(w)) < 1e-12);
    }
}

TEST_CASE("property: fusing adjacent letters of one copy keeps the trace") {
    auto e = gen::engine(62);
    for (int trial = 0; trial < 50; ++trial) {
        FreeWord w = gen::word(e, 6);
        const cplx before = trace_word(w);
        FreeWord split;
        for (const auto& l : w) {
            const Mat2 g = gen::matrix(e);
            if (std::abs(mat2::det(g)) < 1e-3) {
                split.push_back(l);
                continue;
            }
            split.push_back({l.copy, l.m * g.inverse()});
            split.push_back({l.copy, g});
        }
        CHECK(std::abs(trace_word(split) - before) < 1e-9 * std::max(1.0, std::abs(before)));
    }
}

TEST_CASE("property: trace is cyclic") {
    auto e = gen::engine(63);
    for (int trial = 0; trial < 50; ++trial) {
        FreeWord w = gen::word(e, 7);
        const cplx t = trace_word(w);
        std::rotate(w.begin(), w.begin() + 1 + trial % 6, w.end());
        CHECK(std::abs(trace_word(w) - t) < 1e-10 * std::max(1.0, std::abs(t)));
    }
}

TEST_CASE("moment sequences") {
    const auto m = moment_sequence(Kind::product, W, W, 4);
    REQUIRE(m.size() == 4);
    CHECK(std::abs(m[0]) < 1e-15);
    CHECK(std::abs(m[3]) < 1e-15);
    const auto s = moment_sequence(Kind::sum, E11, E11, 2);
    CHECK(std::abs(s[0] - 1.0) < 1e-15);
    CHECK(std::abs(s[1] - 1.5) < 1e-15);
    CHECK(std::abs(moment_sequence(Kind::sum, E12, E12.adjoint(), 2)[1]) < 1e-15);
    CHECK_THROWS_AS(moment_sequence(Kind::sum, W, W, -1), PreconditionError);
    CHECK_THROWS_AS(moment_sequence(Kind::sum, W, W, 9), ResourceError);
    CHECK_THROWS_AS(star_moment(Kind::sum, W, W, std::vector<bool>(9, false)), ResourceError);
}

TEST_CASE("property: cube of a product with unit traces") {
    // tau((AB)^3) = 1 + 3(p + q) + 3pq with p, q the variances of A and B;
    // 2x2 centered parts have vanishing third moment
    auto e = gen::engine(64);
    for (int trial = 0; trial < 30; ++trial) {
        const Mat2 a = gen::traceless(e) + Mat2::Identity(), b = gen::traceless(e) + Mat2::Identity();
        const cplx p = mat2::tau((a - Mat2::Identity()) * (a - Mat2::Identity()));
        const cplx q = mat2::tau((b - Mat2::Identity()) * (b - Mat2::Identity()));
        const cplx expect = 1.0 + 3.0 * (p + q) + 3.0 * p * q;
        const cplx got = moment_sequence(Kind::product, a, b, 3)[2];
        CHECK(std::abs(got - expect) < 1e-10 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("cube of a product agrees with the matrix model") {
    const Mat2 a = mat2::make(1.0, 0.5, 0.0, 1.0), b = mat2::make(1.5, 0.0, 0.0, 0.5);
    ModelConfig cfg;
    cfg.N = 128;
    cfg.trials = 6;
    cfg.seed = 3;
    const cplx exact = trace_word(product_power(a, b, 3));
    const ComplexEstimate est = trace_word_estimate(product_power(a, b, 3), cfg);
    CHECK(std::abs(est.mean - exact) < 4.0 * est.stderr_ + 5e-3);
}

TEST_CASE("R-diagonality") {
    CHECK(is_r_diagonal_product(E12, W));
    CHECK(!is_r_diagonal_product(E11, W));
    CHECK(is_r_diagonal_product(Mat2::Zero(), E11));
    CHECK(is_r_diagonal_sum(2.0 * Mat2::Identity(), -2.0 * Mat2::Identity()));
    CHECK(!is_r_diagonal_sum(E12, E12.adjoint()));
}

TEST_CASE("property: R-diagonal predicates agree with the cumulant test") {
    auto e = gen::engine(65);
    for (int trial = 0; trial < 30; ++trial) {
        const Mat2 a = trial % 3 == 0 ? gen::traceless(e) : gen::matrix(e);
        const Mat2 b = trial % 2 == 0 ? gen::traceless(e) : gen::matrix(e);
        CHECK(is_r_diagonal_product(a, b) == r_diagonal_by_cumulants(Kind::product, a, b));
        CHECK(is_r_diagonal_sum(a, b) == r_diagonal_by_cumulants(Kind::sum, a, b));
    }
}

TEST_CASE("non-crossing partitions") {
    const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 1; n <= 8; ++n) CHECK(noncrossing_partitions(n).size() == static_cast<std::size_t>(catalan[n]));
    CHECK_THROWS_AS(noncrossing_partitions(11), ResourceError);
    // cumulants of a Haar unitary: kappa_2(u, u*) = 1, kappa_4(u, u*, u, u*) = -1
    auto haar = [](const std::vector<bool>& p) {
        int net = 0;
        for (bool s : p) net += s ? -1 : 1;
        return cplx(net == 0 ? 1.0 : 0.0);
    };
    CHECK(std::abs(free_cumulant({false, true}, haar) - 1.0) < 1e-15);
    CHECK(std::abs(free_cumulant({false, true, false, true}, haar) + 1.0) < 1e-15);
    CHECK(std::abs(free_cumulant({false, false, true, true}, haar)) < 1e-15);
}

TEST_CASE("support classification") {
    CHECK(classify_support(Kind::product, 2.0 * Mat2::Identity(), 3.0 * Mat2::Identity()).support ==
          SupportClass::scalar);
    CHECK(classify_support(Kind::sum, 2.0 * Mat2::Identity(), E12).support == SupportClass::matrix_case);
    CHECK(classify_support(Kind::product, E12, W).support == SupportClass::multi_point_support);
    CHECK(classify_support(Kind::sum, E12, E12).support == SupportClass::multi_point_support);
    const Classification c = classify_support(Kind::product, E11, W);
    CHECK(!c.reason.empty());
    CHECK(!c.certificates.empty());
    CHECK(to_string(SupportClass::multi_point_support) == "multi-point-support");
}

TEST_CASE("property: scalar pairs are never multi-point") {
    const double vals[] = {-2.0, -0.5, 0.0, 1.0, 3.0};
    for (double x : vals)
        for (double y : vals)
            for (Kind k : {Kind::product, Kind::sum})
                CHECK(classify_support(k, x * Mat2::Identity(), y * Mat2::Identity()).support != SupportClass::multi_point_support);
}
