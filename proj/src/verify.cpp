#include "freespec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "freespec/brown.hpp"
#include "freespec/cumulants.hpp"
#include "freespec/errors.hpp"
#include "freespec/freeprod.hpp"
#include "freespec/linalg.hpp"
#include "freespec/matrixmodel.hpp"
#include "freespec/measures.hpp"
#include "freespec/moments.hpp"
#include "freespec/spectra.hpp"

namespace freespec {

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) { return std::chrono::duration<double>(clock_type::now() - t0).count(); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Check upper(std::string label, double measured, double bound) {
    return {std::move(label), measured, "< " + sci(bound), measured < bound};
}

Check at_least(std::string label, double measured, double bound) {
    return {std::move(label), measured, ">= " + sci(bound), measured >= bound};
}

Check within(std::string label, double measured, double lo, double hi) {
    return {std::move(label), measured, "in [" + sci(lo) + ", " + sci(hi) + "]", measured >= lo && measured <= hi};
}

Check skipped(std::string label, std::string bound) { return {std::move(label), 0.0, std::move(bound), true, true}; }

ModelConfig model(const VerifyOptions& o, Eigen::Index n, int trials, std::uint64_t salt) {
    ModelConfig cfg;
    cfg.N = n;
    cfg.trials = trials;
    cfg.seed = o.seed * 1000003ULL + salt;
    cfg.threads = o.threads;
    return cfg;
}

Mat2 random_mat(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = {g(rng), g(rng)};
    return m;
}

Mat2 centered(const Mat2& m) { return m - mat2::tau(m) * Mat2::Identity(); }

double fraction_within(const std::vector<cplx>& zs, const std::function<bool(cplx)>& ok) {
    std::size_t hit = 0;
    for (auto z : zs) hit += ok(z) ? 1 : 0;
    return static_cast<double>(hit) / static_cast<double>(zs.size());
}

CriterionResult c1(const VerifyOptions&) {
    CriterionResult r{1, "arcsine radial law", {}, 0.0};
    const auto t0 = clock_type::now();
    const RadialMeasure nu = haagerup_larsen(arcsine01());
    const double elapsed = since(t0);
    const double edge = 1.0 / std::numbers::sqrt2;
    double err = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        const double s = edge * i / 4000.0;
        const double exact = s * s / (1.0 - s * s);
        err = std::max(err, std::abs(nu.cdf(s) - exact));
    }
    r.checks.push_back(upper("sup |F - s^2/(1-s^2)|", err, 1e-5));
    r.checks.push_back(upper("runtime s", elapsed, 1.0));
    return r;
}

CriterionResult c2(const VerifyOptions& o) {
    CriterionResult r{2, "nilpotent sum spectral radius", {}, 0.0};
    const double exact = brown_sum_nilpotents(1.0, 1.0).r_outer();
    r.checks.push_back(upper("|r_outer - 1/sqrt2|", std::abs(exact - 1.0 / std::numbers::sqrt2), 1e-12));
    if (!o.monte_carlo) {
        r.checks.push_back(skipped("max modulus N=512 x16", "in [0.67, 0.74]"));
        return r;
    }
    const auto spec = empirical_brown(mat2::unit(1, 2), mat2::unit(1, 2), Kind::sum, model(o, 512, 16, 2));
    double mx = 0.0;
    for (auto z : spec.samples) mx = std::max(mx, std::abs(z));
    r.checks.push_back(within("max modulus N=512 x16", mx, 0.67, 0.74));
    return r;
}

CriterionResult c3(const VerifyOptions& o) {
    CriterionResult r{3, "one-eighth constant", {}, 0.0};
    const MeasureR mu = arcsine01();
    const double q = mu.integrate([](double t) { return t * (1.0 - t); });
    r.checks.push_back(upper("|int t(1-t) rho - 1/8|", std::abs(q - 0.125), 1e-10));
    if (!o.monte_carlo) {
        r.checks.push_back(skipped("corner-block tau(h^2(1-h^2)) N=1024", "in [0.115, 0.135]"));
        r.checks.push_back(skipped("|sqrt(1-h^2) h u|_2^2 N=1024", "in [0.115, 0.135]"));
        return r;
    }
    const auto cfg = model(o, 1024, 1, 3);
    Rng rng = make_rng(cfg.seed, 0);
    const Eigen::MatrixXcd t = compressed_block(mat2::unit(1, 1), cfg.N, rng);
    const double m = (t.trace().real() - t.squaredNorm()) / static_cast<double>(cfg.N);
    r.checks.push_back(within("corner-block tau(h^2(1-h^2)) N=1024", m, 0.115, 0.135));
    const WordExpr entry = WordExpr::word({Letter::func(1, 1), Letter::u()});
    Rng grng = make_rng(cfg.seed, 1);
    const Eigen::MatrixXcd e = evaluate(entry, sample_generators(cfg.N, grng));
    r.checks.push_back(within("|sqrt(1-h^2) h u|_2^2 N=1024", e.squaredNorm() / static_cast<double>(cfg.N), 0.115, 0.135));
    return r;
}

CriterionResult c4(const VerifyOptions&) {
    CriterionResult r{4, "annulus from unitary orbits", {}, 0.0};
    const auto t0 = clock_type::now();
    const std::pair<double, double> cases[] = {{2.0, 3.0}, {1.5, 1.5}};
    for (auto [b1, b2] : cases) {
        const std::string tag = "(" + sci(b1) + "," + sci(b2) + ") ";
        const auto cloud = representation_spectrum_sampler(mat2::make(0, b1, 1, 0), mat2::make(0, b2, 1, 0));
        r.checks.push_back(upper(tag + "|min modulus - 1|", std::abs(cloud.min_modulus - 1.0), 1e-2));
        r.checks.push_back(upper(tag + "|max modulus - b1 b2|", std::abs(cloud.max_modulus - b1 * b2), 1e-2));
        const auto cmp = ellipse_families_equal(b1, b2);
        r.checks.push_back({tag + "ellipse unions equal", cmp.equal ? 1.0 : 0.0, "= 1", cmp.equal});
        r.checks.push_back(upper(tag + "hausdorff", cmp.hausdorff, 1e-2));
    }
    r.checks.push_back(upper("runtime s", since(t0), 10.0));
    return r;
}

CriterionResult c5(const VerifyOptions& o) {
    CriterionResult r{5, "traceless product radii", {}, 0.0};
    const Mat2 a = mat2::make(0, 1, 1, 0), b = mat2::make(0, 1, 2, 0);
    const RadialMeasure nu = brown_product(a, b);
    r.checks.push_back(upper("|r_in - sqrt(8/5)|", std::abs(nu.r_inner() - std::sqrt(8.0 / 5.0)), 1e-9));
    r.checks.push_back(upper("|r_out - sqrt(5/2)|", std::abs(nu.r_outer() - std::sqrt(5.0 / 2.0)), 1e-9));
    if (!o.monte_carlo) {
        r.checks.push_back(skipped("fraction in annulus +-0.05 N=512", ">= 0.98"));
        return r;
    }
    const auto spec = empirical_brown(a, b, Kind::product, model(o, 512, 2, 5));
    const double lo = nu.r_inner() - 0.05, hi = nu.r_outer() + 0.05;
    r.checks.push_back(at_least("fraction in annulus +-0.05 N=512", fraction_within(spec.samples, [&](cplx z) {
                                    return std::abs(z) >= lo && std::abs(z) <= hi;
                                }),
                                0.98));
    return r;
}

CriterionResult c6(const VerifyOptions&) {
    CriterionResult r{6, "R-diagonal predicates vs cumulants", {}, 0.0};
    const std::vector<Mat2> reps = {
        Mat2::Zero(),                                                    // traceless, singular, scalar
        mat2::make(0, 1, 0, 0),                                          // traceless, singular
        mat2::make(0, 1, 1, 0),                                          // traceless, invertible
        mat2::make(cplx(1, 2), cplx(0.5, -1), cplx(2, 1), cplx(-1, -2)),  // traceless, invertible
        mat2::make(1, 0, 0, 0),                                          // singular
        mat2::make(1, 2, 0.5, 1),                                        // singular
        mat2::make(2, 0, 0, 2),                                          // scalar, invertible
        mat2::make(1, 1, 0, 2),                                          // invertible
    };
    double product_bad = 0.0, sum_bad = 0.0;
    for (const auto& a : reps)
        for (const auto& b : reps) {
            if (is_r_diagonal_product(a, b) != r_diagonal_by_cumulants(Kind::product, a, b, 6)) product_bad += 1.0;
            if (is_r_diagonal_sum(a, b) != r_diagonal_by_cumulants(Kind::sum, a, b, 6)) sum_bad += 1.0;
        }
    const Mat2 two = 2.0 * Mat2::Identity();
    if (is_r_diagonal_sum(two, -two) != r_diagonal_by_cumulants(Kind::sum, two, -two, 6)) sum_bad += 1.0;
    r.checks.push_back({"product mismatches over 64 pairs", product_bad, "= 0", product_bad == 0.0});
    r.checks.push_back({"sum mismatches over 65 pairs", sum_bad, "= 0", sum_bad == 0.0});
    return r;
}

CriterionResult c7(const VerifyOptions& o) {
    CriterionResult r{7, "fourth-moment and ABAB identities", {}, 0.0};
    Rng rng = make_rng(o.seed, 7);
    double e_sum = 0.0, e_abab = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Mat2 a = centered(random_mat(rng)), b = centered(random_mat(rng));
        const auto ms = moment_sequence(Kind::sum, a, b, 4);
        const cplx rhs = mat2::tau(a * a * a * a) + mat2::tau(b * b * b * b) +
                         4.0 * mat2::tau(a * a) * mat2::tau(b * b);
        e_sum = std::max(e_sum, std::abs(ms[3] - rhs) / std::max(1.0, std::abs(rhs)));
        const Mat2 A = Mat2::Identity() + a, B = Mat2::Identity() + b;
        const auto mp = moment_sequence(Kind::product, A, B, 2);
        const cplx rhs2 = 1.0 + mat2::tau(a * a) + mat2::tau(b * b);
        e_abab = std::max(e_abab, std::abs(mp[1] - rhs2) / std::max(1.0, std::abs(rhs2)));
    }
    r.checks.push_back(upper("tau((A+B)^4) rel. error, 50 cases", e_sum, 1e-12));
    r.checks.push_back(upper("tau(ABAB) rel. error, 50 cases", e_abab, 1e-12));
    return r;
}

CriterionResult c8(const VerifyOptions& o) {
    CriterionResult r{8, "symbolic decomposition", {}, 0.0};
    Rng rng = make_rng(o.seed, 8);
    double err = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Mat2 b = random_mat(rng);
        const SymbolicMat2 d = decompose(b);
        SymbolicMat2 p = SymbolicMat2::identity();
        Mat2 bk = Mat2::Identity();
        for (int k = 1; k <= 4; ++k) {
            p = p * d;
            bk = bk * b;
            err = std::max(err, std::abs(symbolic_trace(p) - mat2::tau(bk)));
        }
    }
    r.checks.push_back(upper("|symbolic trace - tau(B^k)|, k<=4", err, 1e-10));
    if (!o.monte_carlo) {
        r.checks.push_back(skipped("KS corner block vs arcsine, N=1024", "< 0.05"));
        return r;
    }
    const auto ev = compression_spectrum(mat2::unit(1, 1), model(o, 1024, 1, 8));
    r.checks.push_back(upper("KS corner block vs arcsine, N=1024", ks_distance(ev, arcsine01_cdf), 0.05));
    return r;
}

CriterionResult c9(const VerifyOptions& o) {
    CriterionResult r{9, "unipotent product region", {}, 0.0};
    const SpectrumRegion region = spectrum_example_66(1.0, 1.0);
    const auto* shape = std::get_if<ImplicitCardioid>(&region.shape);
    r.checks.push_back(upper("|c - 1/2|", shape ? std::abs(shape->c - 0.5) : 1.0, 1e-15));
    if (!o.monte_carlo) {
        r.checks.push_back(skipped("fraction within 0.05 of region N=512", ">= 0.98"));
        return r;
    }
    const Mat2 u = mat2::make(1, 1, 0, 1);
    const auto spec = empirical_brown(u, u, Kind::product, model(o, 512, 2, 9));
    r.checks.push_back(at_least("fraction within 0.05 of region N=512",
                                fraction_within(spec.samples, [&](cplx z) { return region.distance(z) <= 0.05; }),
                                0.98));
    return r;
}

CriterionResult c10(const VerifyOptions& o) {
    CriterionResult r{10, "log-determinant outside the support", {}, 0.0};
    struct Case {
        std::string name;
        Kind kind;
        Mat2 a, b;
        RadialMeasure nu;
    };
    const std::vector<Case> cases = {
        {"annulus", Kind::product, mat2::make(0, 1, 1, 0), mat2::make(0, 1, 2, 0),
         brown_product(mat2::make(0, 1, 1, 0), mat2::make(0, 1, 2, 0))},
        {"nilpotent sum", Kind::sum, mat2::unit(1, 2), mat2::unit(1, 2), brown_sum_nilpotents(1.0, 1.0)},
        {"nilpotent times diagonal", Kind::product, mat2::unit(1, 2), mat2::make(2, 0, 0, 0),
         brown_example_65(2.0, 0.0)},
    };
    double analytic = 0.0;
    for (std::size_t c = 0; c < cases.size(); ++c) {
        const auto& cs = cases[c];
        std::vector<cplx> lams;
        for (int k = 0; k < 5; ++k) lams.push_back(std::polar(cs.nu.r_outer() * (1.25 + 0.5 * k), 1.1 * k + 0.3));
        for (auto lam : lams) analytic = std::max(analytic, std::abs(log_potential(cs.nu, lam) - std::log(std::abs(lam))));
        if (!o.monte_carlo) {
            r.checks.push_back(skipped(cs.name + ": max |model - log|lambda||", "< 0.01"));
            continue;
        }
        const auto est = log_determinant_potential(cs.a, cs.b, cs.kind, lams, model(o, 512, 1, 100 + c));
        double worst = 0.0;
        for (std::size_t k = 0; k < lams.size(); ++k)
            worst = std::max(worst, std::abs(est[k].mean - std::log(std::abs(lams[k]))));
        r.checks.push_back(upper(cs.name + ": max |model - log|lambda||", worst, 0.01));
    }
    r.checks.insert(r.checks.begin(), upper("max |log potential - log|lambda||", analytic, 1e-9));
    return r;
}

}  // namespace

bool CriterionResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CriterionResult verify_criterion(int id, const VerifyOptions& opts) {
    using Fn = CriterionResult (*)(const VerifyOptions&);
    static const Fn table[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
    if (id < 1 || id > 10) throw PreconditionError("criterion id must be in 1..10");
    const auto t0 = clock_type::now();
    CriterionResult r = table[id - 1](opts);
    r.seconds = since(t0);
    return r;
}

std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
    VerifyOptions o = opts;
    if (suite == "exact")
        o.monte_carlo = false;
    else if (suite != "full" && suite != "paper")
        throw PreconditionError("unknown suite '" + suite + "' (expected full or exact)");
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) out.push_back(verify_criterion(id, o));
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::string line = std::string(r.pass() ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + ". " + r.name + " |";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        line += (i ? "; " : " ") + c.label + " = " + (c.skipped ? std::string("skipped") : sci(c.measured)) + " " +
                c.bound;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, " | %.1f s", r.seconds);
    return line + buf;
}

}  // namespace freespec
