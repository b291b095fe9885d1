#include "freespec/matrixmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "freespec/errors.hpp"

namespace freespec {

namespace {

using Eigen::MatrixXcd;

// U M U* for block-structured M = A (x) I_N: the left product only mixes
// column blocks, so it costs O(N^2).
MatrixXcd conjugate_kron(const MatrixXcd& u, const Mat2& a, Eigen::Index n) {
    MatrixXcd left(2 * n, 2 * n);
    for (int j = 0; j < 2; ++j)
        left.middleCols(j * n, n) = a(0, j) * u.middleCols(0, n) + a(1, j) * u.middleCols(n, n);
    return left * u.adjoint();
}

template <class C>
double stderr_of(const std::vector<C>& xs, C mean) {
    if (xs.size() < 2) return 0.0;
    double ss = 0.0;
    for (const auto& x : xs) ss += std::norm(x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
}

}  // namespace

void validate(const ModelConfig& cfg) {
    if (cfg.N < 2) throw PreconditionError("matrix model needs N >= 2");
    if (cfg.trials < 1) throw PreconditionError("matrix model needs at least one trial");
}

unsigned worker_count(const ModelConfig& cfg) {
    unsigned w = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FREESPEC_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) w = std::min<unsigned>(w, static_cast<unsigned>(cap));
    }
    return std::max(1U, std::min<unsigned>(w, static_cast<unsigned>(std::max(1, cfg.trials))));
}

MatrixXcd kron_identity(const Mat2& a, Eigen::Index n) {
    MatrixXcd m = MatrixXcd::Zero(2 * n, 2 * n);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.block(i * n, j * n, n, n).diagonal().setConstant(a(i, j));
    return m;
}

EmbeddedPair embed_pair(const Mat2& a, const Mat2& b, Eigen::Index n, Rng& rng) {
    if (n < 2) throw PreconditionError("matrix model needs N >= 2");
    const MatrixXcd u = haar_unitary(2 * n, rng);
    const MatrixXcd v = haar_unitary(2 * n, rng);
    return {conjugate_kron(u, a, n), conjugate_kron(v, b, n)};
}

MatrixXcd combine(Kind kind, const EmbeddedPair& p) { return kind == Kind::product ? MatrixXcd(p.a * p.b) : MatrixXcd(p.a + p.b); }

MatrixXcd relative_model(Kind kind, const Mat2& a, const Mat2& b, Eigen::Index n, Rng& rng) {
    if (n < 2) throw PreconditionError("matrix model needs N >= 2");
    MatrixXcd x = conjugate_kron(haar_unitary(2 * n, rng), b, n);
    if (kind == Kind::sum) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) x.block(i * n, j * n, n, n).diagonal().array() += a(i, j);
        return x;
    }
    MatrixXcd out(2 * n, 2 * n);
    for (int i = 0; i < 2; ++i) out.middleRows(i * n, n) = a(i, 0) * x.middleRows(0, n) + a(i, 1) * x.middleRows(n, n);
    return out;
}

MatrixXcd compressed_block(const Mat2& b, Eigen::Index n, Rng& rng) {
    if (n < 2) throw PreconditionError("matrix model needs N >= 2");
    // top N rows of a Haar unitary, as the transpose of N Haar columns
    const MatrixXcd rows = haar_columns(2 * n, n, rng).transpose();
    MatrixXcd block = MatrixXcd::Zero(n, n);
    for (int i = 0; i < 2; ++i) {
        if (b(i, 0) == cplx(0.0) && b(i, 1) == cplx(0.0)) continue;
        MatrixXcd right = MatrixXcd::Zero(n, n);
        for (int j = 0; j < 2; ++j)
            if (b(i, j) != cplx(0.0)) right += b(i, j) * rows.middleCols(j * n, n).adjoint();
        block += rows.middleCols(i * n, n) * right;
    }
    return block;
}

EmpiricalSpectrum empirical_brown(const Mat2& a, const Mat2& b, Kind kind, const ModelConfig& cfg) {
    const bool sv = cfg.what == Observable::singular_values;
    const auto per = run_trials<std::vector<std::complex<double>>>(cfg, [&](int, Rng& rng) {
        const MatrixXcd x = relative_model(kind, a, b, cfg.N, rng);
        if (!sv) return eigenvalues(x);
        const Eigen::VectorXd s = singular_values(x);
        return std::vector<std::complex<double>>(s.data(), s.data() + s.size());
    });
    EmpiricalSpectrum out;
    out.N = cfg.N;
    out.trials = cfg.trials;
    out.singular_values = sv;
    for (int t = 0; t < cfg.trials; ++t) {
        const auto& s = per[static_cast<std::size_t>(t)];
        out.samples.insert(out.samples.end(), s.begin(), s.end());
        out.trial.insert(out.trial.end(), s.size(), t);
    }
    return out;
}

RadialMeasure empirical_radial_cdf(const EmpiricalSpectrum& spec) {
    if (spec.samples.empty()) throw PreconditionError("empty sample");
    std::vector<double> r;
    r.reserve(spec.samples.size());
    for (auto z : spec.samples) r.push_back(std::abs(z));
    std::sort(r.begin(), r.end());
    const double n = static_cast<double>(r.size());
    const auto first = std::lower_bound(r.begin(), r.end(), 1e-8);
    const double atom = static_cast<double>(first - r.begin()) / n;
    if (first == r.end()) return RadialMeasure::point_mass_at_zero();
    std::vector<double> s, F;
    for (auto it = first; it != r.end(); ++it) {
        const double cum = static_cast<double>(it - r.begin() + 1) / n;
        if (!s.empty() && *it == s.back()) {
            F.back() = cum;
        } else {
            s.push_back(*it);
            F.push_back(cum);
        }
    }
    F.back() = 1.0;
    const double lo = s.front(), hi = s.back();
    return RadialMeasure(atom, lo, hi, std::move(s), std::move(F), RadialMeasure::Interp::step);
}

std::vector<Estimate> log_determinant_potential(const Mat2& a, const Mat2& b, Kind kind,
                                                const std::vector<std::complex<double>>& lambdas,
                                                const ModelConfig& cfg) {
    const auto per = run_trials<std::vector<double>>(cfg, [&](int, Rng& rng) {
        const MatrixXcd x = relative_model(kind, a, b, cfg.N, rng);
        std::vector<double> vals;
        vals.reserve(lambdas.size());
        for (auto lam : lambdas) {
            MatrixXcd y = x;
            y.diagonal().array() -= lam;
            vals.push_back(log_abs_det(std::move(y)) / static_cast<double>(2 * cfg.N));
        }
        return vals;
    });
    std::vector<Estimate> out(lambdas.size());
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        auto& e = out[k];
        for (const auto& p : per) e.per_trial.push_back(p[k]);
        double m = 0.0;
        for (double v : e.per_trial) m += v;
        e.mean = m / static_cast<double>(e.per_trial.size());
        e.stderr_ = stderr_of(e.per_trial, e.mean);
    }
    return out;
}

ComplexEstimate trace_word_estimate(const FreeWord& w, const ModelConfig& cfg) {
    for (const auto& l : w)
        if (l.copy != 1 && l.copy != 2) throw PreconditionError("letters must come from copy 1 or copy 2");
    ComplexEstimate out;
    out.per_trial = run_trials<std::complex<double>>(cfg, [&](int, Rng& rng) {
        const MatrixXcd u = haar_unitary(2 * cfg.N, rng);
        const MatrixXcd v = haar_unitary(2 * cfg.N, rng);
        MatrixXcd acc = MatrixXcd::Identity(2 * cfg.N, 2 * cfg.N);
        for (const auto& l : w) acc = acc * conjugate_kron(l.copy == 1 ? u : v, l.m, cfg.N);
        return acc.trace() / static_cast<double>(2 * cfg.N);
    });
    for (auto x : out.per_trial) out.mean += x;
    out.mean /= static_cast<double>(out.per_trial.size());
    out.stderr_ = stderr_of(out.per_trial, out.mean);
    return out;
}

std::vector<double> compression_spectrum(const Mat2& b, const ModelConfig& cfg) {
    const auto per = run_trials<std::vector<double>>(cfg, [&](int, Rng& rng) {
        const MatrixXcd block = compressed_block(b, cfg.N, rng);
        const Eigen::VectorXd s = singular_values(block);
        return std::vector<double>(s.data(), s.data() + s.size());
    });
    std::vector<double> out;
    for (const auto& p : per) out.insert(out.end(), p.begin(), p.end());
    return out;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw PreconditionError("empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, std::abs(static_cast<double>(i + 1) / n - f), std::abs(f - static_cast<double>(i) / n)});
    }
    return d;
}

double arcsine01_cdf(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return 2.0 / std::numbers::pi * std::asin(std::sqrt(t));
}

}  // namespace freespec
