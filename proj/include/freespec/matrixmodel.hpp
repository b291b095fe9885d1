#pragma once

#include <complex>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "freespec/linalg.hpp"
#include "freespec/mat2.hpp"
#include "freespec/measures.hpp"
#include "freespec/moments.hpp"

namespace freespec {

enum class Observable { eigenvalues, singular_values, trace_words, log_potential };

struct ModelConfig {
    Eigen::Index N = 512;
    int trials = 16;
    std::uint64_t seed = 42;
    Observable what = Observable::eigenvalues;
    /// Worker cap; 0 means hardware concurrency, further capped by the
    /// FREESPEC_THREADS environment variable.
    unsigned threads = 0;
};

/// Throws PreconditionError unless N >= 2 and trials >= 1.
void validate(const ModelConfig& cfg);

/// Number of workers used for `trials` independent jobs.
unsigned worker_count(const ModelConfig& cfg);

/// Runs job(trial, rng) for every trial on a worker pool; trial t gets the
/// stream make_rng(seed, t). Results come back in trial order.
template <class T>
std::vector<T> run_trials(const ModelConfig& cfg, const std::function<T(int, Rng&)>& job) {
    validate(cfg);
    std::vector<T> out(static_cast<std::size_t>(cfg.trials));
    const unsigned workers = worker_count(cfg);
    std::mutex mu;
    int next = 0;
    std::exception_ptr err;
    auto work = [&]() {
        for (;;) {
            int t;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= cfg.trials || err) return;
                t = next++;
            }
            try {
                Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(t));
                out[static_cast<std::size_t>(t)] = job(t, rng);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    return out;
}

/// A (x) I_N in block form [[a11 I, a12 I], [a21 I, a22 I]].
Eigen::MatrixXcd kron_identity(const Mat2& a, Eigen::Index n);

struct EmbeddedPair {
    Eigen::MatrixXcd a;
    Eigen::MatrixXcd b;
};

/// A_N = U (A (x) I_N) U*, B_N = V (B (x) I_N) V* with independent Haar U, V.
EmbeddedPair embed_pair(const Mat2& a, const Mat2& b, Eigen::Index n, Rng& rng);

Eigen::MatrixXcd combine(Kind kind, const EmbeddedPair& p);

/// X_N built from a single Haar draw: (A (x) I_N) times or plus V (B (x) I_N) V*.
/// Unitarily similar in law to combine(kind, embed_pair(...)). Used for
/// eigenvalues and determinants.
Eigen::MatrixXcd relative_model(Kind kind, const Mat2& a, const Mat2& b, Eigen::Index n, Rng& rng);

/// Top-left N x N block of V (B (x) I_N) V*, drawing only the N rows of V it needs.
Eigen::MatrixXcd compressed_block(const Mat2& b, Eigen::Index n, Rng& rng);

struct EmpiricalSpectrum {
    std::vector<std::complex<double>> samples;
    /// Trial index of each sample.
    std::vector<int> trial;
    Eigen::Index N = 0;
    int trials = 0;
    bool singular_values = false;
};

/// Pooled eigenvalues (or singular values when cfg.what says so) of
/// A_N B_N or A_N + B_N.
EmpiricalSpectrum empirical_brown(const Mat2& a, const Mat2& b, Kind kind, const ModelConfig& cfg);

/// Step-function radial CDF of the sample moduli; moduli below 1e-8 form
/// the atom at zero.
RadialMeasure empirical_radial_cdf(const EmpiricalSpectrum& spec);

struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::vector<double> per_trial;
};

struct ComplexEstimate {
    std::complex<double> mean{};
    double stderr_ = 0.0;
    std::vector<std::complex<double>> per_trial;
};

/// Matrix-model log Fuglede-Kadison determinant (1/2N) log|det(X_N - lambda)|,
/// averaged over trials, one estimate per lambda (all lambdas share a draw).
std::vector<Estimate> log_determinant_potential(const Mat2& a, const Mat2& b, Kind kind,
                                                const std::vector<std::complex<double>>& lambdas,
                                                const ModelConfig& cfg);

/// Normalized trace (1/2N) Tr of a word in (A_N, B_N).
ComplexEstimate trace_word_estimate(const FreeWord& w, const ModelConfig& cfg);

/// Eigenvalues of the compression P B_N P to the range of P = E11 (x) I_N,
/// with B_N = V (B (x) I_N) V*. For B = diag(1,0) these follow the arcsine law.
std::vector<double> compression_spectrum(const Mat2& b, const ModelConfig& cfg);

/// sup |F_emp - cdf| for a sample against a continuous CDF.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

/// CDF of the arcsine law on [0,1]: (2/pi) arcsin sqrt(t).
double arcsine01_cdf(double t);

}  // namespace freespec
