#include "freespec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <lapacke.h>

#include "freespec/errors.hpp"

namespace freespec {

namespace {

lapack_complex_double* lp(std::complex<double>* p) { return reinterpret_cast<lapack_complex_double*>(p); }

void check(lapack_int info, const char* what) {
    if (info != 0) throw Error(std::string(what) + " failed with info " + std::to_string(info));
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x9e3779b9U};
    return Rng(seq);
}

Eigen::MatrixXcd ginibre(Eigen::Index n, Rng& rng) { return ginibre(n, n, rng); }

Eigen::MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = g(rng);
            const double im = g(rng);
            m(i, j) = {re, im};
        }
    return m;
}

Eigen::MatrixXcd haar_columns(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    if (rows < 1 || cols < 1 || cols > rows) throw PreconditionError("need 1 <= cols <= rows");
    Eigen::MatrixXcd q = ginibre(rows, cols, rng);
    std::vector<std::complex<double>> tau(static_cast<std::size_t>(cols));
    const auto m = static_cast<lapack_int>(rows), k = static_cast<lapack_int>(cols);
    check(LAPACKE_zgeqrf(LAPACK_COL_MAJOR, m, k, lp(q.data()), m, lp(tau.data())), "zgeqrf");
    Eigen::VectorXcd phase(cols);
    for (Eigen::Index i = 0; i < cols; ++i) {
        const auto r = q(i, i);
        phase(i) = std::abs(r) > 0.0 ? r / std::abs(r) : std::complex<double>(1.0, 0.0);
    }
    check(LAPACKE_zungqr(LAPACK_COL_MAJOR, m, k, k, lp(q.data()), m, lp(tau.data())), "zungqr");
    return q * phase.asDiagonal();
}

Eigen::MatrixXcd haar_unitary(Eigen::Index n, Rng& rng) {
    if (n < 1) throw PreconditionError("unitary size must be positive");
    return haar_columns(n, n, rng);
}

std::vector<std::complex<double>> eigenvalues(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols()) throw PreconditionError("eigenvalues need a square matrix");
    const auto n = static_cast<lapack_int>(m.rows());
    std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
    if (n == 0) return w;
    check(LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, lp(m.data()), n, lp(w.data()), nullptr, 1, nullptr, 1),
          "zgeev");
    return w;
}

Eigen::VectorXd singular_values(Eigen::MatrixXcd m) {
    const auto rows = static_cast<lapack_int>(m.rows()), cols = static_cast<lapack_int>(m.cols());
    Eigen::VectorXd s(std::min(m.rows(), m.cols()));
    if (s.size() == 0) return s;
    check(LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', rows, cols, lp(m.data()), rows, s.data(), nullptr, 1, nullptr, 1),
          "zgesdd");
    return s;
}

double log_abs_det(Eigen::MatrixXcd m, double floor) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant needs a square matrix");
    const auto n = static_cast<lapack_int>(m.rows());
    std::vector<lapack_int> piv(static_cast<std::size_t>(std::max<lapack_int>(n, 1)));
    const lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, lp(m.data()), n, piv.data());
    if (info < 0) check(info, "zgetrf");
    double acc = 0.0;
    for (lapack_int i = 0; i < n; ++i) acc += std::log(std::max(std::abs(m(i, i)), floor));
    return acc;
}

}  // namespace freespec
