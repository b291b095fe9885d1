#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace freespec {

using cplx = std::complex<double>;

/// 2x2 complex matrix. Which free copy a matrix belongs to is decided by the
/// caller (first argument = copy 1, second = copy 2), never by the value.
using Mat2 = Eigen::Matrix2cd;

namespace mat2 {

inline Mat2 make(cplx a, cplx b, cplx c, cplx d) {
    Mat2 m;
    m << a, b, c, d;
    return m;
}

/// Matrix unit E_ij (1-based indices).
inline Mat2 unit(int i, int j) {
    Mat2 m = Mat2::Zero();
    m(i - 1, j - 1) = 1.0;
    return m;
}

inline Mat2 identity() { return Mat2::Identity(); }

/// The four symmetries/rotations used as generators of each copy:
/// 0 = identity, 1 = diag(1,-1), 2 = [[0,-1],[1,0]], 3 = [[0,1],[1,0]].
Mat2 generator(int k);

inline cplx trace(const Mat2& a) { return a(0, 0) + a(1, 1); }
/// Normalized trace 1/2 Tr.
inline cplx tau(const Mat2& a) { return 0.5 * trace(a); }
inline cplx det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

struct SingularValues {
    double max = 0.0;
    double min = 0.0;
};

/// Closed form from Tr(A*A) and |det A|.
SingularValues singular_values(const Mat2& a);

/// Largest singular value.
double op_norm(const Mat2& a);
/// sqrt(tau(A*A)).
double l2_norm(const Mat2& a);
/// ||A^{-1}||, +inf when A is singular.
double inv_op_norm(const Mat2& a);
/// ||A^{-1}||_2, +inf when A is singular.
double inv_l2_norm(const Mat2& a);

/// Reciprocal with the convention 1/inf = 0.
inline double recip(double x) { return std::isinf(x) ? 0.0 : 1.0 / x; }

bool is_normal(const Mat2& a, double tol = 1e-12);
bool is_singular(const Mat2& a, double tol = 1e-14);
/// If A = c 1 returns c.
std::optional<cplx> scalar_value(const Mat2& a, double tol = 1e-14);
inline bool is_scalar(const Mat2& a, double tol = 1e-14) { return scalar_value(a, tol).has_value(); }

}  // namespace mat2
}  // namespace freespec
