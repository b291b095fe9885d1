#include "freespec/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace freespec::mat2 {

Mat2 generator(int k) {
    switch (k) {
        case 0: return make(1.0, 0.0, 0.0, 1.0);
        case 1: return make(1.0, 0.0, 0.0, -1.0);
        case 2: return make(0.0, -1.0, 1.0, 0.0);
        case 3: return make(0.0, 1.0, 1.0, 0.0);
        default: break;
    }
    return Mat2::Zero();
}

SingularValues singular_values(const Mat2& a) {
    const double frob2 = a.squaredNorm();
    const double d = std::abs(det(a));
    const double disc = std::max(0.0, frob2 * frob2 - 4.0 * d * d);
    const double s1sq = 0.5 * (frob2 + std::sqrt(disc));
    const double s1 = std::sqrt(s1sq);
    const double s2 = s1 > 0.0 ? d / s1 : 0.0;
    return {s1, s2};
}

double op_norm(const Mat2& a) { return singular_values(a).max; }

double l2_norm(const Mat2& a) { return std::sqrt(0.5 * a.squaredNorm()); }

double inv_op_norm(const Mat2& a) {
    const auto sv = singular_values(a);
    if (sv.min <= 0.0 || is_singular(a)) return std::numeric_limits<double>::infinity();
    return 1.0 / sv.min;
}

double inv_l2_norm(const Mat2& a) {
    const auto sv = singular_values(a);
    if (sv.min <= 0.0 || is_singular(a)) return std::numeric_limits<double>::infinity();
    return std::sqrt(0.5 * (1.0 / (sv.max * sv.max) + 1.0 / (sv.min * sv.min)));
}

bool is_normal(const Mat2& a, double tol) {
    const Mat2 c = a.adjoint() * a - a * a.adjoint();
    return c.norm() <= tol * std::max(1.0, a.squaredNorm());
}

bool is_singular(const Mat2& a, double tol) {
    return std::abs(det(a)) <= tol * std::max(1.0, a.squaredNorm());
}

std::optional<cplx> scalar_value(const Mat2& a, double tol) {
    const double scale = std::max(1.0, a.norm());
    if (std::abs(a(0, 1)) > tol * scale || std::abs(a(1, 0)) > tol * scale) return std::nullopt;
    if (std::abs(a(0, 0) - a(1, 1)) > tol * scale) return std::nullopt;
    return 0.5 * (a(0, 0) + a(1, 1));
}

}  // namespace freespec::mat2
