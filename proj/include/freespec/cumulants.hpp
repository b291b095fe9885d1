#pragma once

#include <functional>
#include <vector>

#include "freespec/mat2.hpp"
#include "freespec/moments.hpp"

namespace freespec {

/// A set partition of {0, ..., n-1} as a block label per element.
using SetPartition = std::vector<int>;

/// All non-crossing partitions of an n-element set (Catalan(n) of them).
std::vector<SetPartition> noncrossing_partitions(int n);

/// Mixed free cumulant kappa_n(X^{e_1}, ..., X^{e_n}) from *-moments by
/// Moebius inversion over NC(n). `moment` receives an adjoint pattern.
cplx free_cumulant(const std::vector<bool>& pattern,
                   const std::function<cplx(const std::vector<bool>&)>& moment);

/// R-diagonality of X = AB or A + B decided from cumulants: every
/// non-alternating *-cumulant of order <= max_order must vanish within tol.
bool r_diagonal_by_cumulants(Kind kind, const Mat2& a, const Mat2& b, int max_order = 6,
                             double tol = 1e-10);

}  // namespace freespec
