#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "freespec/mat2.hpp"

namespace freespec {

/// Letter of a word in the free product of two copies of M2: copy is 1 or 2.
struct FreeLetter {
    int copy = 1;
    Mat2 m;
};

using FreeWord = std::vector<FreeLetter>;

inline constexpr std::size_t kMaxWordLength = 24;

/// Exact trace of the word under the free-product trace (tau = 1/2 Tr on
/// each copy). Throws ResourceError when the fused word is longer than
/// max_length.
cplx trace_word(const FreeWord& w, std::size_t max_length = kMaxWordLength);

enum class Kind { product, sum };

std::string to_string(Kind k);

/// [tau(X), ..., tau(X^n)] for X = AB or A + B, n <= 8.
std::vector<cplx> moment_sequence(Kind kind, const Mat2& a, const Mat2& b, int n);

/// tau(X^{e1} X^{e2} ...) where e_i = true means X*.
cplx star_moment(Kind kind, const Mat2& a, const Mat2& b, const std::vector<bool>& adjoint);

/// AB is R-diagonal iff tau(A) = tau(B) = 0. The zero operator counts as
/// R-diagonal, so A = 0 or B = 0 also returns true.
bool is_r_diagonal_product(const Mat2& a, const Mat2& b);

/// A + B is R-diagonal iff A + B = 0, i.e. A = c 1 and B = -c 1.
bool is_r_diagonal_sum(const Mat2& a, const Mat2& b);

enum class SupportClass { scalar, matrix_case, multi_point_support };

std::string to_string(SupportClass c);

struct Classification {
    SupportClass support = SupportClass::scalar;
    std::string reason;
    /// Named trace values that decided the branch.
    std::vector<std::pair<std::string, cplx>> certificates;
};

/// Whether the Brown measure of X = AB or A + B is concentrated at one
/// point (X scalar), reduces to a single matrix (A or B scalar), or is
/// supported on more than two points.
Classification classify_support(Kind kind, const Mat2& a, const Mat2& b);

}  // namespace freespec
