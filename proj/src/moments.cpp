#include "freespec/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "freespec/errors.hpp"
#include "freespec/free_trace.hpp"

namespace freespec {

namespace {

struct MatTraits {
    using Letter = FreeLetter;
    int algebra(const Letter& l) const { return l.copy; }
    Letter mul(const Letter& x, const Letter& y) const { return {x.copy, x.m * y.m}; }
    cplx tau(const Letter& l) const { return mat2::tau(l.m); }
    std::optional<cplx> scalar(const Letter& l) const { return mat2::scalar_value(l.m); }
    Letter centered(const Letter& l) const { return {l.copy, l.m - mat2::tau(l.m) * Mat2::Identity()}; }
    double scale(const Letter& l) const { return l.m.norm(); }
    std::string key(const Letter& l) const {
        std::string k(1 + sizeof(cplx) * 4, '\0');
        k[0] = static_cast<char>(l.copy);
        std::memcpy(k.data() + 1, l.m.data(), sizeof(cplx) * 4);
        return k;
    }
};

using Engine = FreeTraceEngine<MatTraits>;

constexpr int kMaxMomentOrder = 8;

// Sum of traces over all 2^n words picking one summand per factor.
cplx expand_trace(Engine& eng, const std::vector<std::pair<FreeLetter, FreeLetter>>& factors) {
    const std::size_t n = factors.size();
    cplx acc{};
    FreeWord w(n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) w[i] = (mask >> i) & 1U ? factors[i].second : factors[i].first;
        acc += eng.trace(w);
    }
    return acc;
}

bool near_zero(cplx x, double scale) { return std::abs(x) <= 1e-12 * std::max(1.0, scale); }

double norm_scale(const Mat2& a, const Mat2& b) { return std::max(mat2::op_norm(a), mat2::op_norm(b)); }

}  // namespace

cplx trace_word(const FreeWord& w, std::size_t max_length) {
    for (const auto& l : w)
        if (l.copy != 1 && l.copy != 2) throw PreconditionError("letters must come from copy 1 or copy 2");
    Engine eng(max_length);
    return eng.trace(w);
}

std::string to_string(Kind k) { return k == Kind::product ? "product" : "sum"; }

std::vector<cplx> moment_sequence(Kind kind, const Mat2& a, const Mat2& b, int n) {
    if (n < 0) throw PreconditionError("moment order must be nonnegative");
    if (n > kMaxMomentOrder) throw ResourceError("moment order above 8");
    Engine eng(kMaxWordLength);
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        if (kind == Kind::product) {
            FreeWord w;
            for (int i = 0; i < k; ++i) {
                w.push_back({1, a});
                w.push_back({2, b});
            }
            out.push_back(eng.trace(w));
        } else {
            std::vector<std::pair<FreeLetter, FreeLetter>> f(static_cast<std::size_t>(k), {{1, a}, {2, b}});
            out.push_back(expand_trace(eng, f));
        }
    }
    return out;
}

cplx star_moment(Kind kind, const Mat2& a, const Mat2& b, const std::vector<bool>& adjoint) {
    if (adjoint.size() > kMaxMomentOrder) throw ResourceError("star moment order above 8");
    Engine eng(kMaxWordLength);
    const Mat2 as = a.adjoint(), bs = b.adjoint();
    if (kind == Kind::product) {
        FreeWord w;
        for (bool star : adjoint) {
            if (star) {
                w.push_back({2, bs});
                w.push_back({1, as});
            } else {
                w.push_back({1, a});
                w.push_back({2, b});
            }
        }
        return eng.trace(w);
    }
    std::vector<std::pair<FreeLetter, FreeLetter>> f;
    for (bool star : adjoint) f.push_back(star ? std::pair{FreeLetter{1, as}, FreeLetter{2, bs}}
                                               : std::pair{FreeLetter{1, a}, FreeLetter{2, b}});
    return expand_trace(eng, f);
}

bool is_r_diagonal_product(const Mat2& a, const Mat2& b) {
    if (mat2::op_norm(a) == 0.0 || mat2::op_norm(b) == 0.0) return true;
    return near_zero(mat2::tau(a), mat2::op_norm(a)) && near_zero(mat2::tau(b), mat2::op_norm(b));
}

bool is_r_diagonal_sum(const Mat2& a, const Mat2& b) {
    const auto sa = mat2::scalar_value(a), sb = mat2::scalar_value(b);
    return sa && sb && near_zero(*sa + *sb, norm_scale(a, b));
}

std::string to_string(SupportClass c) {
    switch (c) {
        case SupportClass::scalar: return "scalar";
        case SupportClass::matrix_case: return "matrix-case";
        case SupportClass::multi_point_support: return "multi-point-support";
    }
    return "unknown";
}

namespace {

Classification classify_product(const Mat2& a, const Mat2& b) {
    Classification c;
    const auto sa = mat2::scalar_value(a), sb = mat2::scalar_value(b);
    const bool a_zero = sa && std::abs(*sa) == 0.0, b_zero = sb && std::abs(*sb) == 0.0;
    if ((sa && sb) || a_zero || b_zero) {
        c.support = SupportClass::scalar;
        c.reason = a_zero || b_zero ? "a factor is zero, X = 0" : "both factors are scalar, X is scalar";
        c.certificates.push_back({"X", (sa ? *sa : cplx{}) * (sb ? *sb : cplx{})});
        return c;
    }
    if (sa || sb) {
        c.support = SupportClass::matrix_case;
        c.reason = "one factor is scalar: X is a multiple of a non-scalar 2x2 matrix, eigenvalue kernels split it";
        return c;
    }
    c.support = SupportClass::multi_point_support;
    const cplx ta = mat2::tau(a), tb = mat2::tau(b);
    const bool za = near_zero(ta, mat2::op_norm(a)), zb = near_zero(tb, mat2::op_norm(b));
    c.certificates.push_back({"tau(A)", ta});
    c.certificates.push_back({"tau(B)", tb});
    Engine eng(kMaxWordLength);
    if (za && zb) {
        c.reason = "both factors traceless and nonzero: AB is R-diagonal, its Brown measure is rotation invariant and not a point mass";
        return c;
    }
    if (za || zb) {
        const Mat2& centered = za ? a : b;
        const cplx sq = mat2::tau(centered * centered);
        c.certificates.push_back({za ? "tau(A^2)" : "tau(B^2)", sq});
        const cplx m2 = eng.trace({{1, a}, {2, b}, {1, a}, {2, b}});
        c.certificates.push_back({"tau(ABAB)", m2});
        if (!near_zero(sq, std::norm(mat2::op_norm(centered)))) {
            c.reason = "one factor traceless with nonzero square trace: tau(AB) = 0 but tau(ABAB) != 0";
        } else {
            c.reason = "one factor traceless and square-zero: X has the Brown measure of an R-diagonal element alpha E12 (B - tau(B))";
        }
        return c;
    }
    const Mat2 an = a / ta, bn = b / tb;
    const Mat2 a1 = an - Mat2::Identity(), b1 = bn - Mat2::Identity();
    const cplx qa = mat2::tau(a1 * a1), qb = mat2::tau(b1 * b1);
    c.certificates.push_back({"tau(A1^2)", qa});
    c.certificates.push_back({"tau(B1^2)", qb});
    const double sc = norm_scale(an, bn);
    if (near_zero(qa, sc * sc) && near_zero(qb, sc * sc)) {
        c.reason = "normalized factors are unipotent, (1 + alpha E12)(1 + beta F12): support is the region |z-1|^2 <= |alpha beta| |z| / 2";
        return c;
    }
    const cplx m2 = eng.trace({{1, an}, {2, bn}, {1, an}, {2, bn}});
    c.certificates.push_back({"tau((AB)^2) normalized", m2});
    if (!near_zero(m2 - 1.0, std::pow(sc, 4))) {
        c.reason = "normalized tau(AB) = 1 but tau((AB)^2) != 1, so X is not a scalar";
        return c;
    }
    const cplx m3 = eng.trace({{1, an}, {2, bn}, {1, an}, {2, bn}, {1, an}, {2, bn}});
    c.certificates.push_back({"tau((AB)^3) normalized", m3});
    c.reason = "normalized tau(AB) = tau((AB)^2) = 1 but tau((AB)^3) != 1, so X is not a scalar";
    return c;
}

Classification classify_sum(const Mat2& a, const Mat2& b) {
    Classification c;
    const auto sa = mat2::scalar_value(a), sb = mat2::scalar_value(b);
    if (sa && sb) {
        c.support = SupportClass::scalar;
        c.reason = "both summands are scalar, X is scalar";
        c.certificates.push_back({"X", *sa + *sb});
        return c;
    }
    if (sa || sb) {
        c.support = SupportClass::matrix_case;
        c.reason = "one summand is scalar: X is a shifted non-scalar 2x2 matrix, eigenvalue kernels split it";
        return c;
    }
    c.support = SupportClass::multi_point_support;
    const Mat2 a0 = a - mat2::tau(a) * Mat2::Identity(), b0 = b - mat2::tau(b) * Mat2::Identity();
    const cplx qa = mat2::tau(a0 * a0), qb = mat2::tau(b0 * b0);
    c.certificates.push_back({"tau(A0^2)", qa});
    c.certificates.push_back({"tau(B0^2)", qb});
    const double sc = norm_scale(a0, b0);
    if (near_zero(qa, sc * sc) && near_zero(qb, sc * sc)) {
        c.reason = "centered summands are square-zero, alpha E12 + beta F12: Brown measure is a disc";
        return c;
    }
    const auto m = moment_sequence(Kind::sum, a0, b0, 4);
    c.certificates.push_back({"tau(X0^2)", m[1]});
    if (!near_zero(m[1], sc * sc)) {
        c.reason = "centered tau(X0) = 0 but tau(X0^2) != 0, so X is not a scalar";
        return c;
    }
    c.certificates.push_back({"tau(X0^4)", m[3]});
    c.reason = "centered tau(X0) = tau(X0^2) = 0 but tau(X0^4) = 2 tau(A0^2) tau(B0^2) != 0";
    return c;
}

}  // namespace

Classification classify_support(Kind kind, const Mat2& a, const Mat2& b) {
    return kind == Kind::product ? classify_product(a, b) : classify_sum(a, b);
}

}  // namespace freespec
