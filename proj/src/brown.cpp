#include "freespec/brown.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "freespec/errors.hpp"

namespace freespec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Offsets x in (0, 1]; t = atom + (1 - atom) x. Dense geometrically at both
// ends.
std::vector<double> offset_grid(std::size_t n) {
    n = std::max<std::size_t>(n, 16);
    const std::size_t edge = n / 4;
    const std::size_t mid = n - 2 * edge;
    std::vector<double> x;
    x.reserve(n + 1);
    for (std::size_t j = 0; j < edge; ++j)
        x.push_back(std::pow(10.0, -12.0 + 10.0 * static_cast<double>(j) / static_cast<double>(edge)));
    // quadratic in the middle: s ~ sqrt(t) for small t
    const double a = 0.1, b = std::sqrt(0.99);
    for (std::size_t j = 0; j < mid; ++j) {
        const double u = a + (b - a) * static_cast<double>(j) / static_cast<double>(mid - 1);
        x.push_back(u * u);
    }
    for (std::size_t j = edge; j-- > 0;)
        x.push_back(1.0 - std::pow(10.0, -12.0 + 10.0 * static_cast<double>(j) / static_cast<double>(edge)));
    x.push_back(1.0);
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    return x;
}

bool traceless(const Mat2& a) { return std::abs(mat2::tau(a)) <= 1e-12 * std::max(1.0, mat2::op_norm(a)); }

}  // namespace

RadialMeasure radial_from_s_transform(const STransform& s, double atom_at_zero, double r_inner,
                                      double r_outer, std::size_t grid) {
    if (atom_at_zero >= 1.0) return RadialMeasure::point_mass_at_zero();
    std::vector<double> rs, F;
    rs.reserve(grid + 2);
    F.reserve(grid + 2);
    if (r_inner < r_outer) {
        rs.push_back(r_inner);
        F.push_back(atom_at_zero);
    }
    for (double x : offset_grid(grid)) {
        const double t = atom_at_zero + (1.0 - atom_at_zero) * x;
        double r;
        if (x >= 1.0) {
            r = r_outer;
        } else {
            const double w = t - 1.0;
            if (!s.in_domain(w)) continue;
            const double sv = s(w);
            if (!(sv > 0.0) || !std::isfinite(sv)) continue;
            r = std::clamp(1.0 / std::sqrt(sv), r_inner, r_outer);
        }
        if (!rs.empty() && !(r > rs.back())) {
            if (x >= 1.0) {
                F.back() = 1.0;
                rs.back() = r_outer;
            }
            continue;
        }
        rs.push_back(r);
        F.push_back(x >= 1.0 ? 1.0 : t);
    }
    if (rs.empty() || rs.back() != r_outer) {
        rs.push_back(r_outer);
        F.push_back(1.0);
    }
    return RadialMeasure(atom_at_zero, r_inner, r_outer, std::move(rs), std::move(F));
}

RadialMeasure haagerup_larsen(const MeasureR& mu_H2, std::size_t grid) {
    if (mu_H2.support().lo < 0.0) throw PreconditionError("law of H^2 must live on [0, inf)");
    if (mu_H2.dirac_location()) throw DiracInputError("radial inversion is undefined for a point mass");
    const double atom = mu_H2.atom_mass(0.0);
    const double r_outer = std::sqrt(integrate_moment(mu_H2, 1));
    const double inv = integrate_moment(mu_H2, -1);
    const double r_inner = std::isinf(inv) ? 0.0 : 1.0 / std::sqrt(inv);
    return radial_from_s_transform(make_s_transform(mu_H2), atom, r_inner, r_outer, grid);
}

MeasureR modulus_law(const Mat2& a) {
    const auto sv = mat2::singular_values(a);
    const double x = sv.max * sv.max, y = sv.min * sv.min;
    if (std::abs(x - y) <= 1e-14 * std::max(1.0, x)) return dirac(x);
    return MeasureR::from_atoms({{y, 0.5}, {x, 0.5}});
}

RadialMeasure brown_product(const Mat2& a, const Mat2& b, std::size_t grid) {
    if (!traceless(a) || !traceless(b))
        throw PreconditionError("AB is R-diagonal only when tau(A) = tau(B) = 0");
    if (mat2::op_norm(a) == 0.0 || mat2::op_norm(b) == 0.0)
        throw PreconditionError("factors must be nonzero");
    const MeasureR la = modulus_law(a), lb = modulus_law(b);
    const double r_outer = mat2::l2_norm(a) * mat2::l2_norm(b);
    if (la.dirac_location() && lb.dirac_location()) return RadialMeasure::uniform_circle(r_outer);
    const double r_inner = mat2::recip(mat2::inv_l2_norm(a)) * mat2::recip(mat2::inv_l2_norm(b));
    const double atom = std::max(la.atom_mass(0.0), lb.atom_mass(0.0));
    const STransform s = s_product(make_s_transform(la), make_s_transform(lb));
    return radial_from_s_transform(s, atom, r_inner, r_outer, grid);
}

RadialMeasure brown_sum_nilpotents(std::complex<double> alpha, std::complex<double> beta) {
    const double c = std::abs(alpha) * std::abs(beta);
    if (c == 0.0) return RadialMeasure::point_mass_at_zero();
    return RadialMeasure::from_cdf(0.0, 0.0, std::sqrt(0.5 * c), [c](double s) {
        const double u = s * s / c;
        return u / (1.0 - u);
    });
}

MeasureR arcsine_product_law(double c, std::size_t grid_points) {
    if (!(c > 0.0)) throw PreconditionError("scale must be positive");
    const MeasureR base = arcsine01(grid_points);
    const auto& src = *base.continuous();
    ContinuousPart p;
    p.weights = src.weights;
    p.nodes.reserve(src.nodes.size());
    for (double t : src.nodes) p.nodes.push_back(c * t * (1.0 - t));
    const double top = 0.25 * c;
    p.support = {0.0, top};
    const std::size_t n = src.grid.size();
    p.grid.resize(n);
    p.density.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double sn = std::sin(0.5 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n - 1));
        const double y = j == 0 ? 0.0 : (j + 1 == n ? top : top * sn * sn);
        p.grid[j] = y;
        p.density[j] = (y <= 0.0 || y >= top) ? kInf : 2.0 / (std::numbers::pi * std::sqrt(y * (c - 4.0 * y)));
    }
    p.density_at_zero = kInf;
    return MeasureR({}, std::move(p));
}

ShiftedMixture brown_example_64(std::complex<double> alpha, std::complex<double> beta, std::size_t grid) {
    ShiftedMixture m;
    m.center = alpha;
    if (std::abs(beta) == 0.0) {
        if (std::abs(alpha) == 0.0) {
            m.atoms.push_back({0.0, 1.0});
        } else {
            m.atoms.push_back({0.0, 0.5});
            m.atoms.push_back({alpha, 0.5});
        }
        return m;
    }
    m.atoms.push_back({0.0, 0.5});
    m.component_weight = 0.5;
    m.component = haagerup_larsen(arcsine_product_law(std::norm(beta)), grid);
    return m;
}

RadialMeasure brown_example_65(std::complex<double> alpha, std::complex<double> beta, std::size_t grid) {
    const double d = std::abs(alpha - beta);
    if (d == 0.0) return RadialMeasure::point_mass_at_zero();
    return haagerup_larsen(arcsine_product_law(d * d), grid);
}

}  // namespace freespec
