#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace freespec {

struct Atom {
    double location = 0.0;
    double mass = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Absolutely continuous part of a real measure.
///
/// `nodes`/`weights` is the quadrature rule that every integral uses;
/// `grid`/`density` is the tabulated density kept for inspection and CSV
/// output (endpoint values may be +inf for edge singularities).
/// `density_at_zero` records the density at t = 0 when 0 lies in `support`
/// (+inf for an integrable edge singularity); it decides whether the k = -1
/// moment diverges.
struct ContinuousPart {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> grid;
    std::vector<double> density;
    Interval support;
    double density_at_zero = 0.0;
};

/// Probability measure on the real line: finitely many atoms plus an
/// optional absolutely continuous part. Immutable after construction.
class MeasureR {
public:
    enum class Family { generic, arcsine01, arcsine_sym };

    /// Validates: masses in (0,1], distinct atoms, strictly increasing grid,
    /// nonnegative density, total mass 1 within 1e-9. Throws InvalidMeasure.
    MeasureR(std::vector<Atom> atoms, std::optional<ContinuousPart> continuous,
             Family family = Family::generic);

    static MeasureR from_atoms(std::vector<Atom> atoms);

    /// Density sampled on a grid (trapezoid rule). An infinite endpoint value
    /// is treated as an inverse-square-root edge singularity. With
    /// `renormalize`, a quadrature mass within 1% of the expected one is
    /// rescaled to it; otherwise a mismatch is rejected.
    static MeasureR from_density(std::vector<double> grid, std::vector<double> density,
                                 std::vector<Atom> atoms = {}, bool renormalize = false);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::optional<ContinuousPart>& continuous() const { return continuous_; }
    Family family() const { return family_; }

    /// Convex hull of the support (atoms and continuous part).
    Interval support() const;
    double total_mass() const;
    /// Mass of the atom at x (0 if none).
    double atom_mass(double x, double tol = 1e-12) const;
    /// Location if this is a point mass.
    std::optional<double> dirac_location() const;
    bool inverse_moment_diverges() const;

    /// Density at x from the tabulated grid (0 outside the support).
    double density_at(double x) const;

    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (const auto& a : atoms_) acc += a.mass * f(a.location);
        if (continuous_) {
            const auto& c = *continuous_;
            for (std::size_t i = 0; i < c.nodes.size(); ++i) acc += c.weights[i] * f(c.nodes[i]);
        }
        return acc;
    }

private:
    std::vector<Atom> atoms_;
    std::optional<ContinuousPart> continuous_;
    Family family_ = Family::generic;
};

MeasureR dirac(double location);

/// Arcsine law on [0,1], density 1/(pi sqrt(t(1-t))). Nodes come from the
/// substitution t = sin^2(theta).
MeasureR arcsine01(std::size_t grid_points = 4096);

/// Arcsine law on [-1,1], density 1/(pi sqrt(1-t^2)).
MeasureR arcsine_sym(std::size_t grid_points = 4096);

/// Integral of t^k, k >= -1. Returns +inf when the k = -1 integral diverges.
double integrate_moment(const MeasureR& mu, int k);

/// Law of t^2 under mu. Atoms at +-a merge into a^2.
MeasureR pushforward_square(const MeasureR& mu);

/// Rotation-invariant planar probability measure described by the radial
/// CDF F(s) = mu(closed disc of radius s).
///
/// The table (s_j, F_j) is strictly increasing in s and ends at
/// (r_outer, 1). Below the first table point F equals `atom_at_zero`.
class RadialMeasure {
public:
    enum class Interp { pchip, step };

    RadialMeasure(double atom_at_zero, double r_inner, double r_outer, std::vector<double> s,
                  std::vector<double> F, Interp interp = Interp::pchip);

    static RadialMeasure point_mass_at_zero();
    static RadialMeasure uniform_circle(double radius);
    /// Tabulates a closed-form CDF on [r_inner, r_outer] with endpoint clustering.
    static RadialMeasure from_cdf(double atom_at_zero, double r_inner, double r_outer,
                                  const std::function<double(double)>& cdf,
                                  std::size_t points = 2049);

    double atom_at_zero() const { return atom_; }
    double r_inner() const { return r_inner_; }
    double r_outer() const { return r_outer_; }
    const std::vector<double>& s_table() const { return s_; }
    const std::vector<double>& F_table() const { return F_; }
    Interp interpolation() const { return interp_; }

    double cdf(double s) const;
    /// Image under z -> c z, c > 0.
    RadialMeasure dilate(double c) const;

    /// Integral of F(r)/r over [a, b] (0 <= a <= b), exact for the
    /// piecewise interpolant up to Gauss-Legendre error.
    double integral_F_over_r(double a, double b) const;

private:
    double atom_ = 0.0;
    double r_inner_ = 0.0;
    double r_outer_ = 0.0;
    std::vector<double> s_;
    std::vector<double> F_;
    std::vector<double> slopes_;
    Interp interp_ = Interp::pchip;
};

/// Integral of log|z - lambda| against nu; for a rotation-invariant measure
/// this is the integral of log max(r, |lambda|) dF(r). Returns -inf at
/// lambda = 0 when nu has an atom there.
double log_potential(const RadialMeasure& nu, std::complex<double> lambda);

}  // namespace freespec
