#include "freespec/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "freespec/errors.hpp"

namespace freespec {

namespace {

constexpr double kMassTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGLx = {-0.9602898564975363, -0.7966664774136267,
                                        -0.5255324099163290, -0.1834346424956498,
                                        0.1834346424956498,  0.5255324099163290,
                                        0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGLw = {0.1012285362903763, 0.2223810344533745,
                                        0.3137066458778873, 0.3626837833783620,
                                        0.3626837833783620, 0.3137066458778873,
                                        0.2223810344533745, 0.1012285362903763};

void validate_continuous(const ContinuousPart& c) {
    if (c.nodes.size() != c.weights.size())
        throw InvalidMeasure("quadrature nodes and weights differ in length");
    if (c.grid.size() != c.density.size())
        throw InvalidMeasure("density grid and values differ in length");
    if (!(c.support.lo <= c.support.hi)) throw InvalidMeasure("empty support interval");
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        if (!std::isfinite(c.nodes[i]) || !std::isfinite(c.weights[i]) || c.weights[i] < 0.0)
            throw InvalidMeasure("bad quadrature node or weight");
    }
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        if (i > 0 && !(c.grid[i] > c.grid[i - 1]))
            throw InvalidMeasure("density grid is not strictly increasing");
        if (std::isnan(c.density[i]) || c.density[i] < 0.0)
            throw InvalidMeasure("negative density value");
    }
}

// Density on a grid whose endpoint values may be +inf; an infinite endpoint
// is modelled as c / sqrt(|x - edge|).
double grid_density(const std::vector<double>& grid, const std::vector<double>& dens, double x) {
    if (grid.empty() || x < grid.front() || x > grid.back()) return 0.0;
    auto it = std::lower_bound(grid.begin(), grid.end(), x);
    std::size_t j = static_cast<std::size_t>(it - grid.begin());
    if (j < grid.size() && grid[j] == x) return dens[j];
    const std::size_t lo = j - 1, hi = j;
    const double flo = dens[lo], fhi = dens[hi];
    if (std::isinf(flo) && std::isinf(fhi)) return kInf;
    if (std::isinf(flo)) return fhi * std::sqrt((grid[hi] - grid[lo]) / (x - grid[lo]));
    if (std::isinf(fhi)) return flo * std::sqrt((grid[hi] - grid[lo]) / (grid[hi] - x));
    const double u = (x - grid[lo]) / (grid[hi] - grid[lo]);
    return (1.0 - u) * flo + u * fhi;
}

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = x[k + 1] - x[k];
        delta[k] = (y[k + 1] - y[k]) / h[k];
    }
    if (n == 2) {
        d[0] = d[1] = delta[0];
        return d;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (delta[k - 1] * delta[k] <= 0.0) {
            d[k] = 0.0;
        } else {
            const double w1 = 2.0 * h[k] + h[k - 1];
            const double w2 = h[k] + 2.0 * h[k - 1];
            d[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
        }
    }
    auto edge = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) return 0.0;
        if (d0 * d1 <= 0.0 && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
        return s;
    };
    d[0] = edge(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = edge(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// MeasureR

MeasureR::MeasureR(std::vector<Atom> atoms, std::optional<ContinuousPart> continuous, Family family)
    : atoms_(std::move(atoms)), continuous_(std::move(continuous)), family_(family) {
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const auto& a = atoms_[i];
        if (!std::isfinite(a.location)) throw InvalidMeasure("atom location is not finite");
        if (!(a.mass > 0.0 && a.mass <= 1.0 + kMassTol))
            throw InvalidMeasure("atom mass outside (0,1]");
        if (i > 0 && atoms_[i - 1].location == a.location)
            throw InvalidMeasure("duplicate atom location");
    }
    if (continuous_) validate_continuous(*continuous_);
    const double m = total_mass();
    if (std::abs(m - 1.0) > kMassTol)
        throw InvalidMeasure("total mass " + std::to_string(m) + " differs from 1");
}

MeasureR MeasureR::from_atoms(std::vector<Atom> atoms) { return MeasureR(std::move(atoms), std::nullopt); }

MeasureR MeasureR::from_density(std::vector<double> grid, std::vector<double> density,
                                std::vector<Atom> atoms, bool renormalize) {
    if (grid.size() != density.size() || grid.size() < 2)
        throw InvalidMeasure("density needs at least two grid points");
    const std::size_t n = grid.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!std::isfinite(density[i]))
            throw InvalidMeasure("interior density value is not finite");
    }
    ContinuousPart c;
    c.support = {grid.front(), grid.back()};
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double h = grid[j + 1] - grid[j];
        if (!(h > 0.0)) throw InvalidMeasure("density grid is not strictly increasing");
        if (std::isinf(density[j])) {
            // integral of f1 sqrt(h/(x-edge)) over the interval, lumped on x1
            w[j + 1] += 2.0 * h * density[j + 1];
        } else if (std::isinf(density[j + 1])) {
            w[j] += 2.0 * h * density[j];
        } else {
            w[j] += 0.5 * h * density[j];
            w[j + 1] += 0.5 * h * density[j + 1];
        }
    }
    if (renormalize) {
        double target = 1.0, mass = 0.0;
        for (const auto& a : atoms) target -= a.mass;
        for (double x : w) mass += x;
        if (mass > 0.0 && target > 0.0 && std::abs(mass / target - 1.0) < 1e-2) {
            for (double& x : w) x *= target / mass;
            for (double& f : density) f *= target / mass;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (w[j] > 0.0) {
            c.nodes.push_back(grid[j]);
            c.weights.push_back(w[j]);
        }
    }
    c.density_at_zero = c.support.contains(0.0) ? grid_density(grid, density, 0.0) : 0.0;
    c.grid = std::move(grid);
    c.density = std::move(density);
    return MeasureR(std::move(atoms), std::move(c));
}

Interval MeasureR::support() const {
    double lo = kInf, hi = -kInf;
    for (const auto& a : atoms_) {
        lo = std::min(lo, a.location);
        hi = std::max(hi, a.location);
    }
    if (continuous_) {
        lo = std::min(lo, continuous_->support.lo);
        hi = std::max(hi, continuous_->support.hi);
    }
    return {lo, hi};
}

double MeasureR::total_mass() const {
    double m = 0.0;
    for (const auto& a : atoms_) m += a.mass;
    if (continuous_)
        for (double w : continuous_->weights) m += w;
    return m;
}

double MeasureR::atom_mass(double x, double tol) const {
    for (const auto& a : atoms_)
        if (std::abs(a.location - x) <= tol) return a.mass;
    return 0.0;
}

std::optional<double> MeasureR::dirac_location() const {
    if (atoms_.size() == 1 && (!continuous_ || continuous_->weights.empty())) return atoms_[0].location;
    return std::nullopt;
}

bool MeasureR::inverse_moment_diverges() const {
    if (atom_mass(0.0) > 0.0) return true;
    if (continuous_ && continuous_->support.contains(0.0) && continuous_->density_at_zero > 0.0)
        return true;
    return false;
}

double MeasureR::density_at(double x) const {
    if (!continuous_) return 0.0;
    return grid_density(continuous_->grid, continuous_->density, x);
}

MeasureR dirac(double location) { return MeasureR::from_atoms({{location, 1.0}}); }

MeasureR arcsine01(std::size_t grid_points) {
    const std::size_t n = std::max<std::size_t>(grid_points, 8);
    const double half_pi = 0.5 * std::numbers::pi;
    ContinuousPart c;
    c.support = {0.0, 1.0};
    c.nodes.resize(n);
    c.weights.assign(n, 1.0 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const double s = std::sin((static_cast<double>(i) + 0.5) * half_pi / static_cast<double>(n));
        c.nodes[i] = s * s;
    }
    c.grid.resize(n);
    c.density.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double t;
        if (j == 0) {
            t = 0.0;
        } else if (j + 1 == n) {
            t = 1.0;
        } else {
            const double s = std::sin(static_cast<double>(j) * half_pi / static_cast<double>(n - 1));
            t = s * s;
        }
        c.grid[j] = t;
        c.density[j] = (t <= 0.0 || t >= 1.0) ? kInf : 1.0 / (std::numbers::pi * std::sqrt(t * (1.0 - t)));
    }
    c.density_at_zero = kInf;
    return MeasureR({}, std::move(c), MeasureR::Family::arcsine01);
}

MeasureR arcsine_sym(std::size_t grid_points) {
    const std::size_t n = std::max<std::size_t>(grid_points, 8);
    ContinuousPart c;
    c.support = {-1.0, 1.0};
    c.nodes.resize(n);
    c.weights.assign(n, 1.0 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        c.nodes[i] = -std::cos((static_cast<double>(i) + 0.5) * std::numbers::pi / static_cast<double>(n));
    c.grid.resize(n);
    c.density.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double t;
        if (j == 0) {
            t = -1.0;
        } else if (j + 1 == n) {
            t = 1.0;
        } else {
            t = -std::cos(static_cast<double>(j) * std::numbers::pi / static_cast<double>(n - 1));
        }
        c.grid[j] = t;
        c.density[j] = std::abs(t) >= 1.0 ? kInf : 1.0 / (std::numbers::pi * std::sqrt(1.0 - t * t));
    }
    c.density_at_zero = 1.0 / std::numbers::pi;
    return MeasureR({}, std::move(c), MeasureR::Family::arcsine_sym);
}

double integrate_moment(const MeasureR& mu, int k) {
    if (k < -1) throw DomainError("moment order must be >= -1");
    if (k == -1) {
        if (mu.inverse_moment_diverges()) return kInf;
        return mu.integrate([](double t) { return 1.0 / t; });
    }
    return mu.integrate([k](double t) { return std::pow(t, k); });
}

MeasureR pushforward_square(const MeasureR& mu) {
    std::vector<Atom> atoms;
    for (const auto& a : mu.atoms()) {
        const double y = a.location * a.location;
        auto it = std::find_if(atoms.begin(), atoms.end(), [y](const Atom& b) {
            return std::abs(b.location - y) <= 1e-12 * std::max(1.0, y);
        });
        if (it != atoms.end()) {
            it->mass += a.mass;
        } else {
            atoms.push_back({y, a.mass});
        }
    }
    std::optional<ContinuousPart> cont;
    if (mu.continuous()) {
        const auto& src = *mu.continuous();
        ContinuousPart c;
        c.nodes.reserve(src.nodes.size());
        for (double x : src.nodes) c.nodes.push_back(x * x);
        c.weights = src.weights;
        const double a = src.support.lo, b = src.support.hi;
        const bool straddles = a <= 0.0 && b >= 0.0;
        const double ylo = straddles ? 0.0 : std::min(a * a, b * b);
        const double yhi = std::max(a * a, b * b);
        c.support = {ylo, yhi};
        const std::size_t n = std::max<std::size_t>(src.grid.size(), 8);
        c.grid.resize(n);
        c.density.resize(n);
        const double half_pi = 0.5 * std::numbers::pi;
        for (std::size_t j = 0; j < n; ++j) {
            double y;
            if (j == 0) {
                y = ylo;
            } else if (j + 1 == n) {
                y = yhi;
            } else {
                const double s = std::sin(static_cast<double>(j) * half_pi / static_cast<double>(n - 1));
                y = ylo + (yhi - ylo) * s * s;
            }
            c.grid[j] = y;
            if (y <= 0.0) {
                c.density[j] = src.density_at_zero > 0.0 ? kInf : 0.0;
                continue;
            }
            const double r = std::sqrt(y);
            double g = 0.0;
            if (src.support.contains(r)) g += grid_density(src.grid, src.density, r);
            if (src.support.contains(-r)) g += grid_density(src.grid, src.density, -r);
            c.density[j] = g / (2.0 * r);
        }
        c.density_at_zero = (straddles && src.density_at_zero > 0.0) ? kInf : 0.0;
        // The image keeps the quadrature of the source, so its family is the
        // image law's family when that is known in closed form.
        cont = std::move(c);
    }
    const auto fam = mu.family() == MeasureR::Family::arcsine_sym ? MeasureR::Family::arcsine01
                                                                   : MeasureR::Family::generic;
    return MeasureR(std::move(atoms), std::move(cont), fam);
}

// ---------------------------------------------------------------------------
// RadialMeasure

RadialMeasure::RadialMeasure(double atom_at_zero, double r_inner, double r_outer,
                             std::vector<double> s, std::vector<double> F, Interp interp)
    : atom_(atom_at_zero), r_inner_(r_inner), r_outer_(r_outer), s_(std::move(s)), F_(std::move(F)),
      interp_(interp) {
    if (!(atom_ >= 0.0 && atom_ <= 1.0 + kMassTol)) throw InvalidMeasure("atom at zero outside [0,1]");
    atom_ = std::min(atom_, 1.0);
    if (!(r_inner_ >= 0.0 && r_outer_ >= r_inner_)) throw InvalidMeasure("radii must satisfy 0 <= r_in <= r_out");
    if (s_.empty() || s_.size() != F_.size()) throw InvalidMeasure("radial table is empty or ragged");
    const double rtol = 1e-12 * std::max(1.0, r_outer_);
    if (std::abs(s_.back() - r_outer_) > rtol) throw InvalidMeasure("radial table must end at r_outer");
    s_.back() = r_outer_;
    if (s_.front() < r_inner_ - rtol) throw InvalidMeasure("radial table starts inside r_inner");
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (!std::isfinite(s_[i]) || !std::isfinite(F_[i])) throw InvalidMeasure("non-finite radial table entry");
        if (i > 0 && !(s_[i] > s_[i - 1])) throw InvalidMeasure("radial table is not strictly increasing");
        if (i > 0 && F_[i] < F_[i - 1] - 1e-12) throw InvalidMeasure("radial CDF decreases");
        if (F_[i] < atom_ - 1e-12) throw InvalidMeasure("radial CDF below the atom at zero");
    }
    if (std::abs(F_.back() - 1.0) > kMassTol) throw InvalidMeasure("radial CDF does not reach 1");
    F_.back() = 1.0;
    for (std::size_t i = 1; i < F_.size(); ++i) F_[i] = std::max(F_[i], F_[i - 1]);
    if (interp_ == Interp::pchip) slopes_ = pchip_slopes(s_, F_);
}

RadialMeasure RadialMeasure::point_mass_at_zero() { return RadialMeasure(1.0, 0.0, 0.0, {0.0}, {1.0}); }

RadialMeasure RadialMeasure::uniform_circle(double radius) {
    return RadialMeasure(0.0, radius, radius, {radius}, {1.0});
}

RadialMeasure RadialMeasure::from_cdf(double atom_at_zero, double r_inner, double r_outer,
                                      const std::function<double(double)>& cdf, std::size_t points) {
    if (r_outer <= r_inner) return RadialMeasure(atom_at_zero, r_inner, r_outer, {r_outer}, {1.0});
    const std::size_t n = std::max<std::size_t>(points, 3);
    std::vector<double> s(n), F(n);
    double running = atom_at_zero;
    for (std::size_t j = 0; j < n; ++j) {
        const double u = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(n - 1)));
        s[j] = (j + 1 == n) ? r_outer : r_inner + (r_outer - r_inner) * u;
        running = std::max(running, std::clamp(cdf(s[j]), 0.0, 1.0));
        F[j] = running;
    }
    F.back() = 1.0;
    return RadialMeasure(atom_at_zero, r_inner, r_outer, std::move(s), std::move(F));
}

double RadialMeasure::cdf(double s) const {
    if (s < 0.0) return 0.0;
    if (s >= s_.back()) return 1.0;
    if (s < s_.front()) return atom_;
    const auto it = std::upper_bound(s_.begin(), s_.end(), s);
    const std::size_t k = static_cast<std::size_t>(it - s_.begin()) - 1;
    if (interp_ == Interp::step) return F_[k];
    const double h = s_[k + 1] - s_[k];
    const double t = (s - s_[k]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double v = (2 * t3 - 3 * t2 + 1) * F_[k] + (t3 - 2 * t2 + t) * h * slopes_[k] +
                     (-2 * t3 + 3 * t2) * F_[k + 1] + (t3 - t2) * h * slopes_[k + 1];
    return std::clamp(v, F_[k], F_[k + 1]);
}

RadialMeasure RadialMeasure::dilate(double c) const {
    if (!(c > 0.0)) throw PreconditionError("dilation factor must be positive");
    std::vector<double> s = s_;
    for (double& x : s) x *= c;
    return RadialMeasure(atom_, r_inner_ * c, r_outer_ * c, std::move(s), F_, interp_);
}

double RadialMeasure::integral_F_over_r(double a, double b) const {
    if (b <= a) return 0.0;
    double acc = 0.0;
    // Constant atom_ below the first table point.
    const double s0 = s_.front();
    if (a < s0) {
        const double top = std::min(b, s0);
        if (atom_ > 0.0) {
            if (a <= 0.0) return kInf;
            acc += atom_ * std::log(top / a);
        }
        a = top;
        if (b <= a) return acc;
    }
    // F = 1 above r_outer.
    if (b > s_.back()) {
        const double lo = std::max(a, s_.back());
        acc += std::log(b / lo);
        b = lo;
        if (b <= a) return acc;
    }
    auto k0 = static_cast<std::size_t>(std::upper_bound(s_.begin(), s_.end(), a) - s_.begin());
    k0 = k0 == 0 ? 0 : k0 - 1;
    for (std::size_t k = k0; k + 1 < s_.size() && s_[k] < b; ++k) {
        const double lo = std::max(a, s_[k]);
        const double hi = std::min(b, s_[k + 1]);
        if (hi <= lo) continue;
        if (interp_ == Interp::step) {
            if (F_[k] > 0.0) {
                if (lo <= 0.0) return kInf;
                acc += F_[k] * std::log(hi / lo);
            }
            continue;
        }
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double part = 0.0;
        for (std::size_t q = 0; q < kGLx.size(); ++q) {
            const double r = mid + half * kGLx[q];
            part += kGLw[q] * cdf(r) / r;
        }
        acc += half * part;
    }
    return acc;
}

double log_potential(const RadialMeasure& nu, std::complex<double> lambda) {
    const double rho = std::abs(lambda);
    if (rho >= nu.r_outer()) {
        if (rho == 0.0) return -kInf;
        return std::log(rho);
    }
    if (rho == 0.0 && nu.atom_at_zero() > 0.0) return -kInf;
    // integral of log max(r, rho) dF(r) = log R - integral_rho^R F(r)/r dr
    return std::log(nu.r_outer()) - nu.integral_F_over_r(rho, nu.r_outer());
}

}  // namespace freespec
