#include "freespec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "freespec/errors.hpp"

namespace freespec {

namespace {

using cd = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool traceless(const Mat2& a) { return std::abs(mat2::tau(a)) <= 1e-12 * std::max(1.0, mat2::op_norm(a)); }

std::vector<cd> circle(cd center, double r, std::size_t n) {
    std::vector<cd> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(center + std::polar(r, kTwoPi * static_cast<double>(k) / static_cast<double>(n)));
    return out;
}

// Angles run over the cone cos(theta) >= 1 - c/2 where the quadratic
// r^2 - (2 cos(theta) + c) r + 1 = 0 has real roots; each angle gives both.
std::vector<cd> cardioid_boundary(double c, std::size_t n) {
    std::vector<cd> out;
    if (n == 0) return out;
    const double lim = 1.0 - 0.5 * c;
    const bool full = lim <= -1.0;
    const double th_max = full ? std::numbers::pi : std::acos(std::min(1.0, lim));
    // odd count over the cone; the middle sample is theta = 0
    const std::size_t m = full || n % 2 == 1 ? n : n - 1;
    out.reserve(2 * m);
    for (std::size_t k = 0; k < m; ++k) {
        const double th = full ? kTwoPi * static_cast<double>(k) / static_cast<double>(m)
                          : m == 1 ? 0.0
                                   : -th_max + 2.0 * th_max * static_cast<double>(k) / static_cast<double>(m - 1);
        const double p = 2.0 * std::cos(th) + c;
        const double sq = std::sqrt(std::max(0.0, p * p - 4.0));
        // product of the roots is 1; take the small one as 2/(p + sq)
        out.push_back(std::polar(0.5 * (p + sq), th));
        if (sq > 0.0) out.push_back(std::polar(2.0 / (p + sq), th));
    }
    return out;
}

// Felzenszwalb-Huttenlocher 1D squared distance transform; "no site" is
// the large finite value kFar.
constexpr double kFar = 1e20;

void edt_1d(const double* f, double* d, std::size_t n, std::vector<std::size_t>& v, std::vector<double>& z) {
    std::size_t k = 0;
    v[0] = 0;
    z[0] = -kInf;
    z[1] = kInf;
    for (std::size_t q = 1; q < n; ++q) {
        const double qq = static_cast<double>(q);
        double s;
        for (;;) {
            const double p = static_cast<double>(v[k]);
            s = ((f[q] + qq * qq) - (f[v[k]] + p * p)) / (2.0 * qq - 2.0 * p);
            if (s <= z[k] && k > 0) {
                --k;
                continue;
            }
            break;
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
    }
    k = 0;
    for (std::size_t q = 0; q < n; ++q) {
        while (z[k + 1] < static_cast<double>(q)) ++k;
        const double diff = static_cast<double>(q) - static_cast<double>(v[k]);
        d[q] = diff * diff + f[v[k]];
    }
}

// Squared distance (in pixels) from every node to the nearest set node.
std::vector<double> squared_edt(const std::vector<char>& mask, std::size_t n) {
    std::vector<double> g(n * n), col(n), out(n);
    std::vector<std::size_t> v(n);
    std::vector<double> z(n + 1);
    for (std::size_t i = 0; i < n * n; ++i) g[i] = mask[i] ? 0.0 : kFar;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) col[y] = g[y * n + x];
        edt_1d(col.data(), out.data(), n, v, z);
        for (std::size_t y = 0; y < n; ++y) g[y * n + x] = out[y];
    }
    for (std::size_t y = 0; y < n; ++y) {
        edt_1d(&g[y * n], out.data(), n, v, z);
        std::copy(out.begin(), out.end(), g.begin() + static_cast<std::ptrdiff_t>(y * n));
    }
    return g;
}

double ellipse_level(double x, double y, double a, double b) {
    if (a <= 0.0 && b <= 0.0) return (x == 0.0 && y == 0.0) ? -1.0 : kInf;
    if (b <= 0.0) return y == 0.0 ? x * x / (a * a) - 1.0 : kInf;
    if (a <= 0.0) return x == 0.0 ? y * y / (b * b) - 1.0 : kInf;
    return x * x / (a * a) + y * y / (b * b) - 1.0;
}

template <class Axes>
bool in_union(double x, double y, double lo, double hi, Axes axes) {
    constexpr int kSamples = 256;
    double best = kInf, best_p = lo;
    for (int k = 0; k <= kSamples; ++k) {
        const double p = lo + (hi - lo) * k / kSamples;
        const auto [a, b] = axes(p);
        const double g = ellipse_level(x, y, a, b);
        if (g <= 1e-12) return true;
        if (g < best) {
            best = g;
            best_p = p;
        }
    }
    if (std::isinf(best)) return false;
    // golden-section refinement around the best sample
    const double step = (hi - lo) / kSamples;
    double l = std::max(lo, best_p - step), r = std::min(hi, best_p + step);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    auto level = [&](double p) {
        const auto [a, b] = axes(p);
        return ellipse_level(x, y, a, b);
    };
    double m1 = r - phi * (r - l), m2 = l + phi * (r - l);
    double f1 = level(m1), f2 = level(m2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            r = m2;
            m2 = m1;
            f2 = f1;
            m1 = r - phi * (r - l);
            f1 = level(m1);
        } else {
            l = m1;
            m1 = m2;
            f1 = f2;
            m2 = l + phi * (r - l);
            f2 = level(m2);
        }
    }
    return std::min(f1, f2) <= 1e-12;
}

}  // namespace

std::string to_string(Ambient a) { return a == Ambient::universal ? "universal" : "reduced"; }

std::string SpectrumRegion::kind() const {
    struct V {
        std::string operator()(const Annulus&) const { return "annulus"; }
        std::string operator()(const Disk&) const { return "disk"; }
        std::string operator()(const PointSet&) const { return "point_set"; }
        std::string operator()(const ImplicitCardioid&) const { return "implicit_cardioid"; }
        std::string operator()(const RegionUnion&) const { return "union"; }
    };
    return std::visit(V{}, shape);
}

bool SpectrumRegion::contains(cd z, double tol) const {
    struct V {
        cd z;
        double tol;
        bool operator()(const Annulus& a) const {
            const double r = std::abs(z);
            return r >= a.r_inner - tol && r <= a.r_outer + tol;
        }
        bool operator()(const Disk& d) const { return std::abs(z - d.center) <= d.radius + tol; }
        bool operator()(const PointSet& p) const {
            return std::any_of(p.points.begin(), p.points.end(), [&](cd q) { return std::abs(z - q) <= tol; });
        }
        bool operator()(const ImplicitCardioid& c) const { return std::norm(z - 1.0) <= c.c * std::abs(z) + tol; }
        bool operator()(const RegionUnion& u) const {
            return std::any_of(u.parts.begin(), u.parts.end(), [&](const SpectrumRegion& r) { return r.contains(z, tol); });
        }
    };
    return std::visit(V{z, tol}, shape);
}

double SpectrumRegion::distance(cd z) const {
    struct V {
        cd z;
        double operator()(const Annulus& a) const {
            const double r = std::abs(z);
            if (r < a.r_inner) return a.r_inner - r;
            if (r > a.r_outer) return r - a.r_outer;
            return 0.0;
        }
        double operator()(const Disk& d) const { return std::max(0.0, std::abs(z - d.center) - d.radius); }
        double operator()(const PointSet& p) const {
            double best = kInf;
            for (cd q : p.points) best = std::min(best, std::abs(z - q));
            return best;
        }
        double operator()(const ImplicitCardioid& c) const {
            if (std::norm(z - 1.0) <= c.c * std::abs(z)) return 0.0;
            double best = kInf;
            for (cd q : cardioid_boundary(c.c, 8192)) best = std::min(best, std::abs(z - q));
            return best;
        }
        double operator()(const RegionUnion& u) const {
            double best = kInf;
            for (const auto& r : u.parts) best = std::min(best, r.distance(z));
            return best;
        }
    };
    return std::visit(V{z}, shape);
}

std::vector<cd> SpectrumRegion::boundary(std::size_t angles) const {
    struct V {
        std::size_t n;
        std::vector<cd> operator()(const Annulus& a) const {
            auto out = circle(0.0, a.r_outer, n);
            if (a.r_inner > 0.0 && a.r_inner < a.r_outer) {
                auto in = circle(0.0, a.r_inner, n);
                out.insert(out.end(), in.begin(), in.end());
            }
            return out;
        }
        std::vector<cd> operator()(const Disk& d) const { return circle(d.center, d.radius, n); }
        std::vector<cd> operator()(const PointSet& p) const { return p.points; }
        std::vector<cd> operator()(const ImplicitCardioid& c) const { return cardioid_boundary(c.c, n); }
        std::vector<cd> operator()(const RegionUnion& u) const {
            std::vector<cd> out;
            for (const auto& r : u.parts) {
                auto b = r.boundary(n);
                out.insert(out.end(), b.begin(), b.end());
            }
            return out;
        }
    };
    return std::visit(V{angles}, shape);
}

double spectral_radius_product(const Mat2& a, const Mat2& b, RadiusMode mode) {
    if (mode == RadiusMode::normal) {
        if (!mat2::is_normal(a) || !mat2::is_normal(b)) throw PreconditionError("normal mode needs normal A and B");
    } else if (!traceless(a) || !traceless(b)) {
        throw PreconditionError("traceless mode needs Tr A = Tr B = 0");
    }
    return mat2::op_norm(a) * mat2::op_norm(b);
}

SpectrumRegion spectrum_product_traceless(const Mat2& a, const Mat2& b) {
    if (!traceless(a) || !traceless(b)) throw PreconditionError("spectrum of AB needs Tr A = Tr B = 0");
    SpectrumRegion r;
    r.ambient = Ambient::universal;
    const double r_out = mat2::op_norm(a) * mat2::op_norm(b);
    const double r_in = mat2::recip(mat2::inv_op_norm(a)) * mat2::recip(mat2::inv_op_norm(b));
    if (r_out == 0.0) {
        r.shape = PointSet{{cd{0.0, 0.0}}};
    } else if (r_in == 0.0) {
        r.shape = Disk{0.0, r_out};
    } else {
        r.shape = Annulus{std::min(r_in, r_out), r_out};
    }
    return r;
}

Mat2 CanonicalForm::matrix() const { return phase * mat2::make(0.0, alpha, beta, 0.0); }

CanonicalForm canonical_traceless(const Mat2& a) {
    if (!traceless(a)) throw PreconditionError("canonical form needs Tr A = 0");
    const auto sv = mat2::singular_values(a);
    CanonicalForm f;
    f.alpha = sv.max;
    f.beta = sv.max > 0.0 ? std::abs(mat2::det(a)) / sv.max : 0.0;
    if (f.alpha * f.beta > 0.0) {
        cd p2 = -mat2::det(a) / (f.alpha * f.beta);
        p2 = cd(p2.real() + 0.0, p2.imag() + 0.0);
        f.phase = std::sqrt(p2);
        f.phase /= std::abs(f.phase);
    }
    return f;
}

RepresentationCloud representation_spectrum_sampler(const Mat2& a, const Mat2& b, std::size_t grid) {
    const Mat2 ac = canonical_traceless(a).matrix();
    const Mat2 bc = canonical_traceless(b).matrix();
    RepresentationCloud cloud;
    if (mat2::op_norm(ac) == 0.0 || mat2::op_norm(bc) == 0.0) {
        cloud.which = RepresentationCase::zero;
    } else if (mat2::is_singular(ac) || mat2::is_singular(bc)) {
        cloud.which = RepresentationCase::singular;
    }
    grid = std::max<std::size_t>(grid, 4);
    const std::size_t npsi = grid / 4 + 1;
    cloud.points.reserve(2 * grid * npsi);
    cloud.min_modulus = kInf;
    for (std::size_t i = 0; i < grid; ++i) {
        const cd e = std::polar(1.0, kTwoPi * static_cast<double>(i) / static_cast<double>(grid));
        for (std::size_t j = 0; j < npsi; ++j) {
            const double psi = 0.5 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(npsi - 1);
            const double c = std::cos(psi), s = std::sin(psi);
            const Mat2 u = mat2::make(c, e * s, -s, e * c);
            const Mat2 m = u * ac * u.adjoint() * bc;
            const cd half = 0.5 * mat2::trace(m);
            const cd root = std::sqrt(half * half - mat2::det(m));
            for (cd lam : {half + root, half - root}) {
                cloud.points.push_back(lam);
                cloud.min_modulus = std::min(cloud.min_modulus, std::abs(lam));
                cloud.max_modulus = std::max(cloud.max_modulus, std::abs(lam));
            }
        }
    }
    return cloud;
}

std::pair<double, double> ellipse_axes_radial(double beta1, double beta2, double r) {
    const double p = beta1 * beta2;
    return {std::abs(r + p / r), std::abs(r - p / r)};
}

std::pair<double, double> ellipse_axes_linear(double beta1, double beta2, double a) {
    const double p = beta1 * beta2;
    return {std::abs(a * (1.0 + beta1) * (1.0 + beta2) - (1.0 + p)),
            std::abs(a * (beta1 - 1.0) * (beta2 + 1.0) + (1.0 - p))};
}

EllipseComparison ellipse_families_equal(double beta1, double beta2, std::size_t raster, double threshold) {
    if (beta1 < 1.0 || beta2 < 1.0) throw PreconditionError("ellipse families need beta1, beta2 >= 1");
    const double p = beta1 * beta2;
    EllipseComparison out;
    std::tie(out.outer_a1, out.outer_b1) = ellipse_axes_radial(beta1, beta2, 1.0);
    std::tie(out.outer_a2, out.outer_b2) = ellipse_axes_linear(beta1, beta2, 0.0);

    raster += raster % 2;  // odd node count keeps the axes on the grid
    const std::size_t n = raster + 1, half = raster / 2;
    const double extent = 1.0 + p;
    const double h = 2.0 * extent / static_cast<double>(raster);
    out.pixel = h;
    std::vector<char> m1(n * n, 0), m2(n * n, 0);
    auto r_axes = [&](double r) { return ellipse_axes_radial(beta1, beta2, r); };
    auto l_axes = [&](double a) { return ellipse_axes_linear(beta1, beta2, a); };
    // Both unions are symmetric under x -> -x and y -> -y.
    for (std::size_t iy = 0; iy <= half; ++iy) {
        const double y = h * static_cast<double>(iy);
        for (std::size_t ix = 0; ix <= half; ++ix) {
            const double x = h * static_cast<double>(ix);
            const char in1 = in_union(x, y, 1.0, p, r_axes);
            const char in2 = in_union(x, y, 0.0, 1.0, l_axes);
            for (std::size_t yy : {half + iy, half - iy}) {
                for (std::size_t xx : {half + ix, half - ix}) {
                    m1[yy * n + xx] = in1;
                    m2[yy * n + xx] = in2;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n * n; ++i) out.mismatched_pixels += m1[i] != m2[i];
    if (out.mismatched_pixels > 0) out.hausdorff = raster_hausdorff(m1, m2, n, h);
    out.equal = out.hausdorff < threshold;
    return out;
}

double raster_hausdorff(const std::vector<char>& x, const std::vector<char>& y, std::size_t n, double pixel) {
    if (x.size() != n * n || y.size() != n * n) throw PreconditionError("raster masks must be n x n");
    const bool ex = std::none_of(x.begin(), x.end(), [](char c) { return c; });
    const bool ey = std::none_of(y.begin(), y.end(), [](char c) { return c; });
    if (ex || ey) return ex && ey ? 0.0 : kInf;
    const auto dx = squared_edt(x, n), dy = squared_edt(y, n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (x[i]) worst = std::max(worst, dy[i]);
        if (y[i]) worst = std::max(worst, dx[i]);
    }
    return pixel * std::sqrt(worst);
}

SpectrumRegion spectrum_example_66(cd alpha, cd beta) {
    SpectrumRegion r;
    const double c = 0.5 * std::abs(alpha) * std::abs(beta);
    if (c == 0.0) {
        r.shape = PointSet{{cd{1.0, 0.0}}};
    } else {
        r.shape = ImplicitCardioid{c};
    }
    return r;
}

double hausdorff_distance(const std::vector<cd>& x, const std::vector<cd>& y) {
    if (x.empty() || y.empty()) return x.empty() && y.empty() ? 0.0 : kInf;
    auto directed = [](const std::vector<cd>& p, const std::vector<cd>& q) {
        double worst = 0.0;
        for (cd a : p) {
            double best = kInf;
            for (cd b : q) {
                best = std::min(best, std::norm(a - b));
                if (best <= worst) break;
            }
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(directed(x, y), directed(y, x));
}

}  // namespace freespec
