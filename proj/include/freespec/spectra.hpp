#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "freespec/mat2.hpp"

namespace freespec {

/// Universal C*-algebra spectrum vs. spectrum in the reduced von Neumann algebra.
enum class Ambient { universal, reduced };

std::string to_string(Ambient a);

struct SpectrumRegion;

/// Closed annulus r_inner <= |z| <= r_outer.
struct Annulus {
    double r_inner = 0.0;
    double r_outer = 0.0;
};

struct Disk {
    std::complex<double> center{};
    double radius = 0.0;
};

struct PointSet {
    std::vector<std::complex<double>> points;
};

/// {z : |z - 1|^2 <= c |z|}.
struct ImplicitCardioid {
    double c = 0.0;
};

struct RegionUnion {
    std::vector<SpectrumRegion> parts;
};

struct SpectrumRegion {
    std::variant<Annulus, Disk, PointSet, ImplicitCardioid, RegionUnion> shape;
    Ambient ambient = Ambient::reduced;

    /// "annulus", "disk", "point_set", "implicit_cardioid", "union".
    std::string kind() const;
    bool contains(std::complex<double> z, double tol = 1e-12) const;
    /// Euclidean distance from z to the region (0 inside). For the implicit
    /// region this is measured against a dense boundary sample.
    double distance(std::complex<double> z) const;
    /// Points on the boundary; `angles` rays per closed curve.
    std::vector<std::complex<double>> boundary(std::size_t angles = 720) const;
};

enum class RadiusMode { normal, traceless };

/// ||A|| ||B||, valid for normal pairs and for traceless pairs.
double spectral_radius_product(const Mat2& a, const Mat2& b, RadiusMode mode);

/// Spectrum of AB in the universal free product for traceless A, B:
/// the polar product [||A^-1||^-1 ||B^-1||^-1, ||A|| ||B||] x [0, 2 pi].
SpectrumRegion spectrum_product_traceless(const Mat2& a, const Mat2& b);

/// A traceless 2x2 matrix is unitarily equivalent to phase * [[0, alpha], [beta, 0]]
/// with alpha >= beta >= 0 and |phase| = 1.
struct CanonicalForm {
    double alpha = 0.0;
    double beta = 0.0;
    std::complex<double> phase{1.0, 0.0};

    Mat2 matrix() const;
};

CanonicalForm canonical_traceless(const Mat2& a);

enum class RepresentationCase { invertible, singular, zero };

struct RepresentationCloud {
    std::vector<std::complex<double>> points;
    RepresentationCase which = RepresentationCase::invertible;
    double min_modulus = 0.0;
    double max_modulus = 0.0;
};

/// Eigenvalues of U A U* B over the family
/// U(phi, psi) = [[cos psi, e^{i phi} sin psi], [-sin psi, e^{i phi} cos psi]],
/// with A, B replaced by their canonical forms. `grid` angles for phi in
/// [0, 2 pi), grid/4 + 1 for psi in [0, pi/2].
RepresentationCloud representation_spectrum_sampler(const Mat2& a, const Mat2& b,
                                                    std::size_t grid = 720);

struct EllipseComparison {
    bool equal = false;
    double hausdorff = 0.0;
    double pixel = 0.0;
    std::size_t mismatched_pixels = 0;
    /// Semi-axes of the outermost ellipse of each family.
    double outer_a1 = 0.0, outer_b1 = 0.0, outer_a2 = 0.0, outer_b2 = 0.0;
};

/// Semi-axes of the first family at r in [1, b1 b2].
std::pair<double, double> ellipse_axes_radial(double beta1, double beta2, double r);
/// Semi-axes of the second family at a in [0, 1].
std::pair<double, double> ellipse_axes_linear(double beta1, double beta2, double a);

/// Rasterizes both unions on a (raster+1)^2 node grid and compares them;
/// equal when the symmetric Hausdorff distance is below `threshold`.
EllipseComparison ellipse_families_equal(double beta1, double beta2, std::size_t raster = 1024,
                                         double threshold = 1e-2);

/// Hausdorff distance between two n x n pixel masks (row-major), in units
/// of `pixel`.
double raster_hausdorff(const std::vector<char>& x, const std::vector<char>& y, std::size_t n,
                        double pixel);

/// Spectrum {|z-1|^2 <= |alpha beta| |z| / 2}; {1} when alpha beta = 0.
SpectrumRegion spectrum_example_66(std::complex<double> alpha, std::complex<double> beta);

/// Symmetric Hausdorff distance between finite point sets.
double hausdorff_distance(const std::vector<std::complex<double>>& x,
                          const std::vector<std::complex<double>>& y);

}  // namespace freespec
