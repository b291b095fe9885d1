#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "freespec/mat2.hpp"
#include "freespec/measures.hpp"
#include "freespec/transforms.hpp"

namespace freespec {

/// Default number of t-samples used to tabulate radial laws.
inline constexpr std::size_t kRadialGrid = 512;

/// Brown measure of U H for a Haar unitary U *-free from H >= 0, given the
/// law of H^2. The radial CDF solves mu(B(0, S(t-1)^{-1/2})) = t for t in
/// (mu({0}), 1]. Throws DiracInputError for a point mass.
RadialMeasure haagerup_larsen(const MeasureR& mu_H2, std::size_t grid = kRadialGrid);

/// Radial law from an S-transform; shared by the single-operator and the
/// product formula.
RadialMeasure radial_from_s_transform(const STransform& s, double atom_at_zero, double r_inner,
                                      double r_outer, std::size_t grid = kRadialGrid);

/// Law of A*A for a 2x2 matrix: equal-weight atoms at the squared singular values.
MeasureR modulus_law(const Mat2& a);

/// Brown measure of AB with A in copy 1, B in copy 2, both traceless.
/// Throws PreconditionError on nonzero trace or a zero factor.
RadialMeasure brown_product(const Mat2& a, const Mat2& b, std::size_t grid = kRadialGrid);

/// Brown measure of alpha E12 + beta F12: density (1/pi)(1/(1-r^2)^2) on the
/// disc of radius 1/sqrt 2 (area element r dr dtheta), dilated by sqrt|alpha beta|.
RadialMeasure brown_sum_nilpotents(std::complex<double> alpha, std::complex<double> beta);

/// Law of c t(1-t) for t arcsine on [0,1]; the modulus-squared law of
/// c^{1/2} h sqrt(1-h^2).
MeasureR arcsine_product_law(double c, std::size_t grid_points = 4096);

struct PlanarAtom {
    std::complex<double> location;
    double mass = 0.0;
};

/// Planar measure = atoms + weight * (radial component translated to center).
struct ShiftedMixture {
    std::vector<PlanarAtom> atoms;
    double component_weight = 0.0;
    std::complex<double> center{};
    std::optional<RadialMeasure> component;
};

/// Brown measure of diag(1,0)_(1) [[alpha, beta],[0, alpha]]_(2):
/// half a point mass at 0 plus half the law of alpha + beta h v* sqrt(1-h^2).
ShiftedMixture brown_example_64(std::complex<double> alpha, std::complex<double> beta,
                                std::size_t grid = kRadialGrid);

/// Brown measure of E12 diag(alpha, beta)_(2): the R-diagonal law of
/// (alpha - beta) u* h sqrt(1-h^2), a disc of radius |alpha-beta|/(2 sqrt 2).
RadialMeasure brown_example_65(std::complex<double> alpha, std::complex<double> beta,
                               std::size_t grid = kRadialGrid);

}  // namespace freespec
