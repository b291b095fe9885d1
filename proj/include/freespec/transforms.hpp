#pragma once

#include <functional>
#include <memory>
#include <string_view>

#include "freespec/measures.hpp"

namespace freespec {

enum class STransformMethod { dirac, two_atom, arcsine, numeric, product };

std::string_view to_string(STransformMethod m);

/// Voiculescu S-transform of a compactly supported measure on [0, inf),
/// evaluated on the real interval (mu({0}) - 1, 0).
class STransform {
public:
    using Evaluator = std::function<double(double)>;

    STransform(Interval domain, STransformMethod method, Evaluator eval,
               std::shared_ptr<const MeasureR> source = nullptr);

    /// Open interval (lo, hi) on which the transform is defined.
    Interval domain() const { return domain_; }
    STransformMethod method() const { return method_; }
    /// Measure the transform was built from; null for products.
    const MeasureR* source() const { return source_.get(); }

    bool in_domain(double w) const { return w > domain_.lo && w < domain_.hi; }
    /// Throws DomainError outside the open domain.
    double operator()(double w) const;

private:
    Interval domain_;
    STransformMethod method_;
    Evaluator eval_;
    std::shared_ptr<const MeasureR> source_;
};

/// psi(z) = integral of t z / (1 - t z). Throws SingularityError when 1/z
/// lies in the support.
double psi(const MeasureR& mu, double z);

/// Inverse of psi on the negative half line, by bisection.
double chi_numeric(const MeasureR& mu, double w);

enum class SMethodChoice { automatic, numeric };

/// Builds the S-transform, using a closed form for point masses, two-atom
/// laws, and the arcsine law on [0,1], numeric inversion otherwise.
STransform make_s_transform(const MeasureR& mu, SMethodChoice choice = SMethodChoice::automatic);

/// Convenience: S_mu(w).
double s_transform(const MeasureR& mu, double w);

/// Pointwise product on the intersection of the domains.
STransform s_product(const STransform& a, const STransform& b);

}  // namespace freespec
