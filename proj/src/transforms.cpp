#include "freespec/transforms.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "freespec/errors.hpp"

namespace freespec {

namespace {

constexpr int kMaxBisection = 200;

double two_atom_chi(const Atom& x, const Atom& y, double w) {
    const double a = x.location, b = y.location, p = x.mass, q = y.mass;
    // a b (1+w) z^2 - (p a + q b + w (a+b)) z + w = 0, root through z(0) = 0
    const double K = p * a + q * b + w * (a + b);
    const double disc = std::sqrt(std::max(0.0, K * K - 4.0 * a * b * (1.0 + w) * w));
    // K < 0 only near w = -1 with both atoms positive; conjugate form there
    if (K < 0.0) return (K - disc) / (2.0 * a * b * (1.0 + w));
    return 2.0 * w / (K + disc);
}

}  // namespace

std::string_view to_string(STransformMethod m) {
    switch (m) {
        case STransformMethod::dirac: return "closed-form-dirac";
        case STransformMethod::two_atom: return "closed-form-two-atom";
        case STransformMethod::arcsine: return "closed-form-arcsine";
        case STransformMethod::numeric: return "numeric-inversion";
        case STransformMethod::product: return "product";
    }
    return "unknown";
}

STransform::STransform(Interval domain, STransformMethod method, Evaluator eval,
                       std::shared_ptr<const MeasureR> source)
    : domain_(domain), method_(method), eval_(std::move(eval)), source_(std::move(source)) {
    if (!(domain_.lo < domain_.hi)) throw DomainError("S-transform domain is empty");
}

double STransform::operator()(double w) const {
    if (!in_domain(w))
        throw DomainError("w = " + std::to_string(w) + " outside the S-transform domain (" +
                          std::to_string(domain_.lo) + ", " + std::to_string(domain_.hi) + ")");
    return eval_(w);
}

double psi(const MeasureR& mu, double z) {
    if (z != 0.0) {
        const double x = 1.0 / z;
        const double tol = 1e-14 * std::max(1.0, std::abs(x));
        for (const auto& a : mu.atoms())
            if (std::abs(a.location - x) <= tol) throw SingularityError("psi has a pole at an atom");
        if (mu.continuous() && mu.continuous()->support.contains(x))
            throw SingularityError("psi has a pole on the support");
    }
    return mu.integrate([z](double t) { return t * z / (1.0 - t * z); });
}

double chi_numeric(const MeasureR& mu, double w) {
    const double lo_dom = mu.atom_mass(0.0) - 1.0;
    if (!(w > lo_dom && w < 0.0)) throw DomainError("w outside (mu({0}) - 1, 0)");
    double lo = -1.0, hi = 0.0;
    while (psi(mu, lo) > w) {
        hi = lo;
        lo *= 2.0;
        if (lo < -1e300) throw DomainError("psi inversion bracket diverged");
    }
    for (int it = 0; it < kMaxBisection; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (psi(mu, mid) > w) {
            hi = mid;
        } else {
            lo = mid;
        }
        if (hi - lo <= 1e-16 * std::abs(mid)) break;
    }
    return 0.5 * (lo + hi);
}

STransform make_s_transform(const MeasureR& mu, SMethodChoice choice) {
    if (mu.support().lo < 0.0) throw DomainError("S-transform needs a measure on [0, inf)");
    const double zero_mass = mu.atom_mass(0.0);
    const Interval dom{zero_mass - 1.0, 0.0};
    if (!(dom.lo < 0.0)) throw DomainError("S-transform undefined for the point mass at 0");
    auto src = std::make_shared<const MeasureR>(mu);

    if (choice == SMethodChoice::automatic) {
        if (auto c = mu.dirac_location()) {
            const double inv = 1.0 / *c;
            return STransform(dom, STransformMethod::dirac, [inv](double) { return inv; }, src);
        }
        const bool atomic = !mu.continuous() || mu.continuous()->weights.empty();
        if (atomic && mu.atoms().size() == 2) {
            const Atom x = mu.atoms()[0], y = mu.atoms()[1];
            return STransform(
                dom, STransformMethod::two_atom,
                [x, y](double w) { return two_atom_chi(x, y, w) * (1.0 + w) / w; }, src);
        }
        if (mu.family() == MeasureR::Family::arcsine01 && mu.atoms().empty()) {
            return STransform(dom, STransformMethod::arcsine,
                              [](double w) { return (w + 2.0) / (w + 1.0); }, src);
        }
    }
    const MeasureR* raw = src.get();
    return STransform(
        dom, STransformMethod::numeric,
        [raw](double w) { return chi_numeric(*raw, w) * (1.0 + w) / w; }, src);
}

double s_transform(const MeasureR& mu, double w) { return make_s_transform(mu)(w); }

STransform s_product(const STransform& a, const STransform& b) {
    const Interval dom{std::max(a.domain().lo, b.domain().lo), std::min(a.domain().hi, b.domain().hi)};
    if (!(dom.lo < dom.hi)) throw DomainError("S-transform domains do not overlap");
    return STransform(dom, STransformMethod::product, [a, b](double w) { return a(w) * b(w); });
}

}  // namespace freespec
