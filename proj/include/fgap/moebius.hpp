#pragma once

#include <array>
#include <complex>
#include <optional>

#include "fgap/errors.hpp"

namespace fgap {

// Point x + iy of the upper half-plane, y > 0.
struct UhpPoint {
    double x = 0.0;
    double y = 1.0;

    UhpPoint() = default;
    UhpPoint(double x_, double y_);

    std::complex<double> to_complex() const { return {x, y}; }
};

enum class ElementClass { Identity, Elliptic, Parabolic, Hyperbolic };

// |trace| tolerance at the elliptic/parabolic/hyperbolic boundary.
inline constexpr double kClassEps = 1e-9;
// Largest cyclic order the angle-based order search will report.
inline constexpr int kMaxEllipticOrder = 1000;
// Threshold under which a rotation-number multiple counts as hitting 2*pi*Z.
inline constexpr double kOrderTol = 1e-8;

// Real 2x2 unimodular matrix with canonical sign, acting on the upper
// half-plane as z -> (az+b)/(cz+d). Construction renormalizes det to 1 and
// fixes the overall sign (trace-positive; lexicographic b, c, a fallback for
// trace zero), so the same isometry always produces the same entries.
class GroupElement {
public:
    GroupElement() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}
    GroupElement(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    double trace() const { return a_ + d_; }
    std::array<double, 4> entries() const { return {a_, b_, c_, d_}; }

private:
    double a_, b_, c_, d_;
};

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, int k);

// Entrywise comparison scaled by max(1, largest entry magnitude).
bool approx_equal(const GroupElement& g, const GroupElement& h, double tol = 1e-12);
// Strict lexicographic order on canonical entries (a, b, c, d).
bool lex_less(const GroupElement& g, const GroupElement& h);

UhpPoint apply(const GroupElement& g, const UhpPoint& z);
// Action on the boundary R u {inf}; infinities mark the point at infinity.
double boundary_apply(const GroupElement& g, double x);

ElementClass classify(const GroupElement& g);

// Fixed point, signed rotation angle in (-pi, pi], and cyclic order of an
// elliptic element. order is empty when no n <= kMaxEllipticOrder brings
// n*angle within tolerance of 2*pi*Z.
struct EllipticDatum {
    UhpPoint fixed;
    double angle = 0.0;
    std::optional<int> order;
};

EllipticDatum elliptic_datum(const GroupElement& g);
GroupElement elliptic_from(const UhpPoint& fixed, double angle);

double translation_length(const GroupElement& g);

// Boundary fixed points of a hyperbolic element; an infinite value marks the
// point at infinity (vertical axis).
struct AxisEndpoints {
    double attracting;
    double repelling;
};

AxisEndpoints axis(const GroupElement& g);

} // namespace fgap
