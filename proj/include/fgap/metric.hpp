#pragma once

#include "fgap/moebius.hpp"

namespace fgap {

double distance(const UhpPoint& z, const UhpPoint& w);
// cosh/sinh of the distance and sinh of half of it, in exact closed form
// (no acosh/sinh round trip); these drive the displacement identities.
double cosh_distance(const UhpPoint& z, const UhpPoint& w);
double sinh_distance(const UhpPoint& z, const UhpPoint& w);
double sinh_half_distance(const UhpPoint& z, const UhpPoint& w);

// Geodesic through p and q, parameterized by conjugating the pair onto a
// vertical line; point_at(0) = p, point_at(1) = q, arc length proportional.
struct GeodesicSegment {
    UhpPoint p;
    UhpPoint q;
    double length = 0.0;

    UhpPoint point_at(double t) const;

    GroupElement from_vertical; // maps the normalized vertical line back
    double y_start = 1.0;       // image height of p on that line
    double log_ratio = 0.0;     // signed log of the q/p image heights
};

GeodesicSegment make_geodesic(const UhpPoint& p, const UhpPoint& q);
UhpPoint geodesic_point(const UhpPoint& p, const UhpPoint& q, double t);

// sinh(rho(z, g z) / 2): one operand of the min-max objective.
double half_displacement(const GroupElement& g, const UhpPoint& z);

// | sinh(rho(z, g z)/2) - sinh(rho(z, v)) * |sin(theta/2)| | for elliptic g
// with datum (v, theta).
double displacement_identity_residual(const GroupElement& g, const UhpPoint& z);

} // namespace fgap
