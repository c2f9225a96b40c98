#include "fgap/metric.hpp"

#include <algorithm>
#include <cmath>

namespace fgap {

double cosh_distance(const UhpPoint& z, const UhpPoint& w) {
    const double dx = z.x - w.x;
    const double dy = z.y - w.y;
    return 1.0 + (dx * dx + dy * dy) / (2.0 * z.y * w.y);
}

double sinh_half_distance(const UhpPoint& z, const UhpPoint& w) {
    const double dx = z.x - w.x;
    const double dy = z.y - w.y;
    return std::sqrt(dx * dx + dy * dy) / (2.0 * std::sqrt(z.y * w.y));
}

double sinh_distance(const UhpPoint& z, const UhpPoint& w) {
    const double dx = z.x - w.x;
    const double dy = z.y - w.y;
    const double sy = z.y + w.y;
    return std::sqrt(dx * dx + dy * dy) * std::sqrt(dx * dx + sy * sy) / (2.0 * z.y * w.y);
}

double distance(const UhpPoint& z, const UhpPoint& w) {
    double arg = cosh_distance(z, w);
    if (arg < 1.0) arg = 1.0;
    // acosh cancels catastrophically next to 1, and the 1 + |dz|^2/(2yy')
    // form has already rounded away separations below sqrt(eps); the asinh
    // route keeps full precision there and the gap searches do evaluate
    // near-zero distances.
    if (arg <= 1.0 + 1e-14) return 2.0 * std::asinh(sinh_half_distance(z, w));
    return std::acosh(arg);
}

GeodesicSegment make_geodesic(const UhpPoint& p, const UhpPoint& q) {
    if (p.x == q.x && p.y == q.y)
        throw CoincidentPoints("geodesic requires two distinct points");
    const double scale = std::max({1.0, std::abs(p.x), std::abs(q.x), p.y, q.y});
    GroupElement to_vertical;
    if (std::abs(q.x - p.x) <= 1e-12 * scale) {
        to_vertical = GroupElement(1.0, -p.x, 0.0, 1.0);
    } else {
        // Circle orthogonal to the real axis through p and q.
        const double m = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x));
        const double r = std::hypot(p.x - m, p.y);
        const double u = m - r;
        const double v = m + r;
        to_vertical = GroupElement(1.0, -u, -1.0, v); // u -> 0, v -> inf
    }
    GeodesicSegment seg;
    seg.p = p;
    seg.q = q;
    const UhpPoint ip = apply(to_vertical, p);
    const UhpPoint iq = apply(to_vertical, q);
    seg.y_start = ip.y;
    seg.log_ratio = std::log(iq.y / ip.y);
    seg.length = std::abs(seg.log_ratio);
    seg.from_vertical = inverse(to_vertical);
    return seg;
}

UhpPoint GeodesicSegment::point_at(double t) const {
    return apply(from_vertical, UhpPoint(0.0, y_start * std::exp(t * log_ratio)));
}

UhpPoint geodesic_point(const UhpPoint& p, const UhpPoint& q, double t) {
    return make_geodesic(p, q).point_at(t);
}

double half_displacement(const GroupElement& g, const UhpPoint& z) {
    return sinh_half_distance(z, apply(g, z));
}

double displacement_identity_residual(const GroupElement& g, const UhpPoint& z) {
    const EllipticDatum d = elliptic_datum(g);
    const double lhs = half_displacement(g, z);
    const double rhs = sinh_distance(z, d.fixed) * std::abs(std::sin(d.angle / 2.0));
    return std::abs(lhs - rhs);
}

} // namespace fgap
