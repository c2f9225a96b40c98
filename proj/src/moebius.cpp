#include "fgap/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fgap {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// -0.0 would break byte-level determinism of sorted/serialized output.
inline double scrub_zero(double v) { return v + 0.0; }

inline double wrap_angle(double t) {
    // into (-pi, pi]
    double w = std::remainder(t, kTwoPi);
    if (w <= -M_PI) w = M_PI;
    return w;
}

} // namespace

UhpPoint::UhpPoint(double x_, double y_) : x(x_ + 0.0), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_) || !(y_ > 0.0))
        throw BadParameter("UhpPoint requires finite coordinates with y > 0");
}

namespace {

// Kahan's fma determinant: accurate to ~1.5 ulp even when ad and bc cancel.
inline double accurate_det(double a, double b, double c, double d) {
    const double w = b * c;
    const double e = std::fma(b, c, -w);
    const double f = std::fma(a, d, -w);
    return f - e;
}

} // namespace

GroupElement::GroupElement(double a, double b, double c, double d) {
    const double det = accurate_det(a, b, c, d);
    if (!std::isfinite(det) || !(det > 0.0))
        throw NonPositiveDeterminant("matrix determinant must be positive");
    // A det-1 matrix stored in doubles cannot place its det closer to 1 than
    // ~eps * (|ad| + |bc|); renormalizing inside that band would only inject
    // jitter and break exact canonicalization idempotence.
    const double noise =
        16.0 * std::numeric_limits<double>::epsilon() * (std::abs(a * d) + std::abs(b * c)) +
        1e-12;
    if (std::abs(det - 1.0) > noise) {
        const double s = std::sqrt(det);
        a /= s;
        b /= s;
        c /= s;
        d /= s;
    }

    bool flip = false;
    const double tr = a + d;
    if (std::abs(tr) > kClassEps) {
        flip = tr < 0.0;
    } else if (std::abs(b) > kClassEps) {
        flip = b < 0.0;
    } else if (std::abs(c) > kClassEps) {
        flip = c < 0.0;
    } else {
        flip = a < 0.0;
    }
    if (flip) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    a_ = scrub_zero(a);
    b_ = scrub_zero(b);
    c_ = scrub_zero(c);
    d_ = scrub_zero(d);
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    return GroupElement(g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
                        g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d());
}

GroupElement inverse(const GroupElement& g) {
    return GroupElement(g.d(), -g.b(), -g.c(), g.a());
}

GroupElement power(const GroupElement& g, int k) {
    GroupElement base = k < 0 ? inverse(g) : g;
    int n = k < 0 ? -k : k;
    GroupElement acc;
    while (n > 0) {
        if (n & 1) acc = compose(acc, base);
        base = compose(base, base);
        n >>= 1;
    }
    return acc;
}

bool approx_equal(const GroupElement& g, const GroupElement& h, double tol) {
    double diff = 0.0;
    double mag = 1.0;
    const auto ge = g.entries();
    const auto he = h.entries();
    for (int i = 0; i < 4; ++i) {
        diff = std::max(diff, std::abs(ge[i] - he[i]));
        mag = std::max({mag, std::abs(ge[i]), std::abs(he[i])});
    }
    return diff <= tol * mag;
}

bool lex_less(const GroupElement& g, const GroupElement& h) {
    return g.entries() < h.entries();
}

UhpPoint apply(const GroupElement& g, const UhpPoint& z) {
    const double den_re = g.c() * z.x + g.d();
    const double den_im = g.c() * z.y;
    const double nrm = den_re * den_re + den_im * den_im;
    if (nrm < 1e-300) throw PoleOverflow("point is numerically at a pole of the map");
    const double num_re = g.a() * z.x + g.b();
    const double num_im = g.a() * z.y;
    // Im((az+b)/(cz+d)) = y * det / |cz+d|^2 with det = 1, so positivity is exact.
    return UhpPoint((num_re * den_re + num_im * den_im) / nrm, z.y / nrm);
}

double boundary_apply(const GroupElement& g, double x) {
    if (std::isinf(x)) {
        if (g.c() == 0.0) return x;
        return g.a() / g.c();
    }
    const double den = g.c() * x + g.d();
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return (g.a() * x + g.b()) / den;
}

ElementClass classify(const GroupElement& g) {
    const double id_dist = std::max({std::abs(g.a() - 1.0), std::abs(g.b()), std::abs(g.c()),
                                     std::abs(g.d() - 1.0)});
    if (id_dist <= kClassEps) return ElementClass::Identity;
    const double t = std::abs(g.trace());
    if (t < 2.0 - kClassEps) return ElementClass::Elliptic;
    if (std::abs(t - 2.0) <= kClassEps) return ElementClass::Parabolic;
    return ElementClass::Hyperbolic;
}

namespace {

// Smallest n <= kMaxEllipticOrder with n*theta within n*kOrderTol of 2*pi*Z,
// searched over continued-fraction convergent denominators of theta/2pi.
std::optional<int> detect_order(double theta) {
    const double x = std::abs(theta) / kTwoPi; // in (0, 1/2]
    auto hits = [&](long long n) {
        const double m = static_cast<double>(n) * x;
        const double dist = std::abs(m - std::round(m)) * kTwoPi;
        return dist < static_cast<double>(n) * kOrderTol;
    };
    long long q_prev = 0, q_cur = 1;
    double frac = x; // fractional part after a0 = 0
    for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
        const double xk = 1.0 / frac;
        const double ak = std::floor(xk);
        if (ak > 1e6) break;
        const long long q_next = static_cast<long long>(ak) * q_cur + q_prev;
        if (q_next > kMaxEllipticOrder) break;
        if (q_next >= 2 && hits(q_next)) return static_cast<int>(q_next);
        q_prev = q_cur;
        q_cur = q_next;
        frac = xk - ak;
    }
    return std::nullopt;
}

} // namespace

EllipticDatum elliptic_datum(const GroupElement& g) {
    if (classify(g) != ElementClass::Elliptic)
        throw NotElliptic("elliptic_datum requires an elliptic element");
    // Fixed point: root of c z^2 + (d-a) z - b = 0 with Im > 0. An elliptic
    // element always has c != 0 (c = 0 forces |trace| >= 2).
    const double tr = g.trace();
    const double vx = (g.a() - g.d()) / (2.0 * g.c());
    const double vy = std::sqrt((2.0 - tr) * (2.0 + tr)) / (2.0 * std::abs(g.c()));
    const UhpPoint fixed(vx, vy);
    // Rotation angle from the derivative at the fixed point: f'(v) = e^{i theta}
    // with theta = -2 arg(c v + d).
    const double theta = wrap_angle(-2.0 * std::atan2(g.c() * vy, g.c() * vx + g.d()));
    return EllipticDatum{fixed, theta, detect_order(theta)};
}

GroupElement elliptic_from(const UhpPoint& fixed, double angle) {
    const double w = wrap_angle(angle);
    if (std::abs(w) < 1e-12) throw ZeroAngle("rotation angle must be nonzero");
    const double sy = std::sqrt(fixed.y);
    const GroupElement to_fixed(sy, fixed.x / sy, 0.0, 1.0 / sy); // i -> fixed
    const double ch = std::cos(w / 2.0);
    const double sh = std::sin(w / 2.0);
    const GroupElement rot(ch, sh, -sh, ch); // rotation by w about i
    return compose(compose(to_fixed, rot), inverse(to_fixed));
}

double translation_length(const GroupElement& g) {
    if (classify(g) != ElementClass::Hyperbolic)
        throw NotHyperbolic("translation_length requires a hyperbolic element");
    return 2.0 * std::acosh(std::abs(g.trace()) / 2.0);
}

AxisEndpoints axis(const GroupElement& g) {
    if (classify(g) != ElementClass::Hyperbolic)
        throw NotHyperbolic("axis requires a hyperbolic element");
    const double tr = g.trace(); // canonical sign, so tr > 2
    const double lambda = (tr + std::sqrt(tr * tr - 4.0)) / 2.0;
    const double mu = 1.0 / lambda;
    if (g.c() != 0.0) {
        return AxisEndpoints{(lambda - g.d()) / g.c(), (mu - g.d()) / g.c()};
    }
    // Vertical axis: one endpoint at infinity.
    const double inf = std::numeric_limits<double>::infinity();
    const double finite = g.b() / (g.d() - g.a());
    if (g.a() > 1.0) return AxisEndpoints{inf, finite};
    return AxisEndpoints{finite, inf};
}

} // namespace fgap
