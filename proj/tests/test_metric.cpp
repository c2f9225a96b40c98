#include "fgap/metric.hpp"

#include <doctest.h>

#include "oracles.hpp"

#include <cmath>

using namespace fgap;

TEST_CASE("distance: vertical geodesic, arccosh value, coincident points") {
    CHECK(distance(UhpPoint(0.0, 1.0), UhpPoint(0.0, std::exp(1.0))) ==
          doctest::Approx(1.0).epsilon(1e-14));

    const UhpPoint i(0.0, 1.0);
    const UhpPoint w(0.5, std::sqrt(3.0) / 2.0);
    const double d = distance(i, w);
    CHECK(d == doctest::Approx(0.5493061443340549).epsilon(1e-15));
    CHECK(d == doctest::Approx(std::acosh(2.0 / std::sqrt(3.0))).epsilon(1e-15));
    // independent route: integrate ds = |dz|/y along the connecting arc
    CHECK(d == doctest::Approx(oracle::integrated_distance(i, w)).epsilon(1e-10));

    const UhpPoint z(-1.7, 0.3);
    CHECK(distance(z, z) == 0.0);
}

TEST_CASE("distance near-coincident guard avoids acosh cancellation") {
    const UhpPoint z(0.25, 1.5);
    const UhpPoint w(0.25 + 1e-9, 1.5);
    const double d = distance(z, w);
    // vertical scale ~1.5: expected Euclidean/y to first order
    CHECK(d == doctest::Approx(1e-9 / 1.5).epsilon(1e-6));
    CHECK(d > 0.0);
}

TEST_CASE("distance is symmetric and positive") {
    auto gen = oracle::rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
        const UhpPoint z = oracle::random_point(gen);
        const UhpPoint w = oracle::random_point(gen);
        CHECK(distance(z, w) == distance(w, z));
        if (z.x != w.x || z.y != w.y) CHECK(distance(z, w) > 0.0);
    }
}

TEST_CASE("geodesic_point: endpoints, vertical midpoint, general midpoint") {
    const UhpPoint p(0.0, 1.0);
    const UhpPoint q(0.0, std::exp(1.0));
    const UhpPoint at0 = geodesic_point(p, q, 0.0);
    const UhpPoint at1 = geodesic_point(p, q, 1.0);
    CHECK(distance(at0, p) < 1e-12);
    CHECK(distance(at1, q) < 1e-12);
    const UhpPoint mid = geodesic_point(p, q, 0.5);
    CHECK(std::abs(mid.x) < 1e-12);
    CHECK(mid.y == doctest::Approx(1.6487212707001282).epsilon(1e-13));

    const UhpPoint a(0.0, 1.0);
    const UhpPoint b(0.5, std::sqrt(3.0) / 2.0);
    const UhpPoint m = geodesic_point(a, b, 0.5);
    CHECK(std::abs(distance(a, m) - 0.27465307216702745) < 1e-9);
    CHECK(std::abs(distance(m, b) - 0.27465307216702745) < 1e-9);

    CHECK_THROWS_AS(geodesic_point(a, a, 0.5), CoincidentPoints);
}

TEST_CASE("geodesic parameterization is proportional to arc length") {
    auto gen = oracle::rng(22);
    for (int trial = 0; trial < 500; ++trial) {
        const UhpPoint p = oracle::random_point(gen);
        const UhpPoint q = oracle::random_point(gen);
        if (distance(p, q) < 1e-6) continue;
        std::uniform_real_distribution<double> ut(0.0, 1.0);
        const double t = ut(gen);
        const UhpPoint z = geodesic_point(p, q, t);
        CHECK(std::abs(distance(p, z) - t * distance(p, q)) < 1e-9);
    }
}

TEST_CASE("GeodesicSegment caches a consistent length") {
    const UhpPoint p(-0.8, 0.4);
    const UhpPoint q(1.1, 2.3);
    const GeodesicSegment seg = make_geodesic(p, q);
    CHECK(seg.length == doctest::Approx(distance(p, q)).epsilon(1e-12));
    CHECK(distance(seg.point_at(0.0), p) < 1e-12);
    CHECK(distance(seg.point_at(1.0), q) < 1e-12);
}

TEST_CASE("half_displacement: fixed point, parabolic shift, e high on the axis") {
    const GroupElement e(0.0, -1.0, 1.0, 0.0);
    CHECK(half_displacement(e, UhpPoint(0.0, 1.0)) < 1e-15);

    const GroupElement t(1.0, 1.0, 0.0, 1.0);
    const UhpPoint z(0.0, 1.0);
    CHECK(half_displacement(t, z) ==
          doctest::Approx(std::sinh(0.5 * distance(z, UhpPoint(1.0, 1.0)))).epsilon(1e-14));

    // e maps (0, e) to (0, 1/e): distance 2, so sinh(1)
    CHECK(half_displacement(e, UhpPoint(0.0, std::exp(1.0))) ==
          doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
}

TEST_CASE("displacement identity: fixed point, explicit value, property") {
    const GroupElement e(0.0, -1.0, 1.0, 0.0);
    CHECK(displacement_identity_residual(e, UhpPoint(0.0, 1.0)) < 1e-15);
    CHECK(displacement_identity_residual(e, UhpPoint(0.0, std::exp(1.0))) < 1e-14);

    CHECK_THROWS_AS(displacement_identity_residual(GroupElement(1, 1, 0, 1), UhpPoint(0, 1)),
                    NotElliptic);
}

TEST_CASE("displacement identity residual over sampled angles and radii") {
    auto gen = oracle::rng(23);
    std::uniform_real_distribution<double> ur(0.0, 10.0);
    std::uniform_real_distribution<double> upsi(-M_PI, M_PI);
    std::uniform_real_distribution<double> uang(0.01, M_PI);
    std::uniform_int_distribution<int> uord(2, 12);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 10000; ++trial) {
        const double angle = coin(gen) ? 2.0 * M_PI / uord(gen) : uang(gen);
        const UhpPoint v = oracle::random_point(gen);
        const GroupElement g = elliptic_from(v, angle);
        const UhpPoint z = oracle::point_at_distance(v, ur(gen), upsi(gen));
        CHECK(displacement_identity_residual(g, z) < 1e-9);
    }
}

TEST_CASE("isometry invariance of the distance") {
    auto gen = oracle::rng(24);
    for (int trial = 0; trial < 10000; ++trial) {
        const GroupElement g = oracle::random_element(gen);
        const UhpPoint z = oracle::random_point(gen);
        const UhpPoint w = oracle::random_point(gen);
        const double before = distance(z, w);
        const double after = distance(apply(g, z), apply(g, w));
        CHECK(std::abs(after - before) <= 1e-10 * std::max(1.0, before));
    }
}

TEST_CASE("triangle inequality on random triples") {
    auto gen = oracle::rng(25);
    for (int trial = 0; trial < 10000; ++trial) {
        const UhpPoint a = oracle::random_point(gen);
        const UhpPoint b = oracle::random_point(gen);
        const UhpPoint c = oracle::random_point(gen);
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    }
}

TEST_CASE("sinh(rho)/sinh(rho/2) equals 2 cosh(rho/2)") {
    auto gen = oracle::rng(26);
    std::uniform_real_distribution<double> ur(1e-6, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double rho = ur(gen);
        const double ratio = std::sinh(rho) / std::sinh(rho / 2.0);
        CHECK(std::abs(ratio - 2.0 * std::cosh(rho / 2.0)) <
              1e-12 * std::max(1.0, 2.0 * std::cosh(rho / 2.0)));
    }
}

TEST_CASE("closed-form sinh helpers agree with the distance") {
    auto gen = oracle::rng(27);
    for (int trial = 0; trial < 2000; ++trial) {
        const UhpPoint z = oracle::random_point(gen);
        const UhpPoint w = oracle::random_point(gen);
        const double d = distance(z, w);
        CHECK(std::abs(sinh_half_distance(z, w) - std::sinh(d / 2.0)) <=
              1e-12 * std::max(1.0, std::sinh(d / 2.0)));
        CHECK(std::abs(sinh_distance(z, w) - std::sinh(d)) <=
              1e-12 * std::max(1.0, std::sinh(d)));
        CHECK(std::abs(cosh_distance(z, w) - std::cosh(d)) <=
              1e-12 * std::max(1.0, std::cosh(d)));
    }
}
