#include "fgap/groups.hpp"

#include <doctest.h>

#include "fgap/metric.hpp"
#include "oracles.hpp"

#include <cmath>
#include <set>

using namespace fgap;

TEST_CASE("modular preset: orders, relations, witnesses") {
    const GroupPreset m = modular_group();
    const GroupElement& s = m.generators[0];
    const GroupElement& t = m.generators[1];

    const EllipticDatum ds = elliptic_datum(s);
    CHECK(ds.order == 2);
    CHECK(distance(ds.fixed, UhpPoint(0.0, 1.0)) < 1e-12);

    const EllipticDatum dst = elliptic_datum(compose(s, t));
    CHECK(dst.order == 3);
    CHECK(dst.fixed.x == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(dst.fixed.y == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

    CHECK(approx_equal(compose(compose(compose(s, t), inverse(t)), s), GroupElement(), 1e-12));
    CHECK(m.known_discrete);
    CHECK(m.elliptic_witnesses.size() == 2);
}

TEST_CASE("hecke presets: q = 3 is modular, orders follow q") {
    const GroupPreset h3 = hecke_group(3);
    const GroupPreset m = modular_group();
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(approx_equal(h3.generators[i], m.generators[i], 1e-12));

    const GroupPreset h5 = hecke_group(5);
    const GroupElement st5 = compose(h5.generators[0], h5.generators[1]);
    CHECK(std::abs(st5.trace()) == doctest::Approx(1.618033988749895).epsilon(1e-14));
    const EllipticDatum d5 = elliptic_datum(st5);
    CHECK(std::abs(d5.angle) == doctest::Approx(2.0 * M_PI / 5.0).epsilon(1e-12));
    CHECK(d5.order == 5);

    const GroupPreset h7 = hecke_group(7);
    CHECK(elliptic_datum(compose(h7.generators[0], h7.generators[1])).order == 7);

    CHECK_THROWS_AS(hecke_group(2), BadParameter);
}

TEST_CASE("triangle group: defining relations and vertex distances") {
    const GroupPreset tri = triangle_group(2, 3, 7);
    const GroupElement& x = tri.generators[0];
    const GroupElement& y = tri.generators[1];
    const GroupElement& z = tri.generators[2];

    CHECK(approx_equal(power(x, 2), GroupElement(), 1e-9));
    CHECK(approx_equal(power(y, 3), GroupElement(), 1e-9));
    CHECK(approx_equal(power(z, 7), GroupElement(), 1e-9));
    CHECK(approx_equal(compose(compose(x, y), z), GroupElement(), 1e-9));

    CHECK(elliptic_datum(x).order == 2);
    CHECK(elliptic_datum(y).order == 3);
    CHECK(elliptic_datum(z).order == 7);

    // law-of-cosines side between the order-2 and order-3 vertices
    const UhpPoint v1 = elliptic_datum(x).fixed;
    const UhpPoint v2 = elliptic_datum(y).fixed;
    const UhpPoint v3 = elliptic_datum(z).fixed;
    const double expected_c =
        std::acosh(std::cos(M_PI / 7.0) / (std::sin(M_PI / 2.0) * std::sin(M_PI / 3.0)));
    CHECK(distance(v1, v2) == doctest::Approx(expected_c).epsilon(1e-10));
    CHECK(distance(v1, v2) == doctest::Approx(0.2831281533676574).epsilon(1e-10));
    // the other two sides close the triangle
    CHECK(distance(v2, v3) == doctest::Approx(0.6206717375563858).epsilon(1e-10));
    CHECK(distance(v1, v3) == doctest::Approx(0.5452748317535431).epsilon(1e-10));
}

TEST_CASE("triangle group (3,3,4): all orders above two") {
    const GroupPreset tri = triangle_group(3, 3, 4);
    for (const GroupElement& g : tri.generators) {
        const EllipticDatum d = elliptic_datum(g);
        REQUIRE(d.order.has_value());
        CHECK(*d.order > 2);
    }
    CHECK(approx_equal(compose(compose(tri.generators[0], tri.generators[1]),
                               tri.generators[2]),
                       GroupElement(), 1e-9));
}

TEST_CASE("triangle group rejects non-hyperbolic signatures") {
    CHECK_THROWS_AS(triangle_group(2, 3, 6), NotHyperbolicSignature);
    CHECK_THROWS_AS(triangle_group(2, 2, 2), NotHyperbolicSignature);
    CHECK_THROWS_AS(triangle_group(1, 7, 9), NotHyperbolicSignature);
}

TEST_CASE("parse_preset grammar") {
    CHECK(parse_preset("modular").name == "modular");
    CHECK(parse_preset("hecke:5").name == "hecke:5");
    CHECK(parse_preset("triangle:2,3,7").name == "triangle:2,3,7");
    CHECK_THROWS_AS(parse_preset("heck:5"), BadParameter);
    CHECK_THROWS_AS(parse_preset("hecke:"), BadParameter);
    CHECK_THROWS_AS(parse_preset("hecke:x"), BadParameter);
    CHECK_THROWS_AS(parse_preset("triangle:2,3"), BadParameter);
    CHECK_THROWS_AS(parse_preset("triangle:2,3,7,9"), BadParameter);
}

TEST_CASE("enumerate_elements: word length 1 ball of the modular group") {
    EnumConfig cfg;
    cfg.max_word_length = 1;
    const auto elements = enumerate_elements(modular_group(), cfg);
    REQUIRE(elements.size() == 4); // I, S, T, T^-1 (S is self-inverse)
    std::set<std::array<double, 4>> got;
    for (const GroupElement& g : elements) got.insert(g.entries());
    CHECK(got.count(GroupElement().entries()) == 1);
    CHECK(got.count(GroupElement(0, -1, 1, 0).entries()) == 1);
    CHECK(got.count(GroupElement(1, 1, 0, 1).entries()) == 1);
    CHECK(got.count(GroupElement(1, -1, 0, 1).entries()) == 1);
}

TEST_CASE("enumerate_elements: membership via the word-scan oracle") {
    EnumConfig cfg;
    cfg.max_word_length = 6;
    const auto elements = enumerate_elements(modular_group(), cfg);

    const GroupElement target(2.0, 1.0, 1.0, 1.0);
    bool oracle_found = false;
    oracle::scan_words(modular_group(), 6, [&](const GroupElement& w) {
        if (approx_equal(w, target, 1e-9)) oracle_found = true;
    });
    REQUIRE(oracle_found);

    bool enumerated = false;
    for (const GroupElement& g : elements)
        if (approx_equal(g, target, 1e-9)) enumerated = true;
    CHECK(enumerated);
}

TEST_CASE("enumerate_elements dedups sign pairs and is inverse-closed") {
    EnumConfig cfg;
    cfg.max_word_length = 4;
    const auto elements = enumerate_elements(modular_group(), cfg);
    const GroupElement s(0.0, -1.0, 1.0, 0.0);
    int s_count = 0;
    for (const GroupElement& g : elements)
        if (approx_equal(g, s, 1e-9)) ++s_count;
    CHECK(s_count == 1); // S and S^3 = -S are one isometry

    for (const GroupElement& g : elements) {
        const GroupElement gi = inverse(g);
        bool found = false;
        for (const GroupElement& h : elements)
            if (approx_equal(h, gi, 1e-9)) found = true;
        CHECK(found);
    }
}

TEST_CASE("enumerate_elements is deterministic and sorted") {
    EnumConfig cfg;
    cfg.max_word_length = 8;
    const auto a = enumerate_elements(modular_group(), cfg, ExecPolicy::Parallel);
    const auto b = enumerate_elements(modular_group(), cfg, ExecPolicy::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].entries() == b[i].entries());
    for (std::size_t i = 0; i + 1 < a.size(); ++i) CHECK(lex_less(a[i], a[i + 1]));
}

TEST_CASE("enumerate_elements trips the cap on runaway configs") {
    EnumConfig cfg;
    cfg.max_word_length = 14;
    cfg.element_cap = 100;
    CHECK_THROWS_AS(enumerate_elements(modular_group(), cfg), BudgetExceeded);
}

TEST_CASE("elliptic_fixed_points: modular classes within radius 2") {
    EnumConfig cfg;
    cfg.max_word_length = 8;
    cfg.ball_radius = 2.0;
    const auto elements = enumerate_elements(modular_group(), cfg);
    const EllipticPointSet eps = elliptic_fixed_points(elements, cfg);

    bool at_i = false, at_rho = false, at_rho_bar = false;
    for (const EllipticPoint& p : eps.points) {
        if (distance(p.point, UhpPoint(0.0, 1.0)) < 1e-9) {
            at_i = true;
            CHECK(p.order == 2);
            CHECK(p.angle == doctest::Approx(M_PI));
        }
        if (distance(p.point, UhpPoint(-0.5, std::sqrt(3.0) / 2.0)) < 1e-9) {
            at_rho = true;
            CHECK(p.order == 3);
        }
        if (distance(p.point, UhpPoint(0.5, std::sqrt(3.0) / 2.0)) < 1e-9) at_rho_bar = true;
    }
    CHECK(at_i);
    CHECK(at_rho);
    CHECK(at_rho_bar);

    // pairwise distinct beyond dedup_tol, fixed by their stabilizer generator
    for (std::size_t i = 0; i < eps.points.size(); ++i) {
        for (std::size_t j = i + 1; j < eps.points.size(); ++j)
            CHECK(distance(eps.points[i].point, eps.points[j].point) > cfg.dedup_tol);
        CHECK(distance(apply(eps.stabilizer_generators[i], eps.points[i].point),
                       eps.points[i].point) < 1e-9);
        CHECK(eps.points[i].order >= 2);
    }
}

TEST_CASE("elliptic_fixed_points: triangle (2,3,7) carries orders 2, 3, 7") {
    EnumConfig cfg;
    cfg.max_word_length = 8;
    cfg.ball_radius = 1.5;
    const auto elements = enumerate_elements(triangle_group(2, 3, 7), cfg);
    const EllipticPointSet eps = elliptic_fixed_points(elements, cfg);
    std::set<int> orders;
    for (const EllipticPoint& p : eps.points) orders.insert(p.order);
    CHECK(orders.count(2) == 1);
    CHECK(orders.count(3) == 1);
    CHECK(orders.count(7) == 1);
}

TEST_CASE("harvested orders divide the preset's known orders") {
    for (const char* name : {"modular", "hecke:5", "triangle:2,3,7", "triangle:3,3,4"}) {
        const GroupPreset preset = parse_preset(name);
        EnumConfig cfg;
        cfg.max_word_length = 8;
        const auto elements = enumerate_elements(preset, cfg);
        const EllipticPointSet eps = elliptic_fixed_points(elements, cfg);
        for (const EllipticPoint& p : eps.points) {
            bool divides = false;
            for (const int known : preset.known_orders)
                if (known % p.order == 0) divides = true;
            CHECK(divides);
        }
    }
}

TEST_CASE("orbit consistency: images of fixed points are fixed by conjugates") {
    EnumConfig cfg;
    cfg.max_word_length = 6;
    const auto elements = enumerate_elements(modular_group(), cfg);
    const EllipticPointSet eps = elliptic_fixed_points(elements, cfg);
    auto gen = oracle::rng(41);
    std::uniform_int_distribution<std::size_t> pick_el(0, elements.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_pt(0, eps.points.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const GroupElement& gamma = elements[pick_el(gen)];
        const std::size_t k = pick_pt(gen);
        const GroupElement& stab = eps.stabilizer_generators[k];
        const UhpPoint image = apply(gamma, eps.points[k].point);
        const GroupElement conj = compose(compose(gamma, stab), inverse(gamma));
        CHECK(distance(apply(conj, image), image) < 1e-9);
    }
}

TEST_CASE("min_elliptic_gap: modular value against brute force and closed form") {
    EnumConfig cfg;
    cfg.max_word_length = 10;
    const auto elements = enumerate_elements(modular_group(), cfg);
    const EllipticPointSet eps = elliptic_fixed_points(elements, cfg);
    const GapResult gap = min_elliptic_gap(eps);

    CHECK(gap.d_min == doctest::Approx(std::acosh(2.0 / std::sqrt(3.0))).epsilon(1e-12));
    CHECK(std::abs(gap.d_min - 0.5493061443340549) < 1e-9);
    const std::set<int> orders{gap.orders[0], gap.orders[1]};
    CHECK(orders == std::set<int>{2, 3});
    CHECK(gap.interior_certified);

    // straightforward serial re-scan as the oracle
    double brute = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < eps.points.size(); ++i)
        for (std::size_t j = i + 1; j < eps.points.size(); ++j)
            brute = std::min(brute, distance(eps.points[i].point, eps.points[j].point));
    CHECK(gap.d_min == doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("min_elliptic_gap: hecke presets hit acosh(1/sin(pi/q))") {
    const double expected5 = 1.1241772156979302;
    const double expected7 = 1.4773423496631801;
    EnumConfig cfg;
    cfg.max_word_length = 10;
    {
        const auto elements = enumerate_elements(hecke_group(5), cfg);
        const GapResult gap = min_elliptic_gap(elliptic_fixed_points(elements, cfg));
        CHECK(std::abs(gap.d_min - expected5) < 1e-9);
        CHECK(gap.d_min == doctest::Approx(std::acosh(1.0 / std::sin(M_PI / 5.0))).epsilon(1e-12));
    }
    {
        const auto elements = enumerate_elements(hecke_group(7), cfg);
        const GapResult gap = min_elliptic_gap(elliptic_fixed_points(elements, cfg));
        CHECK(std::abs(gap.d_min - expected7) < 1e-9);
    }
}

TEST_CASE("min_elliptic_gap: two points return that pair, one point throws") {
    EllipticPointSet eps;
    eps.ball_radius = 3.0;
    eps.dedup_tol = 1e-7;
    eps.points.push_back({UhpPoint(0.0, 1.0), 2, M_PI});
    eps.stabilizer_generators.push_back(elliptic_from(UhpPoint(0.0, 1.0), M_PI));
    CHECK_THROWS_AS(min_elliptic_gap(eps), InsufficientPoints);

    eps.points.push_back({UhpPoint(0.0, std::exp(0.5)), 3, 2.0 * M_PI / 3.0});
    eps.stabilizer_generators.push_back(
        elliptic_from(UhpPoint(0.0, std::exp(0.5)), 2.0 * M_PI / 3.0));
    const GapResult gap = min_elliptic_gap(eps);
    CHECK(gap.pair == std::array<std::size_t, 2>{0, 1});
    CHECK(gap.d_min == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gap is monotone in radius and depth") {
    EnumConfig small;
    small.max_word_length = 6;
    small.ball_radius = 2.0;
    EnumConfig big;
    big.max_word_length = 10;
    big.ball_radius = 3.0;
    const GroupPreset preset = modular_group();
    const GapResult g_small = min_elliptic_gap(
        elliptic_fixed_points(enumerate_elements(preset, small), small));
    const GapResult g_big =
        min_elliptic_gap(elliptic_fixed_points(enumerate_elements(preset, big), big));
    CHECK(g_big.d_min <= g_small.d_min + 1e-12);
}

TEST_CASE("systole_estimate: modular trace-3 class, monotone, stable") {
    EnumConfig cfg;
    cfg.max_word_length = 6;
    const GroupPreset preset = modular_group();
    const auto at6 = enumerate_elements(preset, cfg);
    const double est6 = systole_estimate(at6);
    CHECK(std::abs(est6 - 1.9248473002384139) < 1e-9);

    // word-scan oracle: the smallest trace above 2 at word length <= 6 is 3
    double min_abs_tr = std::numeric_limits<double>::infinity();
    oracle::scan_words(preset, 6, [&](const GroupElement& w) {
        const double t = std::abs(w.trace());
        if (t > 2.0 + 1e-9) min_abs_tr = std::min(min_abs_tr, t);
    });
    CHECK(min_abs_tr == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(est6 == doctest::Approx(2.0 * std::acosh(min_abs_tr / 2.0)).epsilon(1e-12));

    cfg.max_word_length = 8;
    const double est8 = systole_estimate(enumerate_elements(preset, cfg));
    CHECK(est8 <= est6 + 1e-15);
    cfg.max_word_length = 10;
    const double est10 = systole_estimate(enumerate_elements(preset, cfg));
    CHECK(est10 <= est8 + 1e-15);
    CHECK(std::abs(est10 - est8) < 1e-9);
}

TEST_CASE("systole_estimate: triangle (2,3,7) stabilizes across depths") {
    const GroupPreset preset = triangle_group(2, 3, 7);
    EnumConfig cfg;
    cfg.max_word_length = 10;
    const double at10 = systole_estimate(enumerate_elements(preset, cfg));
    cfg.max_word_length = 12;
    const double at12 = systole_estimate(enumerate_elements(preset, cfg));
    CHECK(at12 <= at10 + 1e-15);
    CHECK(std::abs(at12 - at10) < 1e-9);
}

TEST_CASE("systole_estimate throws without hyperbolic elements") {
    std::vector<GroupElement> only_elliptic{GroupElement(0, -1, 1, 0), GroupElement()};
    CHECK_THROWS_AS(systole_estimate(only_elliptic), NoHyperbolicElements);
}
