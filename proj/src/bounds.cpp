#include "fgap/bounds.hpp"

#include "fgap/elementary.hpp"
#include "fgap/metric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace fgap {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDescentMinStep = 1e-7;
constexpr int kGridSamples = 49;
constexpr int kGeodesicSeeds = 65;
constexpr double kHullPad = 2.0; // hyperbolic padding around the fixed loci

} // namespace

double yamada_constant() {
    const double c = std::cos(kPi / 7.0);
    return std::sqrt((4.0 * c * c - 3.0) / (8.0 * c + 7.0));
}

double theorem_sinh_bound() { return 2.0 * yamada_constant() / std::sqrt(3.0); }

double theorem_constant() { return std::asinh(theorem_sinh_bound()); }

namespace {

struct Candidate {
    double value;
    double x;
    double log_y;

    bool operator<(const Candidate& o) const {
        if (value != o.value) return value < o.value;
        if (x != o.x) return x < o.x;
        return log_y < o.log_y;
    }
};

// Interior anchor of an element's fixed locus, for hull construction.
UhpPoint fixed_locus_anchor(const GroupElement& g) {
    switch (classify(g)) {
        case ElementClass::Elliptic:
            return elliptic_datum(g).fixed;
        case ElementClass::Hyperbolic: {
            const AxisEndpoints ax = axis(g);
            if (std::isfinite(ax.attracting) && std::isfinite(ax.repelling)) {
                const double lo = std::min(ax.attracting, ax.repelling);
                const double hi = std::max(ax.attracting, ax.repelling);
                return UhpPoint((lo + hi) / 2.0, (hi - lo) / 2.0); // axis apex
            }
            const double finite = std::isfinite(ax.attracting) ? ax.attracting : ax.repelling;
            return UhpPoint(finite, 1.0);
        }
        case ElementClass::Parabolic: {
            const double fix =
                g.c() != 0.0 ? (g.a() - g.d()) / (2.0 * g.c()) : 0.0;
            return UhpPoint(fix, 1.0);
        }
        case ElementClass::Identity:
            break;
    }
    throw BadParameter("minimize_minmax requires non-identity elements");
}

struct Descent {
    Candidate best;
    double final_step;
};

template <typename F>
Descent descend(F&& f, double x, double log_y, double step) {
    Candidate cur{f(x, log_y), x, log_y};
    double s = step;
    int guard = 0;
    while (s >= kDescentMinStep && guard < 200000) {
        Candidate best_nb = cur;
        for (const auto& [nx, nly] : {std::pair{cur.x + s, cur.log_y},
                                      std::pair{cur.x - s, cur.log_y},
                                      std::pair{cur.x, cur.log_y + s},
                                      std::pair{cur.x, cur.log_y - s}}) {
            const Candidate cand{f(nx, nly), nx, nly};
            if (cand < best_nb) best_nb = cand;
        }
        if (best_nb.value < cur.value) {
            cur = best_nb;
        } else {
            s /= 2.0;
        }
        ++guard;
    }
    return Descent{cur, s};
}

} // namespace

MinMaxResult minimize_minmax(const GroupElement& g, const GroupElement& h, ExecPolicy pol) {
    const UhpPoint lg = fixed_locus_anchor(g);
    const UhpPoint lh = fixed_locus_anchor(h);

    const double pad_sinh = std::sinh(kHullPad);
    double x_lo = std::min(lg.x - pad_sinh * lg.y, lh.x - pad_sinh * lh.y);
    double x_hi = std::max(lg.x + pad_sinh * lg.y, lh.x + pad_sinh * lh.y);
    double ly_lo = std::min(std::log(lg.y), std::log(lh.y)) - kHullPad;
    double ly_hi = std::max(std::log(lg.y), std::log(lh.y)) + kHullPad;

    auto objective = [&](double x, double ly) {
        const UhpPoint z(x, std::exp(ly));
        return std::max(half_displacement(g, z), half_displacement(h, z));
    };

    const GridBest coarse =
        grid_min_scan(objective, x_lo, x_hi, ly_lo, ly_hi, kGridSamples, kGridSamples, pol);
    const double dx = (x_hi - x_lo) / (kGridSamples - 1);
    const double dly = (ly_hi - ly_lo) / (kGridSamples - 1);
    const double step0 = std::max(dx, dly);

    std::vector<std::pair<double, double>> seeds;
    seeds.emplace_back(coarse.x, coarse.log_y);
    if (classify(g) == ElementClass::Elliptic && classify(h) == ElementClass::Elliptic) {
        if (distance(lg, lh) > 1e-12) {
            const GeodesicSegment geo = make_geodesic(lg, lh);
            for (int k = 0; k < kGeodesicSeeds; ++k) {
                const UhpPoint z = geo.point_at(static_cast<double>(k) / (kGeodesicSeeds - 1));
                seeds.emplace_back(z.x, std::log(z.y));
            }
        } else {
            seeds.emplace_back(lg.x, std::log(lg.y));
        }
    }

    std::vector<Descent> results(seeds.size(),
                                 Descent{Candidate{0.0, 0.0, 0.0}, 0.0});
    parallel_for_index(seeds.size(), pol, [&](std::size_t k) {
        results[k] = descend(objective, seeds[k].first, seeds[k].second, step0);
    });

    Descent best = results[0];
    for (const Descent& r : results)
        if (r.best < best.best) best = r;

    MinMaxResult out;
    out.value = best.best.value;
    out.argmin = UhpPoint(best.best.x, std::exp(best.best.log_y));
    out.grid_resolution = step0;
    out.refined_step = best.final_step;
    return out;
}

std::string_view to_string(BoundClaim claim) {
    switch (claim) {
        case BoundClaim::Lemma14: return "Lemma14";
        case BoundClaim::Lemma12: return "Lemma12";
        case BoundClaim::Proposition: return "Proposition";
        case BoundClaim::NonElemBound: return "NonElemBound";
        case BoundClaim::MardenYamada: return "MardenYamada";
        case BoundClaim::MainTheorem: return "MainTheorem";
    }
    return "?";
}

std::optional<BoundClaim> claim_from_string(std::string_view name) {
    for (const BoundClaim c : {BoundClaim::Lemma14, BoundClaim::Lemma12, BoundClaim::Proposition,
                               BoundClaim::NonElemBound, BoundClaim::MardenYamada,
                               BoundClaim::MainTheorem})
        if (to_string(c) == name) return c;
    return std::nullopt;
}

BoundReport make_report(BoundClaim claim, double lhs, double rhs, std::string context) {
    BoundReport report;
    report.claim = claim;
    report.lhs = lhs;
    report.rhs = rhs;
    report.margin = lhs - rhs;
    report.pass = report.margin >= -kReportTol;
    report.context = std::move(context);
    return report;
}

BoundReport check_nonelementary_bound(const GroupElement& g, const GroupElement& h) {
    const PairDiagnosis diag = diagnose_pair(g, h);
    if (diag.elementary)
        throw ElementaryPair("the pair generates an elementary group");
    const EllipticDatum dg = elliptic_datum(g);
    const EllipticDatum dh = elliptic_datum(h);
    const double theta = std::min(std::abs(dg.angle), std::abs(dh.angle));
    const double lhs = sinh_distance(dg.fixed, dh.fixed);
    const double rhs = yamada_constant() / std::abs(std::sin(theta / 2.0));
    std::ostringstream ctx;
    ctx << "sinh(rho of fixed points) vs C/|sin(theta/2)|, orders (" << diag.orders[0] << ","
        << diag.orders[1] << ")";
    return make_report(BoundClaim::NonElemBound, lhs, rhs, ctx.str());
}

BoundReport check_proposition(const GapResult& gap, const EllipticPointSet& eps) {
    (void)eps;
    const int n = std::max(gap.orders[0], gap.orders[1]);
    const double theta = 2.0 * kPi / n; // smaller rotation angle of the pair
    const double lhs = 2.0 * std::cosh(gap.d_min / 2.0);
    const double rhs = 1.0 / std::abs(std::sin(theta / 2.0));
    std::ostringstream ctx;
    ctx << "minimal pair orders (" << gap.orders[0] << "," << gap.orders[1] << "), d_min="
        << gap.d_min;
    return make_report(BoundClaim::Proposition, lhs, rhs, ctx.str());
}

BoundReport check_main_theorem(const GapResult& gap, double l0, bool all_orders_above_two) {
    const double c = theorem_constant();
    const double rhs = all_orders_above_two ? c : std::min(l0 / 2.0, c);
    std::ostringstream ctx;
    if (all_orders_above_two)
        ctx << "all elliptic orders above two; l0/2 term omitted";
    else
        ctx << "rhs = min(l0/2 = " << l0 / 2.0 << ", " << c << ")";
    return make_report(BoundClaim::MainTheorem, gap.d_min, rhs, ctx.str());
}

BoundReport check_marden_yamada(const GroupElement& g, const GroupElement& h, ExecPolicy pol) {
    const MinMaxResult mm = minimize_minmax(g, h, pol);
    std::ostringstream ctx;
    ctx << "min-max displacement estimate at (" << mm.argmin.x << "," << mm.argmin.y << ")";
    return make_report(BoundClaim::MardenYamada, mm.value, yamada_constant(), ctx.str());
}

std::optional<BoundReport> check_displacement_identity(const EllipticPointSet& eps,
                                                       int samples_per_point) {
    if (eps.stabilizer_generators.empty()) return std::nullopt;
    std::mt19937_64 rng(0x66676170u); // fixed seed: reports must be reproducible
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    std::size_t samples = 0;
    const std::size_t n_points = std::min<std::size_t>(eps.points.size(), 32);
    for (std::size_t i = 0; i < n_points; ++i) {
        const GroupElement& gen = eps.stabilizer_generators[i];
        const UhpPoint v = eps.points[i].point;
        for (int s = 0; s < samples_per_point; ++s) {
            const double r = 10.0 * unit(rng);
            const double psi = 2.0 * kPi * unit(rng) - kPi;
            UhpPoint z(v.x, v.y * std::exp(r));
            if (std::abs(psi) > 1e-6) z = apply(elliptic_from(v, psi), z);
            worst = std::max(worst, displacement_identity_residual(gen, z));
            ++samples;
        }
    }
    std::ostringstream ctx;
    ctx << "max residual over " << samples << " samples at rho <= 10";
    return make_report(BoundClaim::Lemma14, kIdentityTol, worst, ctx.str());
}

std::optional<BoundReport> check_order_two_products(const EllipticPointSet& eps) {
    std::vector<GroupElement> involutions;
    std::vector<UhpPoint> at;
    for (std::size_t i = 0; i < eps.points.size() && involutions.size() < 40; ++i) {
        const int order = eps.points[i].order;
        if (order % 2 != 0) continue;
        const GroupElement e2 = power(eps.stabilizer_generators[i], order / 2);
        if (classify(e2) != ElementClass::Elliptic) continue;
        involutions.push_back(e2);
        at.push_back(eps.points[i].point);
    }
    if (involutions.size() < 2) return std::nullopt;
    double worst = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < involutions.size(); ++i)
        for (std::size_t j = i + 1; j < involutions.size(); ++j) {
            if (distance(at[i], at[j]) < kCoincideTol) continue;
            worst = std::max(worst, order_two_product_residual(involutions[i], involutions[j]));
            ++pairs;
        }
    if (pairs == 0) return std::nullopt;
    std::ostringstream ctx;
    ctx << "max |T_AB - 2 rho| over " << pairs << " order-two pairs";
    return make_report(BoundClaim::Lemma12, kIdentityTol, worst, ctx.str());
}

} // namespace fgap
