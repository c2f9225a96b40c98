#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fgap/groups.hpp"
#include "fgap/moebius.hpp"

namespace fgap {

// Sharp lower bound for the elliptic min-max displacement,
// ((4 cos^2(pi/7) - 3) / (8 cos(pi/7) + 7))^(1/2) = 0.1318...
double yamada_constant();
// 2 C / sqrt(3) = 0.152... (bound on sinh of the minimal gap)
double theorem_sinh_bound();
// asinh(2 C / sqrt(3)) = 0.1516... (bound on the minimal gap itself)
double theorem_constant();

// Uniform pass tolerance on report margins.
inline constexpr double kReportTol = 1e-6;
// Tolerance the residual-style claims (Lemma14 / Lemma12) are reported against.
inline constexpr double kIdentityTol = 1e-9;

struct MinMaxResult {
    double value = 0.0;
    UhpPoint argmin;
    double grid_resolution = 0.0;
    double refined_step = 0.0;
};

// Deterministic two-phase minimization of
//   m(z) = max(sinh(rho(z, g z)/2), sinh(rho(z, h z)/2)):
// coarse grid in (x, log y) over the padded hull of the fixed loci, then
// 4-neighbor step-halving descent, seeded also from the geodesic between the
// fixed points when both elements are elliptic. The value is an upper bound
// on the true infimum by construction.
MinMaxResult minimize_minmax(const GroupElement& g, const GroupElement& h,
                             ExecPolicy pol = ExecPolicy::Parallel);

enum class BoundClaim { Lemma14, Lemma12, Proposition, NonElemBound, MardenYamada, MainTheorem };

std::string_view to_string(BoundClaim claim);
std::optional<BoundClaim> claim_from_string(std::string_view name);

// One inequality verdict: pass iff lhs - rhs >= -kReportTol.
struct BoundReport {
    BoundClaim claim;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    std::string context;
};

BoundReport make_report(BoundClaim claim, double lhs, double rhs, std::string context);

// sinh(rho of the fixed points) >= C / |sin(theta/2)|, theta the smaller angle.
BoundReport check_nonelementary_bound(const GroupElement& g, const GroupElement& h);
// 2 cosh(d_min / 2) >= 1 / |sin(theta/2)| on the minimal pair.
BoundReport check_proposition(const GapResult& gap, const EllipticPointSet& eps);
// d_min >= min(l0/2, theorem_constant()), the l0 term dropped when every
// elliptic point has order above two.
BoundReport check_main_theorem(const GapResult& gap, double l0, bool all_orders_above_two);
// minimize_minmax value >= C for a non-elementary elliptic pair.
BoundReport check_marden_yamada(const GroupElement& g, const GroupElement& h,
                                ExecPolicy pol = ExecPolicy::Parallel);

// Pipeline smoke checks over a harvested point set; empty when the set has no
// usable material. Reported as kIdentityTol >= max residual.
std::optional<BoundReport> check_displacement_identity(const EllipticPointSet& eps,
                                                       int samples_per_point = 64);
std::optional<BoundReport> check_order_two_products(const EllipticPointSet& eps);

} // namespace fgap
