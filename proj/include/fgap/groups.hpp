#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fgap/kernels.hpp"
#include "fgap/moebius.hpp"

namespace fgap {

// Named generator set with metadata. elliptic_witnesses are elliptic elements
// generating the group together (the raw generator list can contain
// parabolics); they feed the pairwise bound checks.
struct GroupPreset {
    std::string name;
    std::vector<GroupElement> generators;
    bool known_discrete = true;
    std::vector<int> known_orders;
    std::string notes;
    std::vector<GroupElement> elliptic_witnesses;
};

GroupPreset modular_group();
GroupPreset hecke_group(int q);
GroupPreset triangle_group(int p, int q, int r);
// "modular" | "hecke:q" | "triangle:p,q,r"
GroupPreset parse_preset(const std::string& name);

UhpPoint basepoint(); // (0, 1); all enumeration balls are centered here

struct EnumConfig {
    int max_word_length = 10;
    double ball_radius = 3.0;
    double dedup_tol = 1e-7;            // hyperbolic distance, fixed-point dedup
    std::size_t element_cap = 2000000;  // explored-table cap; trips BudgetExceeded
};

// Matrix dedup tolerance on canonical entries.
inline constexpr double kMatrixDedupTol = 1e-9;

// Breadth-first products of generators and inverses up to max_word_length,
// keeping elements that move the basepoint at most 2*ball_radius. Output is
// dedup'd by canonical form and sorted by canonical entries; identical input
// yields identical output regardless of policy or thread count.
std::vector<GroupElement> enumerate_elements(const GroupPreset& preset, const EnumConfig& cfg,
                                             ExecPolicy pol = ExecPolicy::Parallel);

struct EllipticPoint {
    UhpPoint point;
    int order = 0;      // max order among enumerated elements fixing the point
    double angle = 0.0; // 2*pi / order
};

struct EllipticPointSet {
    std::vector<EllipticPoint> points;
    std::vector<GroupElement> stabilizer_generators; // parallel to points
    double ball_radius = 0.0;
    double dedup_tol = 0.0;
};

EllipticPointSet elliptic_fixed_points(const std::vector<GroupElement>& elements,
                                       const EnumConfig& cfg);

struct GapResult {
    double d_min = 0.0;
    std::array<std::size_t, 2> pair{0, 0};
    std::array<int, 2> orders{0, 0};
    bool interior_certified = false;
    double margin_used = 0.0;
};

// Negative margin selects the self-certifying default: a first pass over all
// in-ball pairs fixes d0, the reported pair then minimizes over points lying
// at least d0 inside the ball.
inline constexpr double kAutoMargin = -1.0;

GapResult min_elliptic_gap(const EllipticPointSet& eps, double margin = kAutoMargin,
                           ExecPolicy pol = ExecPolicy::Parallel);

// Minimum translation length over the enumerated hyperbolic elements: an
// upper-bound estimate of the systole, exact once the word length covers the
// shortest geodesic's realization.
double systole_estimate(const std::vector<GroupElement>& elements,
                        ExecPolicy pol = ExecPolicy::Parallel);

} // namespace fgap
