#pragma once

#include <array>
#include <optional>

#include "fgap/moebius.hpp"

namespace fgap {

// Hyperbolic distance under which two elliptic fixed points count as shared.
inline constexpr double kCoincideTol = 1e-8;

// Outcome of the elementary test for a pair of elliptic elements. An order
// of 0 records "no finite order within tolerance".
struct PairDiagnosis {
    bool shared_fixed_point = false;
    std::array<int, 2> orders{0, 0};
    bool elementary = false;
    ElementClass product_class = ElementClass::Identity;
    std::optional<double> product_translation_length;
};

bool shares_fixed_point(const GroupElement& a, const GroupElement& b);
PairDiagnosis diagnose_pair(const GroupElement& a, const GroupElement& b);

// |T_AB - 2 rho(z, w)| for order-two elliptics A, B fixing distinct z, w.
double order_two_product_residual(const GroupElement& a, const GroupElement& b);

} // namespace fgap
