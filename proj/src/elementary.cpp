#include "fgap/elementary.hpp"

#include "fgap/metric.hpp"

#include <cmath>

namespace fgap {

bool shares_fixed_point(const GroupElement& a, const GroupElement& b) {
    const EllipticDatum da = elliptic_datum(a);
    const EllipticDatum db = elliptic_datum(b);
    return distance(da.fixed, db.fixed) < kCoincideTol;
}

PairDiagnosis diagnose_pair(const GroupElement& a, const GroupElement& b) {
    const EllipticDatum da = elliptic_datum(a);
    const EllipticDatum db = elliptic_datum(b);

    PairDiagnosis diag;
    diag.shared_fixed_point = distance(da.fixed, db.fixed) < kCoincideTol;
    diag.orders = {da.order.value_or(0), db.order.value_or(0)};
    diag.elementary = diag.shared_fixed_point || (diag.orders[0] == 2 && diag.orders[1] == 2);

    const GroupElement product = compose(a, b);
    diag.product_class = classify(product);
    if (diag.product_class == ElementClass::Hyperbolic)
        diag.product_translation_length = translation_length(product);
    return diag;
}

double order_two_product_residual(const GroupElement& a, const GroupElement& b) {
    const EllipticDatum da = elliptic_datum(a);
    const EllipticDatum db = elliptic_datum(b);
    if (da.order.value_or(0) != 2 || db.order.value_or(0) != 2)
        throw WrongOrders("both elements must have order two");
    const double rho = distance(da.fixed, db.fixed);
    if (rho < kCoincideTol)
        throw CoincidentFixedPoints("fixed points must be distinct");
    const double t_ab = translation_length(compose(a, b));
    return std::abs(t_ab - 2.0 * rho);
}

} // namespace fgap
