#include "fgap/groups.hpp"

#include "fgap/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace fgap {

namespace {

constexpr double kPi = 3.14159265358979323846;

GroupElement rotation_s() { return GroupElement(0.0, -1.0, 1.0, 0.0); }

GroupElement translation(double shift) { return GroupElement(1.0, shift, 0.0, 1.0); }

// Reflection matrices act on conj(z); products of two have det 1 and land in
// the group proper. Line through two interior points, as a det(-1) matrix.
std::array<double, 4> reflection_matrix(const UhpPoint& p, const UhpPoint& q) {
    const double scale = std::max({1.0, std::abs(p.x), std::abs(q.x), p.y, q.y});
    if (std::abs(q.x - p.x) <= 1e-12 * scale) {
        return {-1.0, 2.0 * p.x, 0.0, 1.0}; // vertical line x = p.x
    }
    const double m = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x));
    const double r = std::hypot(p.x - m, p.y);
    return {m / r, (r * r - m * m) / r, 1.0 / r, -m / r};
}

GroupElement reflect_product(const std::array<double, 4>& m1, const std::array<double, 4>& m2) {
    return GroupElement(m1[0] * m2[0] + m1[1] * m2[2], m1[0] * m2[1] + m1[1] * m2[3],
                        m1[2] * m2[0] + m1[3] * m2[2], m1[2] * m2[1] + m1[3] * m2[3]);
}

} // namespace

UhpPoint basepoint() { return UhpPoint(0.0, 1.0); }

GroupPreset modular_group() {
    GroupPreset preset;
    preset.name = "modular";
    const GroupElement s = rotation_s();
    const GroupElement t = translation(1.0);
    preset.generators = {s, t};
    preset.known_orders = {2, 3};
    preset.notes = "generators S(z) = -1/z and T(z) = z + 1";
    preset.elliptic_witnesses = {s, compose(s, t)};
    return preset;
}

GroupPreset hecke_group(int q) {
    if (q < 3) throw BadParameter("hecke group requires q >= 3");
    GroupPreset preset;
    preset.name = "hecke:" + std::to_string(q);
    const GroupElement s = rotation_s();
    const GroupElement t = translation(2.0 * std::cos(kPi / q));
    preset.generators = {s, t};
    preset.known_orders = {2, q};
    preset.notes = "generators S(z) = -1/z and T(z) = z + 2 cos(pi/q)";
    preset.elliptic_witnesses = {s, compose(s, t)};
    return preset;
}

GroupPreset triangle_group(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) throw NotHyperbolicSignature("orders must be >= 2");
    const double alpha = kPi / p;
    const double beta = kPi / q;
    const double gamma = kPi / r;
    if (1.0 / p + 1.0 / q + 1.0 / r >= 1.0 - 1e-12)
        throw NotHyperbolicSignature("1/p + 1/q + 1/r must be < 1");

    // Hyperbolic law of cosines gives the side lengths from the vertex angles.
    auto side = [](double a1, double a2, double opposite) {
        return std::acosh((std::cos(a1) * std::cos(a2) + std::cos(opposite)) /
                          (std::sin(a1) * std::sin(a2)));
    };
    const double c_len = side(alpha, beta, gamma); // v1 - v2
    const double b_len = side(alpha, gamma, beta); // v1 - v3

    const UhpPoint v1 = basepoint();
    const UhpPoint v2(0.0, std::exp(c_len));
    const UhpPoint v3 = apply(elliptic_from(v1, alpha), UhpPoint(0.0, std::exp(b_len)));

    // Rotation generators as double reflections in the triangle's sides:
    // x = R_b R_c about v1, y = R_c R_a about v2, z = R_a R_b about v3,
    // so x y z collapses to the identity.
    const auto rc = reflection_matrix(v1, v2);
    const auto rb = reflection_matrix(v1, v3);
    const auto ra = reflection_matrix(v2, v3);
    const GroupElement x = reflect_product(rb, rc);
    const GroupElement y = reflect_product(rc, ra);
    const GroupElement z = reflect_product(ra, rb);

    if (!approx_equal(compose(compose(x, y), z), GroupElement(), 1e-9))
        throw Error("triangle group construction failed the defining relation");

    GroupPreset preset;
    preset.name = "triangle:" + std::to_string(p) + "," + std::to_string(q) + "," +
                  std::to_string(r);
    preset.generators = {x, y, z};
    preset.known_orders = {p, q, r};
    preset.notes = "vertex rotations of the (" + std::to_string(p) + "," + std::to_string(q) +
                   "," + std::to_string(r) + ") triangle";
    preset.elliptic_witnesses = {x, y, z};
    return preset;
}

GroupPreset parse_preset(const std::string& name) {
    if (name == "modular") return modular_group();
    auto parse_ints = [](const std::string& body, std::size_t want) {
        std::vector<int> vals;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const std::size_t comma = body.find(',', pos);
            const std::string tok = body.substr(pos, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - pos);
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw BadParameter("bad preset parameter '" + tok + "'");
            }
            if (used != tok.size()) throw BadParameter("bad preset parameter '" + tok + "'");
            vals.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (vals.size() != want) throw BadParameter("wrong number of preset parameters");
        return vals;
    };
    if (name.rfind("hecke:", 0) == 0) {
        const auto vals = parse_ints(name.substr(6), 1);
        return hecke_group(vals[0]);
    }
    if (name.rfind("triangle:", 0) == 0) {
        const auto vals = parse_ints(name.substr(9), 3);
        return triangle_group(vals[0], vals[1], vals[2]);
    }
    throw BadParameter("unknown preset '" + name + "'");
}

namespace {

// Dedup table over canonical entries quantized to kMatrixDedupTol cells; the
// 3^4 neighbor probe keeps near-boundary duplicates from splitting.
class CanonicalSet {
public:
    bool insert(const GroupElement& g, std::uint32_t index) {
        const auto e = g.entries();
        std::array<std::int64_t, 4> cell;
        for (int i = 0; i < 4; ++i) cell[i] = quantize(e[i]);
        std::array<std::int64_t, 4> probe;
        for (int da = -1; da <= 1; ++da)
            for (int db = -1; db <= 1; ++db)
                for (int dc = -1; dc <= 1; ++dc)
                    for (int dd = -1; dd <= 1; ++dd) {
                        probe = {cell[0] + da, cell[1] + db, cell[2] + dc, cell[3] + dd};
                        const auto it = cells_.find(probe);
                        if (it == cells_.end()) continue;
                        for (const std::uint32_t idx : it->second)
                            if (close(entries_[idx], e)) return false;
                    }
        cells_[cell].push_back(index);
        if (entries_.size() <= index) entries_.resize(index + 1);
        entries_[index] = e;
        return true;
    }

private:
    static std::int64_t quantize(double v) {
        return static_cast<std::int64_t>(std::floor(v / kMatrixDedupTol));
    }
    static bool close(const std::array<double, 4>& a, const std::array<double, 4>& b) {
        for (int i = 0; i < 4; ++i)
            if (std::abs(a[i] - b[i]) > kMatrixDedupTol) return false;
        return true;
    }

    struct CellHash {
        std::size_t operator()(const std::array<std::int64_t, 4>& k) const {
            std::uint64_t h = 1469598103934665603ull;
            for (const std::int64_t v : k) {
                h ^= static_cast<std::uint64_t>(v);
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };

    std::unordered_map<std::array<std::int64_t, 4>, std::vector<std::uint32_t>, CellHash> cells_;
    std::vector<std::array<double, 4>> entries_;
};

} // namespace

std::vector<GroupElement> enumerate_elements(const GroupPreset& preset, const EnumConfig& cfg,
                                             ExecPolicy pol) {
    if (cfg.max_word_length < 1) throw BadParameter("max_word_length must be >= 1");
    if (!(cfg.ball_radius > 0.0)) throw BadParameter("ball_radius must be > 0");
    if (preset.generators.empty()) throw BadParameter("preset has no generators");

    const UhpPoint origin = basepoint();

    std::vector<GroupElement> moves;
    for (const GroupElement& g : preset.generators) {
        for (const GroupElement& m : {g, inverse(g)}) {
            bool dup = false;
            for (const GroupElement& seen : moves)
                if (approx_equal(seen, m, kMatrixDedupTol)) dup = true;
            if (!dup) moves.push_back(m);
        }
    }

    double max_step = 0.0;
    for (const GroupElement& m : moves)
        max_step = std::max(max_step, distance(origin, apply(m, origin)));

    const double keep_bound = 2.0 * cfg.ball_radius + 1e-9;

    CanonicalSet seen;
    std::vector<GroupElement> table;
    std::vector<double> displacement;
    table.emplace_back();
    displacement.push_back(0.0);
    seen.insert(table[0], 0);

    std::vector<std::uint32_t> frontier{0};
    std::vector<GroupElement> children;
    for (int depth = 1; depth <= cfg.max_word_length && !frontier.empty(); ++depth) {
        const std::size_t n_moves = moves.size();
        children.assign(frontier.size() * n_moves, GroupElement());
        parallel_for_index(children.size(), pol, [&](std::size_t k) {
            children[k] = compose(table[frontier[k / n_moves]], moves[k % n_moves]);
        });

        // Elements that cannot re-enter the keep ball within the remaining
        // letters are dropped from the frontier (triangle inequality bound).
        const double frontier_bound =
            keep_bound + (cfg.max_word_length - depth) * max_step;

        std::vector<std::uint32_t> next;
        for (const GroupElement& child : children) {
            const auto index = static_cast<std::uint32_t>(table.size());
            if (!seen.insert(child, index)) continue;
            if (table.size() >= cfg.element_cap)
                throw BudgetExceeded("element table exceeded the configured cap");
            const double disp = distance(origin, apply(child, origin));
            table.push_back(child);
            displacement.push_back(disp);
            if (disp <= frontier_bound) next.push_back(index);
        }
        frontier = std::move(next);
    }

    std::vector<GroupElement> kept;
    for (std::size_t i = 0; i < table.size(); ++i)
        if (displacement[i] <= keep_bound) kept.push_back(table[i]);
    std::sort(kept.begin(), kept.end(), lex_less);
    return kept;
}

EllipticPointSet elliptic_fixed_points(const std::vector<GroupElement>& elements,
                                       const EnumConfig& cfg) {
    const UhpPoint origin = basepoint();
    EllipticPointSet set;
    set.ball_radius = cfg.ball_radius;
    set.dedup_tol = cfg.dedup_tol;
    for (const GroupElement& g : elements) {
        if (classify(g) != ElementClass::Elliptic) continue;
        const EllipticDatum datum = elliptic_datum(g);
        if (!datum.order) continue; // no certified stabilizer order
        if (distance(origin, datum.fixed) > cfg.ball_radius) continue;

        std::size_t found = set.points.size();
        for (std::size_t i = 0; i < set.points.size(); ++i) {
            if (distance(set.points[i].point, datum.fixed) < cfg.dedup_tol) {
                found = i;
                break;
            }
        }
        if (found == set.points.size()) {
            set.points.push_back(EllipticPoint{datum.fixed, *datum.order,
                                               2.0 * kPi / *datum.order});
            set.stabilizer_generators.push_back(g);
        } else if (*datum.order > set.points[found].order) {
            set.points[found].order = *datum.order;
            set.points[found].angle = 2.0 * kPi / *datum.order;
            set.stabilizer_generators[found] = g;
        }
    }
    return set;
}

namespace {

GapResult gap_with_margin(const EllipticPointSet& eps, double margin, ExecPolicy pol) {
    const UhpPoint origin = basepoint();
    std::vector<std::size_t> certified;
    for (std::size_t i = 0; i < eps.points.size(); ++i)
        if (distance(origin, eps.points[i].point) <= eps.ball_radius - margin)
            certified.push_back(i);
    if (certified.size() < 2)
        throw InsufficientPoints("need two interior-certified elliptic points");

    const PairBest best = min_pair_scan(
        certified,
        [&](std::size_t i, std::size_t j) {
            return distance(eps.points[i].point, eps.points[j].point);
        },
        pol);

    GapResult gap;
    gap.d_min = best.d;
    gap.pair = {best.i, best.j};
    gap.orders = {eps.points[best.i].order, eps.points[best.j].order};
    gap.margin_used = margin;
    gap.interior_certified = margin > 0.0;
    return gap;
}

} // namespace

GapResult min_elliptic_gap(const EllipticPointSet& eps, double margin, ExecPolicy pol) {
    if (margin >= 0.0) return gap_with_margin(eps, margin, pol);
    const GapResult first = gap_with_margin(eps, 0.0, pol);
    return gap_with_margin(eps, first.d_min, pol);
}

double systole_estimate(const std::vector<GroupElement>& elements, ExecPolicy pol) {
    std::vector<double> lengths(elements.size(),
                                std::numeric_limits<double>::infinity());
    parallel_for_index(elements.size(), pol, [&](std::size_t i) {
        if (classify(elements[i]) == ElementClass::Hyperbolic)
            lengths[i] = translation_length(elements[i]);
    });
    double best = std::numeric_limits<double>::infinity();
    for (const double v : lengths) best = std::min(best, v);
    if (!std::isfinite(best))
        throw NoHyperbolicElements("no hyperbolic element enumerated");
    return best;
}

} // namespace fgap
