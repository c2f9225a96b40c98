#include "fgap/report.hpp"

#include "fgap/elementary.hpp"
#include "fgap/metric.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fgap {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest round-trip formatting, shared by every output format so CSV and
// JSON carry identical digits.
std::string fmt_double(double v) { return ordered_json(v).dump(); }

ordered_json json_boundary_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

EnumConfig enum_config_for(const RunConfig& cfg) {
    EnumConfig ec;
    ec.max_word_length = cfg.max_word_length;
    ec.ball_radius = cfg.ball_radius;
    for (const auto& [key, value] : cfg.tolerance_overrides) {
        if (key == "point_dedup_tol" && value > 0.0) {
            ec.dedup_tol = value;
        } else {
            throw BadParameter("unknown or non-positive tolerance override '" + key + "'");
        }
    }
    return ec;
}

EllipticPointSet harvest(const GroupPreset& preset, const RunConfig& cfg, ExecPolicy pol,
                         std::vector<GroupElement>* elements_out) {
    const EnumConfig ec = enum_config_for(cfg);
    std::vector<GroupElement> elements = enumerate_elements(preset, ec, pol);
    EllipticPointSet eps = elliptic_fixed_points(elements, ec);
    if (elements_out) *elements_out = std::move(elements);
    return eps;
}

} // namespace

EllipticPointSet harvest_points(const RunConfig& cfg, ExecPolicy pol) {
    const GroupPreset preset = parse_preset(cfg.preset);
    return harvest(preset, cfg, pol, nullptr);
}

VerifyReport run_verify(const RunConfig& cfg, ExecPolicy pol) {
    const GroupPreset preset = parse_preset(cfg.preset);

    VerifyReport report;
    report.preset = preset.name;
    report.depth = cfg.max_word_length;
    report.radius = cfg.ball_radius;
    report.tolerances = {
        {"class_eps", kClassEps},       {"coincide_tol", kCoincideTol},
        {"matrix_dedup_tol", kMatrixDedupTol}, {"point_dedup_tol", enum_config_for(cfg).dedup_tol},
        {"order_tol", kOrderTol},       {"report_tol", kReportTol},
        {"identity_tol", kIdentityTol}, {"descent_min_step", 1e-7},
    };

    std::vector<GroupElement> elements;
    const EllipticPointSet eps = harvest(preset, cfg, pol, &elements);
    report.element_count = elements.size();
    report.elliptic_point_count = eps.points.size();

    try {
        report.gap = min_elliptic_gap(eps, kAutoMargin, pol);
    } catch (const InsufficientPoints&) {
        report.not_applicable = true;
        report.warnings.push_back(
            "fewer than two interior-certified elliptic points; gap-based checks not applicable");
    }

    report.systole_depth = cfg.max_word_length;
    report.systole_caveat = "upper-bound estimate at word length <= " +
                            std::to_string(cfg.max_word_length);
    try {
        report.systole_estimate = systole_estimate(elements, pol);
    } catch (const NoHyperbolicElements&) {
        report.warnings.push_back("no hyperbolic element enumerated; systole estimate missing");
    }

    if (auto check = check_displacement_identity(eps)) report.checks.push_back(*check);
    if (auto check = check_order_two_products(eps)) report.checks.push_back(*check);

    for (std::size_t i = 0; i < preset.elliptic_witnesses.size(); ++i) {
        for (std::size_t j = i + 1; j < preset.elliptic_witnesses.size(); ++j) {
            const GroupElement& a = preset.elliptic_witnesses[i];
            const GroupElement& b = preset.elliptic_witnesses[j];
            if (diagnose_pair(a, b).elementary) continue;
            report.checks.push_back(check_nonelementary_bound(a, b));
            report.checks.push_back(check_marden_yamada(a, b, pol));
        }
    }

    if (report.gap) {
        report.checks.push_back(check_proposition(*report.gap, eps));
        const bool all_above_two =
            !preset.known_orders.empty() &&
            *std::min_element(preset.known_orders.begin(), preset.known_orders.end()) > 2;
        if (all_above_two) {
            report.checks.push_back(check_main_theorem(*report.gap, 0.0, true));
        } else if (report.systole_estimate) {
            report.checks.push_back(
                check_main_theorem(*report.gap, *report.systole_estimate, false));
        } else {
            report.warnings.push_back("main theorem check skipped: no systole estimate");
        }
    }

    report.overall_pass = true;
    for (const BoundReport& check : report.checks)
        if (!check.pass) report.overall_pass = false;
    return report;
}

int exit_code(const VerifyReport& report) { return report.overall_pass ? 0 : 1; }

namespace {

ordered_json check_to_json(const BoundReport& check) {
    ordered_json j;
    j["claim"] = std::string(to_string(check.claim));
    j["lhs"] = check.lhs;
    j["rhs"] = check.rhs;
    j["margin"] = check.margin;
    j["pass"] = check.pass;
    j["context"] = check.context;
    return j;
}

} // namespace

std::string to_json(const VerifyReport& report) {
    ordered_json j;
    j["preset"] = report.preset;
    j["depth"] = report.depth;
    j["radius"] = report.radius;
    j["element_count"] = report.element_count;
    j["elliptic_point_count"] = report.elliptic_point_count;
    if (report.gap) {
        j["d_min"] = report.gap->d_min;
        ordered_json g;
        g["pair"] = {report.gap->pair[0], report.gap->pair[1]};
        g["orders"] = {report.gap->orders[0], report.gap->orders[1]};
        g["interior_certified"] = report.gap->interior_certified;
        g["margin_used"] = report.gap->margin_used;
        j["gap"] = g;
    } else {
        j["d_min"] = nullptr;
        j["gap"] = nullptr;
    }
    if (report.systole_estimate)
        j["systole_estimate"] = *report.systole_estimate;
    else
        j["systole_estimate"] = nullptr;
    j["systole_depth"] = report.systole_depth;
    j["systole_caveat"] = report.systole_caveat;
    j["checks"] = ordered_json::array();
    for (const BoundReport& check : report.checks) j["checks"].push_back(check_to_json(check));
    j["overall_pass"] = report.overall_pass;
    j["not_applicable"] = report.not_applicable;
    j["warnings"] = report.warnings;
    j["tolerances"] = report.tolerances;
    return j.dump(2) + "\n";
}

VerifyReport report_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    VerifyReport report;
    report.preset = j.at("preset").get<std::string>();
    report.depth = j.at("depth").get<int>();
    report.radius = j.at("radius").get<double>();
    report.element_count = j.at("element_count").get<std::size_t>();
    report.elliptic_point_count = j.at("elliptic_point_count").get<std::size_t>();
    if (!j.at("gap").is_null()) {
        GapResult gap;
        gap.d_min = j.at("d_min").get<double>();
        gap.pair = {j.at("gap").at("pair").at(0).get<std::size_t>(),
                    j.at("gap").at("pair").at(1).get<std::size_t>()};
        gap.orders = {j.at("gap").at("orders").at(0).get<int>(),
                      j.at("gap").at("orders").at(1).get<int>()};
        gap.interior_certified = j.at("gap").at("interior_certified").get<bool>();
        gap.margin_used = j.at("gap").at("margin_used").get<double>();
        report.gap = gap;
    }
    if (!j.at("systole_estimate").is_null())
        report.systole_estimate = j.at("systole_estimate").get<double>();
    report.systole_depth = j.at("systole_depth").get<int>();
    report.systole_caveat = j.at("systole_caveat").get<std::string>();
    for (const auto& jc : j.at("checks")) {
        BoundReport check;
        const auto claim = claim_from_string(jc.at("claim").get<std::string>());
        if (!claim) throw BadParameter("unknown claim in report");
        check.claim = *claim;
        check.lhs = jc.at("lhs").get<double>();
        check.rhs = jc.at("rhs").get<double>();
        check.margin = jc.at("margin").get<double>();
        check.pass = jc.at("pass").get<bool>();
        check.context = jc.at("context").get<std::string>();
        report.checks.push_back(check);
    }
    report.overall_pass = j.at("overall_pass").get<bool>();
    report.not_applicable = j.at("not_applicable").get<bool>();
    report.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& [key, value] : j.at("tolerances").items())
        report.tolerances[key] = value.get<double>();
    return report;
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string to_csv(const VerifyReport& report) {
    std::ostringstream out;
    out << "field,value\n";
    out << "preset," << report.preset << "\n";
    out << "depth," << report.depth << "\n";
    out << "radius," << fmt_double(report.radius) << "\n";
    out << "element_count," << report.element_count << "\n";
    out << "elliptic_point_count," << report.elliptic_point_count << "\n";
    out << "d_min," << (report.gap ? fmt_double(report.gap->d_min) : "") << "\n";
    if (report.gap) {
        out << "gap_pair," << report.gap->pair[0] << ";" << report.gap->pair[1] << "\n";
        out << "gap_orders," << report.gap->orders[0] << ";" << report.gap->orders[1] << "\n";
        out << "gap_interior_certified," << (report.gap->interior_certified ? "true" : "false")
            << "\n";
        out << "gap_margin_used," << fmt_double(report.gap->margin_used) << "\n";
    }
    out << "systole_estimate,"
        << (report.systole_estimate ? fmt_double(*report.systole_estimate) : "") << "\n";
    out << "systole_depth," << report.systole_depth << "\n";
    out << "systole_caveat," << csv_quote(report.systole_caveat) << "\n";
    out << "overall_pass," << (report.overall_pass ? "true" : "false") << "\n";
    out << "not_applicable," << (report.not_applicable ? "true" : "false") << "\n";
    for (const std::string& w : report.warnings) out << "warning," << csv_quote(w) << "\n";
    for (const auto& [key, value] : report.tolerances)
        out << "tolerance_" << key << "," << fmt_double(value) << "\n";
    out << "\n";
    out << "claim,lhs,rhs,margin,pass,context\n";
    for (const BoundReport& check : report.checks) {
        out << to_string(check.claim) << "," << fmt_double(check.lhs) << ","
            << fmt_double(check.rhs) << "," << fmt_double(check.margin) << ","
            << (check.pass ? "true" : "false") << "," << csv_quote(check.context) << "\n";
    }
    return out.str();
}

std::string to_text(const VerifyReport& report) {
    std::ostringstream out;
    out << "preset " << report.preset << " (depth " << report.depth << ", radius "
        << fmt_double(report.radius) << ")\n";
    out << "  elements enumerated: " << report.element_count << "\n";
    out << "  elliptic points in ball: " << report.elliptic_point_count << "\n";
    if (report.gap) {
        out << "  minimal elliptic gap d_min = " << fmt_double(report.gap->d_min) << " between #"
            << report.gap->pair[0] << " (order " << report.gap->orders[0] << ") and #"
            << report.gap->pair[1] << " (order " << report.gap->orders[1] << ")"
            << (report.gap->interior_certified ? " [interior certified]" : "") << "\n";
    } else {
        out << "  minimal elliptic gap: not applicable\n";
    }
    if (report.systole_estimate) {
        out << "  systole estimate = " << fmt_double(*report.systole_estimate) << " ("
            << report.systole_caveat << ")\n";
    } else {
        out << "  systole estimate: none\n";
    }
    for (const std::string& w : report.warnings) out << "  warning: " << w << "\n";
    for (const BoundReport& check : report.checks) {
        out << "  [" << (check.pass ? "PASS" : "FAIL") << "] " << to_string(check.claim)
            << ": lhs=" << fmt_double(check.lhs) << " rhs=" << fmt_double(check.rhs)
            << " margin=" << fmt_double(check.margin) << " (" << check.context << ")\n";
    }
    out << (report.overall_pass ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
    return out.str();
}

std::string serialize(const VerifyReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return to_json(report);
        case OutputFormat::Csv: return to_csv(report);
        case OutputFormat::Text: return to_text(report);
    }
    return {};
}

std::string classify_record(const GroupElement& g, OutputFormat format) {
    const ElementClass cls = classify(g);
    ordered_json j;
    j["entries"] = {g.a(), g.b(), g.c(), g.d()};
    j["trace"] = g.trace();
    switch (cls) {
        case ElementClass::Identity:
            j["class"] = "identity";
            break;
        case ElementClass::Elliptic: {
            j["class"] = "elliptic";
            const EllipticDatum d = elliptic_datum(g);
            j["fixed"] = {d.fixed.x, d.fixed.y};
            j["angle"] = d.angle;
            if (d.order)
                j["order"] = *d.order;
            else
                j["order"] = nullptr;
            break;
        }
        case ElementClass::Parabolic: {
            j["class"] = "parabolic";
            j["boundary_fixed"] = json_boundary_value(
                g.c() != 0.0 ? (g.a() - g.d()) / (2.0 * g.c())
                             : std::numeric_limits<double>::infinity());
            break;
        }
        case ElementClass::Hyperbolic: {
            j["class"] = "hyperbolic";
            const AxisEndpoints ax = axis(g);
            j["axis"] = {json_boundary_value(ax.attracting), json_boundary_value(ax.repelling)};
            j["translation_length"] = translation_length(g);
            break;
        }
    }
    if (format == OutputFormat::Json) return j.dump(2) + "\n";
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "field,value\n";
        for (const auto& [key, value] : j.items()) {
            out << key << ",";
            if (value.is_string())
                out << value.get<std::string>();
            else
                out << value.dump();
            out << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    out << "class: " << j["class"].get<std::string>() << "\n";
    out << "trace: " << fmt_double(g.trace()) << "\n";
    if (cls == ElementClass::Elliptic) {
        out << "fixed point: (" << fmt_double(j["fixed"][0].get<double>()) << ", "
            << fmt_double(j["fixed"][1].get<double>()) << ")\n";
        out << "angle: " << fmt_double(j["angle"].get<double>()) << "\n";
        out << "order: " << (j["order"].is_null() ? std::string("non-finite within tolerance")
                                                  : j["order"].dump())
            << "\n";
    } else if (cls == ElementClass::Hyperbolic) {
        out << "axis: (" << j["axis"][0].dump() << ", " << j["axis"][1].dump() << ")\n";
        out << "translation length: " << fmt_double(j["translation_length"].get<double>())
            << "\n";
    } else if (cls == ElementClass::Parabolic) {
        out << "boundary fixed point: " << j["boundary_fixed"].dump() << "\n";
    }
    return out.str();
}

} // namespace fgap
