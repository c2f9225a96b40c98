#include "fgap/report.hpp"
#include "fgap/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

fgap::OutputFormat parse_format(const std::string& name) {
    if (name == "json") return fgap::OutputFormat::Json;
    if (name == "csv") return fgap::OutputFormat::Csv;
    return fgap::OutputFormat::Text;
}

void add_common(CLI::App* cmd, fgap::RunConfig& cfg, std::string& format,
                std::vector<std::string>& tol_args) {
    cmd->add_option("preset", cfg.preset, "modular | hecke:q | triangle:p,q,r")->required();
    cmd->add_option("--depth", cfg.max_word_length, "maximum word length")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--radius", cfg.ball_radius, "ball radius around the basepoint (0,1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--tol", tol_args,
                    "tolerance override as name=value, e.g. --tol point_dedup_tol=1e-6");
}

void apply_tol_overrides(const std::vector<std::string>& tol_args, fgap::RunConfig& cfg) {
    for (const std::string& arg : tol_args) {
        const std::size_t eq = arg.find('=');
        if (eq == std::string::npos || eq == 0)
            throw fgap::BadParameter("tolerance override must look like name=value: '" + arg +
                                     "'");
        try {
            cfg.tolerance_overrides[arg.substr(0, eq)] = std::stod(arg.substr(eq + 1));
        } catch (const std::exception&) {
            throw fgap::BadParameter("bad tolerance value in '" + arg + "'");
        }
    }
}

int run_verify_cmd(const fgap::RunConfig& cfg) {
    const fgap::VerifyReport report = fgap::run_verify(cfg);
    std::cout << fgap::serialize(report, cfg.format);
    if (!cfg.svg_path.empty()) {
        const fgap::EllipticPointSet eps = fgap::harvest_points(cfg);
        fgap::write_svg_file(cfg.svg_path, fgap::render_svg(eps, report.gap));
    }
    return fgap::exit_code(report);
}

void emit_record(const nlohmann::ordered_json& j, fgap::OutputFormat format) {
    if (format == fgap::OutputFormat::Json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items()) {
        const char sep = format == fgap::OutputFormat::Csv ? ',' : ' ';
        std::cout << key << sep
                  << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

int run_gap_cmd(const fgap::RunConfig& cfg) {
    const fgap::GroupPreset preset = fgap::parse_preset(cfg.preset);
    fgap::EnumConfig ec;
    ec.max_word_length = cfg.max_word_length;
    ec.ball_radius = cfg.ball_radius;
    const auto elements = fgap::enumerate_elements(preset, ec);
    const fgap::EllipticPointSet eps = fgap::elliptic_fixed_points(elements, ec);
    nlohmann::ordered_json j;
    j["preset"] = preset.name;
    j["depth"] = cfg.max_word_length;
    j["radius"] = cfg.ball_radius;
    j["elliptic_point_count"] = eps.points.size();
    try {
        const fgap::GapResult gap = fgap::min_elliptic_gap(eps);
        j["d_min"] = gap.d_min;
        j["pair"] = {gap.pair[0], gap.pair[1]};
        j["orders"] = {gap.orders[0], gap.orders[1]};
        j["interior_certified"] = gap.interior_certified;
    } catch (const fgap::InsufficientPoints&) {
        j["d_min"] = nullptr;
        j["warning"] = "insufficient elliptic points; gap not applicable";
    }
    emit_record(j, cfg.format);
    return 0;
}

int run_systole_cmd(const fgap::RunConfig& cfg) {
    const fgap::GroupPreset preset = fgap::parse_preset(cfg.preset);
    fgap::EnumConfig ec;
    ec.max_word_length = cfg.max_word_length;
    ec.ball_radius = cfg.ball_radius;
    const auto elements = fgap::enumerate_elements(preset, ec);
    nlohmann::ordered_json j;
    j["preset"] = preset.name;
    j["systole_depth"] = cfg.max_word_length;
    try {
        j["systole_estimate"] = fgap::systole_estimate(elements);
        j["caveat"] = "upper-bound estimate at word length <= " +
                      std::to_string(cfg.max_word_length);
    } catch (const fgap::NoHyperbolicElements&) {
        j["systole_estimate"] = nullptr;
        j["warning"] = "no hyperbolic element enumerated";
    }
    emit_record(j, cfg.format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fgap: elliptic fixed-point gap checks for Fuchsian group presets"};
    app.require_subcommand(1);

    // classify a b c d
    std::vector<double> entries;
    std::string classify_format = "text";
    CLI::App* classify = app.add_subcommand("classify", "classify one matrix");
    classify->add_option("entries", entries, "matrix entries a b c d")
        ->expected(4)
        ->required();
    classify->add_option("--format", classify_format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    fgap::RunConfig verify_cfg;
    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand("verify", "run every applicable bound check");
    add_common(verify, verify_cfg, verify_format);
    verify->add_option("--svg", verify_cfg.svg_path, "write a disk-model figure to this path");

    fgap::RunConfig gap_cfg;
    std::string gap_format = "text";
    CLI::App* gap = app.add_subcommand("gap", "minimal elliptic gap only");
    add_common(gap, gap_cfg, gap_format);

    fgap::RunConfig systole_cfg;
    std::string systole_format = "text";
    CLI::App* systole = app.add_subcommand("systole", "systole estimate only");
    add_common(systole, systole_cfg, systole_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) {
            const fgap::GroupElement g(entries[0], entries[1], entries[2], entries[3]);
            std::cout << fgap::classify_record(g, parse_format(classify_format));
            return 0;
        }
        if (verify->parsed()) {
            verify_cfg.format = parse_format(verify_format);
            return run_verify_cmd(verify_cfg);
        }
        if (gap->parsed()) {
            gap_cfg.format = parse_format(gap_format);
            return run_gap_cmd(gap_cfg);
        }
        if (systole->parsed()) {
            systole_cfg.format = parse_format(systole_format);
            return run_systole_cmd(systole_cfg);
        }
    } catch (const fgap::BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fgap::NonPositiveDeterminant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fgap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
