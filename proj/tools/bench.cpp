// Compares the OpenMP kernels against their serial reference on the hot
// loops: pairwise gap scan, min-max grid scan, enumeration, full optimizer.
// Exits nonzero if any parallel result differs from the serial one.

#include "fgap/bounds.hpp"
#include "fgap/kernels.hpp"
#include "fgap/metric.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace {

using fgap::ExecPolicy;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct Row {
    const char* name;
    double serial_ms;
    double parallel_ms;
    bool equal;
};

template <typename Fn>
double timed(Fn&& fn) {
    const double t0 = now_ms();
    fn();
    return now_ms() - t0;
}

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--quick") quick = true;

    std::printf("threads available: %d\n\n", fgap::max_threads());
    std::vector<Row> rows;

    {
        const std::size_t n = quick ? 600 : 4000;
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(-1.5, 1.5);
        std::vector<fgap::UhpPoint> pts;
        pts.reserve(n);
        for (std::size_t i = 0; i < n; ++i) pts.emplace_back(ux(rng), std::exp(uy(rng)));
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        auto dist = [&](std::size_t i, std::size_t j) {
            return fgap::distance(pts[i], pts[j]);
        };
        fgap::PairBest s{}, p{};
        const double ts = timed([&] { s = fgap::min_pair_scan(idx, dist, ExecPolicy::Serial); });
        const double tp = timed([&] { p = fgap::min_pair_scan(idx, dist, ExecPolicy::Parallel); });
        rows.push_back({"pair gap scan", ts, tp, s.d == p.d && s.i == p.i && s.j == p.j});
    }

    {
        const fgap::GroupPreset preset = fgap::modular_group();
        const fgap::GroupElement g = preset.elliptic_witnesses[0];
        const fgap::GroupElement h = preset.elliptic_witnesses[1];
        auto f = [&](double x, double ly) {
            const fgap::UhpPoint z(x, std::exp(ly));
            return std::max(fgap::half_displacement(g, z), fgap::half_displacement(h, z));
        };
        const int n = quick ? 400 : 1600;
        fgap::GridBest s{}, p{};
        const double ts = timed([&] {
            s = fgap::grid_min_scan(f, -2.0, 2.0, -2.0, 2.0, n, n, ExecPolicy::Serial);
        });
        const double tp = timed([&] {
            p = fgap::grid_min_scan(f, -2.0, 2.0, -2.0, 2.0, n, n, ExecPolicy::Parallel);
        });
        rows.push_back(
            {"min-max grid scan", ts, tp, s.value == p.value && s.x == p.x && s.log_y == p.log_y});
    }

    {
        const fgap::GroupPreset preset = fgap::modular_group();
        fgap::EnumConfig cfg;
        cfg.max_word_length = quick ? 10 : 14;
        cfg.ball_radius = 3.0;
        std::vector<fgap::GroupElement> s, p;
        const double ts =
            timed([&] { s = fgap::enumerate_elements(preset, cfg, ExecPolicy::Serial); });
        const double tp =
            timed([&] { p = fgap::enumerate_elements(preset, cfg, ExecPolicy::Parallel); });
        bool equal = s.size() == p.size();
        for (std::size_t i = 0; equal && i < s.size(); ++i)
            equal = s[i].entries() == p[i].entries();
        rows.push_back({"word enumeration", ts, tp, equal});
    }

    {
        const fgap::GroupPreset preset = fgap::triangle_group(2, 3, 7);
        const fgap::GroupElement& y = preset.elliptic_witnesses[1];
        const fgap::GroupElement& z = preset.elliptic_witnesses[2];
        fgap::MinMaxResult s{}, p{};
        const double ts = timed([&] { s = fgap::minimize_minmax(y, z, ExecPolicy::Serial); });
        const double tp = timed([&] { p = fgap::minimize_minmax(y, z, ExecPolicy::Parallel); });
        rows.push_back({"min-max optimizer", ts, tp,
                        s.value == p.value && s.argmin.x == p.argmin.x &&
                            s.argmin.y == p.argmin.y});
    }

    std::printf("%-20s %12s %12s %9s %s\n", "kernel", "serial ms", "parallel ms", "speedup",
                "equal");
    bool all_equal = true;
    for (const Row& row : rows) {
        std::printf("%-20s %12.2f %12.2f %8.2fx %s\n", row.name, row.serial_ms, row.parallel_ms,
                    row.parallel_ms > 0 ? row.serial_ms / row.parallel_ms : 0.0,
                    row.equal ? "yes" : "NO");
        all_equal = all_equal && row.equal;
    }
    return all_equal ? 0 : 1;
}
