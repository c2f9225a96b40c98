#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fgap {

// Every data-parallel kernel comes in a Serial reference flavor and an
// OpenMP flavor. Reductions use strict total orders (value, index...) so the
// two produce bit-identical results; tests hold them to that.
enum class ExecPolicy { Serial, Parallel };

// fn(i) must touch only state owned by slot i.
template <typename Fn>
void parallel_for_index(std::size_t n, ExecPolicy pol, Fn&& fn) {
#ifdef _OPENMP
    if (pol == ExecPolicy::Parallel) {
        const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)pol;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

// Best grid cell of f over [x_lo, x_hi] x [ly_lo, ly_hi], nx-by-ny samples
// inclusive of both edges; ties broken by (x, log_y).
struct GridBest {
    double value;
    double x;
    double log_y;

    bool operator<(const GridBest& o) const {
        if (value != o.value) return value < o.value;
        if (x != o.x) return x < o.x;
        return log_y < o.log_y;
    }
};

template <typename F>
GridBest grid_min_scan(F&& f, double x_lo, double x_hi, double ly_lo, double ly_hi, int nx,
                       int ny, ExecPolicy pol) {
    const double dx = nx > 1 ? (x_hi - x_lo) / (nx - 1) : 0.0;
    const double dly = ny > 1 ? (ly_hi - ly_lo) / (ny - 1) : 0.0;
    const std::size_t total = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    auto eval_cell = [&](std::size_t k) {
        const int i = static_cast<int>(k) / ny;
        const int j = static_cast<int>(k) % ny;
        const double x = x_lo + i * dx;
        const double ly = ly_lo + j * dly;
        return GridBest{f(x, ly), x, ly};
    };
    GridBest best = eval_cell(0);
#ifdef _OPENMP
    if (pol == ExecPolicy::Parallel) {
        const auto count = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel
        {
            // local state must not read `best`: another thread may already be
            // inside the critical section writing it
            GridBest local = eval_cell(0);
#pragma omp for schedule(static) nowait
            for (std::ptrdiff_t k = 1; k < count; ++k) {
                const GridBest cand = eval_cell(static_cast<std::size_t>(k));
                if (cand < local) local = cand;
            }
#pragma omp critical(fgap_grid_min)
            if (local < best) best = local;
        }
        return best;
    }
#else
    (void)pol;
#endif
    for (std::size_t k = 1; k < total; ++k) {
        const GridBest cand = eval_cell(k);
        if (cand < best) best = cand;
    }
    return best;
}

// Minimum of dist(i, j) over eligible index pairs i < j; ties broken by (i, j).
struct PairBest {
    double d;
    std::size_t i;
    std::size_t j;

    bool operator<(const PairBest& o) const {
        if (d != o.d) return d < o.d;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

template <typename Dist>
PairBest min_pair_scan(const std::vector<std::size_t>& indices, Dist&& dist, ExecPolicy pol) {
    const std::size_t n = indices.size();
    const PairBest sentinel{std::numeric_limits<double>::infinity(), 0, 0};
    auto row_best = [&](std::size_t a) {
        PairBest rb = sentinel;
        for (std::size_t b = a + 1; b < n; ++b) {
            const PairBest cand{dist(indices[a], indices[b]), indices[a], indices[b]};
            if (cand < rb) rb = cand;
        }
        return rb;
    };
    PairBest best{dist(indices[0], indices[1]), indices[0], indices[1]};
#ifdef _OPENMP
    if (pol == ExecPolicy::Parallel) {
        const auto rows = static_cast<std::ptrdiff_t>(n - 1);
#pragma omp parallel
        {
            PairBest local = sentinel;
#pragma omp for schedule(dynamic, 8) nowait
            for (std::ptrdiff_t a = 0; a < rows; ++a) {
                const PairBest cand = row_best(static_cast<std::size_t>(a));
                if (cand < local) local = cand;
            }
#pragma omp critical(fgap_pair_min)
            if (local < best) best = local;
        }
        return best;
    }
#else
    (void)pol;
#endif
    for (std::size_t a = 0; a + 1 < n; ++a) {
        const PairBest cand = row_best(a);
        if (cand < best) best = cand;
    }
    return best;
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace fgap
