#ifndef POLYENT_GRID_HPP
#define POLYENT_GRID_HPP

#include <cstddef>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "polyent/synergy.hpp"

namespace polyent {

// Evenly spaced (q, r) grid, inclusive of both endpoints. A single step
// collapses an axis to its minimum. Points near q = r are handled by the
// entropy limit branch, so the grid never produces NaN for positive q, r.
template <typename Scalar = double>
struct SweepGrid {
    Scalar q_min, q_max;
    std::size_t q_steps;
    Scalar r_min, r_max;
    std::size_t r_steps;

    SweepGrid(Scalar qmin, Scalar qmax, std::size_t qsteps, Scalar rmin, Scalar rmax,
              std::size_t rsteps)
        : q_min(qmin), q_max(qmax), q_steps(qsteps),
          r_min(rmin), r_max(rmax), r_steps(rsteps) {
        if (q_steps < 1 || r_steps < 1) throw Error("grid needs at least one step per axis");
        if (!(q_min > 0) || !(r_min > 0))
            throw NonPositiveExponent("grid parameters must stay positive");
    }

    /// Row-major (q outer, r inner) list of grid points.
    std::vector<std::pair<Scalar, Scalar>> points() const {
        std::vector<std::pair<Scalar, Scalar>> pts;
        pts.reserve(q_steps * r_steps);
        for (std::size_t a = 0; a < q_steps; ++a)
            for (std::size_t b = 0; b < r_steps; ++b)
                pts.emplace_back(coord(q_min, q_max, q_steps, a),
                                 coord(r_min, r_max, r_steps, b));
        return pts;
    }

private:
    static Scalar coord(Scalar lo, Scalar hi, std::size_t steps, std::size_t idx) {
        if (steps == 1) return lo;
        return lo + (hi - lo) * Scalar(idx) / Scalar(steps - 1);
    }
};

template <typename Scalar = double>
struct SweepRow {
    Scalar q, r, synergy;
    SynergyClass classification;
};

// Evaluates polyadic synergy over the whole grid. Work fans out across
// `threads`; rows land in preassigned slots, so the output order is the
// row-major grid order regardless of the thread count.
template <typename Scalar>
std::vector<SweepRow<Scalar>> sweep_synergy(const FactoredSystem<Scalar>& system,
                                            const SweepGrid<Scalar>& grid,
                                            std::size_t threads = 1) {
    const auto points = grid.points();
    std::vector<SweepRow<Scalar>> rows(points.size());
    if (threads < 1) threads = 1;

    auto worker = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < points.size(); i += stride) {
            const auto [q, r] = points[i];
            const auto report = polyadic_synergy(system, EntropyParams<Scalar>{q, r});
            rows[i] = {q, r, report.value, report.classification};
        }
    };

    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
        for (auto& th : pool) th.join();
    }
    return rows;
}

}  // namespace polyent

#endif  // POLYENT_GRID_HPP
