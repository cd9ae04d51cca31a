// Copyright 2026 The pcest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcest/sweep.h"

#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace pcest {

namespace {

template <typename CellFn>
void for_each_cell(std::size_t cells, Execution exec, CellFn &&fn) {
    const auto n = static_cast<std::int64_t>(cells);
    if (exec == Execution::Parallel) {
        // Exceptions may not leave an OpenMP region; keep the first and rethrow.
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(pcest_cell_failure)
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            fn(static_cast<std::size_t>(i));
        }
    }
}

}  // namespace

void set_worker_count(int workers) {
    if (workers > 0) {
        omp_set_num_threads(workers);
    }
}

int worker_count() {
    return omp_get_max_threads();
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1) {
        throw std::invalid_argument("steps must be at least 1");
    }
    if (!(lo <= hi)) {
        throw std::invalid_argument("range minimum exceeds maximum");
    }
    std::vector<double> out(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / steps;
    }
    out.back() = hi;
    return out;
}

std::vector<GainCell> gain_sweep(std::span<const double> fidelities, std::span<const double> ps,
                                 std::int64_t resources, Execution exec) {
    std::vector<GainCell> out(fidelities.size() * ps.size());
    for_each_cell(out.size(), exec, [&](std::size_t c) {
        double f = fidelities[c / ps.size()];
        double p = ps[c % ps.size()];
        out[c] = GainCell{f, p, gain(resources, f, PauliParams({p, p, p}))};
    });
    return out;
}

std::vector<ResourceCell> resource_sweep(std::span<const double> fidelities, std::span<const double> ps,
                                         double target_error, Execution exec) {
    if (!(target_error > 0.0)) {
        throw std::invalid_argument("target error must be positive");
    }
    std::vector<ResourceCell> out(fidelities.size() * ps.size());
    for_each_cell(out.size(), exec, [&](std::size_t c) {
        double f = fidelities[c / ps.size()];
        double p = ps[c % ps.size()];
        double value;
        if (p == 0.0) {
            value = std::numeric_limits<double>::quiet_NaN();
        } else if (4.0 * f - 1.0 == 0.0) {
            value = -std::numeric_limits<double>::infinity();
        } else {
            value = delta_R(f, PauliParams({p, p, p}), target_error);
        }
        out[c] = ResourceCell{f, p, value};
    });
    return out;
}

std::vector<BellDiagCell> belldiag_sweep(double alpha1, double step, double shots, Execution exec) {
    if (!(alpha1 >= 0.0 && alpha1 <= 1.0)) {
        throw std::invalid_argument("alpha1 must lie in [0, 1]");
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("grid step must be positive");
    }
    const double rest = 1.0 - alpha1;
    const int n = static_cast<int>(std::floor(rest / step + 1e-9));
    // Enumerate the triangle i + j <= n up front so cell order is fixed.
    std::vector<std::array<double, 4>> grid;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            double a2 = i * step;
            double a3 = j * step;
            double a4 = rest - a2 - a3;
            if (a4 < 0.0) {
                if (a4 < -1e-12) {
                    continue;
                }
                a4 = 0.0;
            }
            grid.push_back({alpha1, a2, a3, a4});
        }
    }
    std::vector<BellDiagCell> out(grid.size());
    for_each_cell(grid.size(), exec, [&](std::size_t c) {
        double value = std::numeric_limits<double>::quiet_NaN();
        BellDiagonal state(grid[c]);
        try {
            value = mean_error_simplex(state, shots);
        } catch (const NonIdentifiable &) {
        }
        out[c] = BellDiagCell{grid[c], value};
    });
    return out;
}

const BellDiagCell *belldiag_argmin(const std::vector<BellDiagCell> &cells) {
    const BellDiagCell *best = nullptr;
    for (const auto &cell : cells) {
        if (std::isfinite(cell.mean_error) && (best == nullptr || cell.mean_error < best->mean_error)) {
            best = &cell;
        }
    }
    return best;
}

GridExtreme min_gain_on_simplex(double fidelity, int steps, std::int64_t resources, Execution exec) {
    if (steps < 1) {
        throw std::invalid_argument("steps must be at least 1");
    }
    // One row per i; reduce rows serially so ties resolve identically.
    std::vector<GridExtreme> rows(static_cast<std::size_t>(steps) + 1,
                                  GridExtreme{std::numeric_limits<double>::infinity(), PauliParams(), 0});
    for_each_cell(rows.size(), exec, [&](std::size_t i) {
        GridExtreme &row = rows[i];
        for (int j = 0; static_cast<int>(i) + j <= steps; ++j) {
            for (int k = 0; static_cast<int>(i) + j + k <= steps; ++k) {
                PauliParams p({static_cast<double>(i) / steps, static_cast<double>(j) / steps,
                               static_cast<double>(k) / steps});
                double g = gain(resources, fidelity, p);
                ++row.cells;
                if (g < row.value) {
                    row.value = g;
                    row.at = p;
                }
            }
        }
    });
    GridExtreme best{std::numeric_limits<double>::infinity(), PauliParams(), 0};
    for (const auto &row : rows) {
        best.cells += row.cells;
        if (row.value < best.value) {
            best.value = row.value;
            best.at = row.at;
        }
    }
    return best;
}

}  // namespace pcest
