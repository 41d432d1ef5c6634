// Compares the serial reference path against the OpenMP path on the two
// workloads that dominate real use: a two-axis protocol sweep and a random
// violation search. Also checks the outputs match exactly.

#include <cstdio>
#include <sstream>
#include <string>

#include <omp.h>

#include "entdist/sweep.hpp"

using namespace entdist;

namespace {

template <typename F> double timed(F&& f) {
    double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

} // namespace

int main(int argc, char** argv) {
    omp_set_num_threads(effective_threads());
    int scale = argc > 1 ? std::stoi(argv[1]) : 1;

    SweepGrid grid;
    grid.axes = {{"s", 0.0, 1.0, 0.02 / scale}, {"delta", 0.0, 1.0, 0.02 / scale}};
    grid.fixed["p"] = 0.34;
    grid.channel_spec = "depolarizing";

    SweepResult serial_result, parallel_result;
    double t_serial = timed([&] { serial_result = sweep(grid, Scenario::Indirect, ExecPolicy::Serial); });
    double t_parallel =
        timed([&] { parallel_result = sweep(grid, Scenario::Indirect, ExecPolicy::Parallel); });

    std::ostringstream a, b;
    write_sweep_csv(a, serial_result);
    write_sweep_csv(b, parallel_result);
    bool same = a.str() == b.str();

    std::printf("sweep %zu points:   serial %.3fs  openmp %.3fs  speedup %.2fx  identical: %s\n",
                serial_result.rows.size(), t_serial, t_parallel, t_serial / t_parallel,
                same ? "yes" : "NO");

    int trials = 4000 * scale;
    std::vector<PureState> ws, wp;
    double s_serial = timed([&] {
        ws = search_violation(3, trials, 7, ResidualKind::Theorem1, Ensemble::Complex,
                              ExecPolicy::Serial);
    });
    double s_parallel = timed([&] {
        wp = search_violation(3, trials, 7, ResidualKind::Theorem1, Ensemble::Complex,
                              ExecPolicy::Parallel);
    });
    bool same_search = ws.size() == wp.size();
    for (std::size_t i = 0; same_search && i < ws.size(); ++i)
        same_search = approx_equal(ws[i].amplitudes, wp[i].amplitudes, 0.0);

    std::printf("search %d trials: serial %.3fs  openmp %.3fs  speedup %.2fx  identical: %s\n",
                trials, s_serial, s_parallel, s_serial / s_parallel, same_search ? "yes" : "NO");

    return same && same_search ? 0 : 1;
}
