// Timing comparison of the OpenMP kernels against the serial reference.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "eitprop/bloch.hpp"
#include "eitprop/response.hpp"
#include "eitprop/scans.hpp"

namespace ep = eitprop;

namespace {

ep::AtomParams make_atom() {
    ep::AtomParams atom;
    atom.gamma_31 = atom.gamma_32 = ep::two_pi * 5.75e6;
    atom.gamma_1out = ep::two_pi * 1e3;
    atom.gamma_3out = 100.0 * atom.gamma3();
    atom.lambda_p = 794.979e-9;
    atom.cell_length = 0.1;
    atom.scaled_density = 2.084303254328e-07;
    return atom;
}

template <typename F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(
            best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
    const ep::AtomParams atom = make_atom();
    const double g3 = atom.gamma3();

    ep::DriveParams drive;
    drive.omega_pump = 1.1313708498984762 * g3;
    drive.loss_1 = 0.2 * g3;
    drive.repump_1 = 0.8206289 * (atom.gamma_1out + drive.loss_1);
    drive.repump_2 = 1.75 * (atom.gamma_1out + drive.loss_1);

    const ep::MediumResponse resp =
        ep::make_response(atom, drive, {0.7, 0.3, 0.0});

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial (ms)",
                "parallel(ms)", "speedup");

    {
        const ep::FrequencyGrid grid(-3 * g3, 3 * g3, 400000,
                                     atom.omega31());
        const double ts = time_ms(
            [&] { ep::sample_gt(resp, grid, ep::Execution::serial); });
        const double tp = time_ms(
            [&] { ep::sample_gt(resp, grid, ep::Execution::parallel); });
        std::printf("%-28s %12.2f %12.2f %8.2f\n",
                    "transmission spectrum 400k", ts, tp, ts / tp);
    }
    {
        const ep::FrequencyGrid grid(-3 * g3, 3 * g3, 400000,
                                     atom.omega31());
        const double ts = time_ms(
            [&] { ep::sample_dispersion(resp, grid, ep::Execution::serial); });
        const double tp = time_ms([&] {
            ep::sample_dispersion(resp, grid, ep::Execution::parallel);
        });
        std::printf("%-28s %12.2f %12.2f %8.2f\n", "dispersion spectrum 400k",
                    ts, tp, ts / tp);
    }
    {
        std::vector<double> losses(2000);
        for (size_t i = 0; i < losses.size(); ++i)
            losses[i] = 0.5 * g3 * double(i) / (losses.size() - 1);
        const ep::RepumpFactors rf{0.8206289, 1.75};
        const double ts = time_ms([&] {
            ep::population_scan(atom, drive, rf, losses,
                                ep::Execution::serial);
        });
        const double tp = time_ms([&] {
            ep::population_scan(atom, drive, rf, losses,
                                ep::Execution::parallel);
        });
        std::printf("%-28s %12.2f %12.2f %8.2f\n", "population scan 2000",
                    ts, tp, ts / tp);
    }
    {
        std::vector<double> g1(48);
        for (size_t i = 0; i < g1.size(); ++i)
            g1[i] = 0.5 * atom.gamma_1out +
                    (0.3 * g3) * double(i) / (g1.size() - 1);
        const ep::RepumpFactors rf{0.8206289, 1.75};
        const double ts = time_ms(
            [&] {
                ep::delay_advance_vs_dephasing(atom, drive, {1.0, 0.0, 0.0},
                                               g1, ep::SweepMode::pinned, {},
                                               rf, ep::Execution::serial);
            },
            1);
        const double tp = time_ms(
            [&] {
                ep::delay_advance_vs_dephasing(atom, drive, {1.0, 0.0, 0.0},
                                               g1, ep::SweepMode::pinned, {},
                                               rf, ep::Execution::parallel);
            },
            1);
        std::printf("%-28s %12.2f %12.2f %8.2f\n", "delay/advance sweep 48",
                    ts, tp, ts / tp);
    }
    return 0;
}
