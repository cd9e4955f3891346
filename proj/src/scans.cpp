#include "eitprop/scans.hpp"

#include <cmath>

namespace eitprop {

namespace {

// response at one sweep point; self-consistent mode re-solves the Bloch
// steady state at the loss implied by gamma1
MediumResponse response_at_gamma1(const AtomParams& atom,
                                  const DriveParams& drive,
                                  const Populations& pinned_pops,
                                  double gamma1, SweepMode mode,
                                  const RepumpFactors& repumps) {
    if (mode == SweepMode::pinned) {
        MediumResponse resp = make_response(atom, drive, pinned_pops);
        resp.gamma1 = gamma1;
        return resp;
    }
    const double loss = std::max(0.0, 2.0 * gamma1 - atom.gamma_1out);
    DriveParams d = drive_at_loss(drive, atom, loss, repumps);
    d.omega_probe = 0.0;
    const DensityMatrix4 rho = steady_state(build_generator(atom, d, 0.0));
    return make_response(atom, d, populations_of(rho));
}

}  // namespace

std::vector<GainRow> gain_vs_dephasing(const AtomParams& atom,
                                       const DriveParams& drive,
                                       const Populations& pinned_pops,
                                       const std::vector<double>& gamma1_grid,
                                       SweepMode mode,
                                       const RepumpFactors& repumps,
                                       Execution exec) {
    const double g3 = 0.5 * (atom.gamma_31 + atom.gamma_32);
    std::vector<GainRow> rows(gamma1_grid.size());
    const bool par = exec == Execution::parallel;
    const int n = static_cast<int>(gamma1_grid.size());
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < n; ++i) {
        GainRow row;
        row.gamma1_over_gamma3 = gamma1_grid[i] / g3;
        try {
            const MediumResponse resp = response_at_gamma1(
                atom, drive, pinned_pops, gamma1_grid[i], mode, repumps);
            row.gain_percent = resp.centerline_gain_percent();
        } catch (const DegenerateSteadyState&) {
            row.valid = false;
        }
        rows[i] = row;
    }
    return rows;
}

std::vector<DelayAdvanceRow> delay_advance_vs_dephasing(
    const AtomParams& atom, const DriveParams& drive,
    const Populations& pinned_pops, const std::vector<double>& gamma1_grid,
    SweepMode mode, const GaussianPulse& pulse, const RepumpFactors& repumps,
    Execution exec) {
    const double g3 = 0.5 * (atom.gamma_31 + atom.gamma_32);
    std::vector<DelayAdvanceRow> rows(gamma1_grid.size());
    const bool par = exec == Execution::parallel;
    const int n = static_cast<int>(gamma1_grid.size());
#pragma omp parallel for schedule(dynamic) if (par)
    for (int i = 0; i < n; ++i) {
        DelayAdvanceRow row;
        row.gamma1_over_gamma3 = gamma1_grid[i] / g3;
        try {
            const MediumResponse resp = response_at_gamma1(
                atom, drive, pinned_pops, gamma1_grid[i], mode, repumps);
            GaussianPulse p = pulse;
            p.carrier_detuning = 0.0;
            row.delay_m = propagate(p, resp, Execution::serial).delay_m;
            const AnomalousPoint pt =
                find_anomalous_carrier(resp, 0.02 * g3, 3.0 * g3);
            if (pt.has_anomalous) {
                p.carrier_detuning = pt.delta;
                row.advance_m =
                    propagate(p, resp, Execution::serial).delay_m;
            } else {
                row.anomalous_present = false;
                row.advance_m = std::nan("");
            }
        } catch (const DegenerateSteadyState&) {
            row.valid = false;
        }
        rows[i] = row;
    }
    return rows;
}

double calibrate_density(double target_delay_m, const AtomParams& atom,
                         const DriveParams& drive,
                         const GaussianPulse& pulse) {
    if (target_delay_m < 0)
        throw CalibrationError("calibration target must be >= 0");
    if (target_delay_m == 0) return 0.0;

    DriveParams eit = drive;
    eit.loss_1 = 0.0;  // pure-EIT anchor: all population in |1>
    const Populations all_in_1{1.0, 0.0, 0.0};

    auto delay_at = [&](double np) {
        AtomParams a = atom;
        a.scaled_density = np;
        GaussianPulse p = pulse;
        p.carrier_detuning = 0.0;
        return propagate(p, make_response(a, eit, all_in_1)).delay_m;
    };

    // delay is monotone (nearly linear) in the density; bracket then bisect
    double hi = 1e-7;
    double f_hi;
    try {
        f_hi = delay_at(hi);
        int grow = 0;
        while (f_hi < target_delay_m) {
            hi *= 2.0;
            if (++grow > 60 || hi > 1e-2)
                throw CalibrationError("calibration target not reachable");
            f_hi = delay_at(hi);
        }
    } catch (const WindowError&) {
        // the required delay no longer fits the pulse window
        throw CalibrationError("calibration target not reachable");
    }
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = delay_at(mid);
        if (std::abs(f - target_delay_m) < 1e-9 || (hi - lo) < 1e-12 * hi)
            return mid;
        if (f < target_delay_m)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace eitprop
