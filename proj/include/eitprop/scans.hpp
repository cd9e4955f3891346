#ifndef EITPROP_SCANS_HPP
#define EITPROP_SCANS_HPP

#include <string>
#include <vector>

#include "eitprop/bloch.hpp"
#include "eitprop/pulse.hpp"
#include "eitprop/response.hpp"

namespace eitprop {

// pinned: gamma1 swept directly, populations held fixed.
// self_consistent: loss swept (gamma1 = (Gamma12+loss)/2), populations from
// the Bloch steady state at each point.
enum class SweepMode { pinned, self_consistent };

struct GainRow {
    double gamma1_over_gamma3 = 0.0;
    double gain_percent = 0.0;
    bool valid = true;
};

std::vector<GainRow> gain_vs_dephasing(
    const AtomParams& atom, const DriveParams& drive,
    const Populations& pinned_pops, const std::vector<double>& gamma1_grid,
    SweepMode mode, const RepumpFactors& repumps = {},
    Execution exec = Execution::parallel);

struct DelayAdvanceRow {
    double gamma1_over_gamma3 = 0.0;
    double delay_m = 0.0;          // resonant carrier
    double advance_m = 0.0;        // carrier at the 1/v_g negative minimum
    bool anomalous_present = true; // extremum can vanish at large dephasing
    bool valid = true;
};

std::vector<DelayAdvanceRow> delay_advance_vs_dephasing(
    const AtomParams& atom, const DriveParams& drive,
    const Populations& pinned_pops, const std::vector<double>& gamma1_grid,
    SweepMode mode, const GaussianPulse& pulse = {},
    const RepumpFactors& repumps = {}, Execution exec = Execution::parallel);

// Scalar root solve for the scaled density N_p reproducing a resonant
// pure-EIT pulse delay. Throws CalibrationError if the target is not
// bracketed. The delay is monotone (essentially linear) in N_p.
double calibrate_density(double target_delay_m, const AtomParams& atom,
                         const DriveParams& drive,
                         const GaussianPulse& pulse = {});

}  // namespace eitprop

#endif
