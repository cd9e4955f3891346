#ifndef EITPROP_PULSE_HPP
#define EITPROP_PULSE_HPP

#include <vector>

#include "eitprop/response.hpp"

namespace eitprop {

// Gaussian probe pulse, |E(t)|^2 = exp(-t^2/tau^2).
struct GaussianPulse {
    double carrier_detuning = 0.0;  // delta_c = omega_31 - omega_c, rad/s
    double tau = 333e-9;            // temporal 1/e half-width, s
    double window_factor = 16.0;    // time window = window_factor * tau
    int samples = 1 << 14;          // power of two

    void validate(double cell_length) const;
};

struct PropagationResult {
    std::vector<double> time;        // s, window centered on 0
    std::vector<double> power_out;   // |E_out|^2
    std::vector<double> power_vac;   // |E_vac|^2 (the input pulse)
    double delay_m = 0.0;            // c * (<t>_out - <t>_vac); >0 delayed
    double energy_gain = 0.0;        // output / vacuum pulse energy
    double spectral_delay_m = 0.0;   // same delay from the spectral phase slope
};

// Spectral-domain propagation through T(omega); the common vacuum phase is
// factored out so the vacuum reference is the input pulse itself.
PropagationResult propagate(const GaussianPulse& pulse,
                            const MediumResponse& resp,
                            Execution exec = Execution::parallel);

struct DelayGain {
    double delay_m = 0.0;
    double energy_gain = 0.0;
};

// Convenience wrapper with the default pulse at a given carrier detuning.
DelayGain delay_and_gain_at(const MediumResponse& resp, double carrier,
                            const GaussianPulse& defaults = {});

}  // namespace eitprop

#endif
