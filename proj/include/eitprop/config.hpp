#ifndef EITPROP_CONFIG_HPP
#define EITPROP_CONFIG_HPP

#include <string>

#include "eitprop/params.hpp"
#include "eitprop/pulse.hpp"
#include "eitprop/scans.hpp"

namespace eitprop {

// Full simulation profile loaded from a JSON config. Rate-valued keys carry
// a unit suffix: *_mhz / *_khz (ordinary frequency, multiplied by 2*pi) or
// *_gamma3 (resolved after gamma3 is derived from the decay rates).
struct SimConfig {
    AtomParams atom;

    double omega_pump = 0.0;     // rad/s
    double delta_pump = 0.0;     // rad/s
    double probe_fraction = 1e-3;  // omega_probe = fraction * omega_pump
    double loss_1 = 0.0;         // rad/s, operating-point loss from |1>
    RepumpFactors repumps;       // repump_i = r_i * (gamma_1out + loss)

    Populations pinned_pops{1.0, 0.0, 0.0};  // analytic-branch split

    GaussianPulse pulse;

    // default probe-detuning grid, units of gamma3
    double grid_min_gamma3 = -3.0;
    double grid_max_gamma3 = 3.0;
    int grid_points = 601;

    DriveParams drive_at(double loss) const;
    DriveParams drive() const { return drive_at(loss_1); }
    GaussianPulse pulse_at(double carrier) const {
        GaussianPulse p = pulse;
        p.carrier_detuning = carrier;
        return p;
    }
};

SimConfig load_config(const std::string& path);

}  // namespace eitprop

#endif
