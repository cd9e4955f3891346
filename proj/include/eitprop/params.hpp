#ifndef EITPROP_PARAMS_HPP
#define EITPROP_PARAMS_HPP

#include <vector>

#include "eitprop/constants.hpp"
#include "eitprop/errors.hpp"

namespace eitprop {

// Atomic constants of the Lambda system plus cell geometry.
// All rates are angular (rad/s).
struct AtomParams {
    double gamma_31 = 0.0;       // decay |3> -> |1>
    double gamma_32 = 0.0;       // decay |3> -> |2>
    double gamma_3out = 0.0;     // escape |3> -> reservoir
    double gamma_1out = 0.0;     // baseline loss |1> -> reservoir
    double lambda_p = 0.0;       // probe resonant wavelength, m
    double cell_length = 0.0;    // m
    double scaled_density = 0.0; // N_p = (lambda_p/2pi)^3 N/V, dimensionless

    double gamma3() const { return 0.5 * (gamma_31 + gamma_32); }
    double omega31() const { return two_pi * speed_of_light / lambda_p; }

    void validate() const;
};

// Laser drive and incoherent ground-state channels. Angular rates, rad/s.
struct DriveParams {
    double omega_pump = 0.0;     // pump Rabi frequency
    double delta_pump = 0.0;     // pump detuning omega_32 - omega_P
    double omega_probe = 0.0;    // probe Rabi frequency (perturbative)
    double loss_1 = 0.0;         // scanned incoherent loss from |1>
    double repump_1 = 0.0;       // reservoir -> |1>
    double repump_2 = 0.0;       // reservoir <-> |2> (incoherent, two-way)

    void validate() const;
};

// Normalized level populations (n3 == 0 on the analytic figure pipeline).
struct Populations {
    double n1 = 0.0;
    double n2 = 0.0;
    double n3 = 0.0;

    void validate() const;
};

struct Dephasings {
    double gamma1 = 0.0;  // ground coherence |1>-|2>
    double gamma3 = 0.0;  // optical coherence width
};

// Incoherent ground-state rates tracking the total loss from |1>:
// repump_i = r_i * (gamma_1out + loss_1).
struct RepumpFactors {
    double r1 = 10.0;
    double r2 = 10.0;
};

// gamma3 = (Gamma1 + Gamma2)/2, gamma1 = (Gamma12 + loss)/2; the scanned
// loss feeds the ground-state dephasing.
Dephasings derive_dephasings(const AtomParams& atom, const DriveParams& drive);

// Uniform probe-detuning grid; absolute frequency is omega_31 - delta_p.
struct FrequencyGrid {
    double delta_min = 0.0;  // rad/s
    double delta_max = 0.0;  // rad/s
    int count = 0;
    double omega_ref = 0.0;  // carrier reference omega_31

    FrequencyGrid() = default;
    FrequencyGrid(double lo, double hi, int n, double omega31);

    double delta(int i) const {
        return delta_min + (delta_max - delta_min) * i / (count - 1);
    }
    double spacing() const { return (delta_max - delta_min) / (count - 1); }
    std::vector<double> deltas() const;
};

}  // namespace eitprop

#endif
