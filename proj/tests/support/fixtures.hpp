#ifndef EITPROP_TESTS_FIXTURES_HPP
#define EITPROP_TESTS_FIXTURES_HPP

// Shared test fixtures: the bundled vapor-cell profile and its two
// operating points.

#include "eitprop/params.hpp"
#include "eitprop/response.hpp"

namespace eitprop::testing {

inline AtomParams default_atom() {
    AtomParams atom;
    atom.gamma_31 = two_pi * 5.75e6;
    atom.gamma_32 = two_pi * 5.75e6;
    atom.gamma_1out = two_pi * 1e3;
    atom.gamma_3out = 100.0 * atom.gamma3();
    atom.lambda_p = 794.979e-9;
    atom.cell_length = 0.1;
    atom.scaled_density = 2.084303254328e-07;  // calibrated: 18.9 m EIT delay
    return atom;
}

inline constexpr double kPumpOverGamma3 = 1.1313708498984762;
inline constexpr double kRepump1 = 0.8206289;
inline constexpr double kRepump2 = 1.75;

inline DriveParams drive_with_loss(const AtomParams& atom,
                                   double loss_gamma3) {
    DriveParams d;
    d.omega_pump = kPumpOverGamma3 * atom.gamma3();
    d.omega_probe = 1e-3 * d.omega_pump;
    d.loss_1 = loss_gamma3 * atom.gamma3();
    d.repump_1 = kRepump1 * (atom.gamma_1out + d.loss_1);
    d.repump_2 = kRepump2 * (atom.gamma_1out + d.loss_1);
    return d;
}

// all population in |1>, no scanned loss
inline MediumResponse eit_response(const AtomParams& atom = default_atom()) {
    return make_response(atom, drive_with_loss(atom, 0.0), {1.0, 0.0, 0.0});
}

// 30% of the population in |2>, dephasing from a 0.2 gamma3 loss
inline MediumResponse awi_response(const AtomParams& atom = default_atom()) {
    return make_response(atom, drive_with_loss(atom, 0.2), {0.7, 0.3, 0.0});
}

}  // namespace eitprop::testing

#endif
