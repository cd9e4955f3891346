#ifndef EITPROP_BLOCH_HPP
#define EITPROP_BLOCH_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "eitprop/params.hpp"
#include "eitprop/response.hpp"

namespace eitprop {

// Basis {|0> reservoir, |1>, |2>, |3>}; rho vectorized column-major.
using DensityMatrix4 = Eigen::Matrix4cd;
using Generator = Eigen::Matrix<std::complex<double>, 16, 16>;

// Open-system optical Bloch generator: rotating-frame Hamiltonian,
// population transfer channels, and coherence damping with the dephasings
// of the first-order theory (gamma_31 = gamma_32 = gamma3, gamma_21 =
// gamma1). Trace-preserving by construction.
Generator build_generator(const AtomParams& atom, const DriveParams& drive,
                          double delta_p);

// Unique steady state via a bordered solve (one redundant row replaced by
// the trace constraint). Throws DegenerateSteadyState when the null space
// is not one-dimensional.
DensityMatrix4 steady_state(const Generator& gen);

// Populations normalized over the Lambda manifold {1,2,3}.
Populations populations_of(const DensityMatrix4& rho);
double reservoir_population(const DensityMatrix4& rho);

struct ChiNumeric {
    cplx chi;
    Populations pops;           // probe-on steady populations
    bool perturbative_warning = false;
    double halving_change = 0.0;  // relative chi change when probe halved
};

// Susceptibility from the steady-state coherence rho_31, normalized so the
// weak-probe limit reproduces the first-order formula exactly.
ChiNumeric weak_probe_chi(const AtomParams& atom, const DriveParams& drive,
                          double delta_p, bool check_linearity = false);

struct PopulationRow {
    double loss_1 = 0.0;
    double n2_over_n1 = 0.0;
    double n3_over_n1 = 0.0;
    bool valid = true;
};

// One steady-state solve per loss value; degenerate points are recorded as
// invalid rows (gaps), not errors.
std::vector<PopulationRow> population_scan(
    const AtomParams& atom, const DriveParams& drive_template,
    const RepumpFactors& repumps, const std::vector<double>& loss_grid,
    Execution exec = Execution::parallel);

// Drive at a given loss with incoherent rates tracking it:
// repump_i = r_i * (gamma_1out + loss).
DriveParams drive_at_loss(const DriveParams& base, const AtomParams& atom,
                          double loss, const RepumpFactors& repumps);

}  // namespace eitprop

#endif
