#ifndef EITPROP_RESPONSE_HPP
#define EITPROP_RESPONSE_HPP

#include <complex>
#include <vector>

#include "eitprop/params.hpp"

namespace eitprop {

using cplx = std::complex<double>;

enum class Execution { serial, parallel };

// Sampled complex-valued function of the probe detuning.
struct ComplexSpectrum {
    FrequencyGrid grid;
    std::vector<cplx> values;
    void validate() const;
};

struct RealSpectrum {
    FrequencyGrid grid;
    std::vector<double> values;
    void validate() const;
};

// Snapshot of everything the first-order susceptibility needs. Pump must be
// on resonance for the analytic branch.
struct MediumResponse {
    AtomParams atom;
    Populations pops;
    double gamma1 = 0.0;   // ground coherence dephasing
    double gamma3 = 0.0;   // optical coherence width
    double pump_q = 0.0;   // (Omega_P/2)^2
    double omega31 = 0.0;

    // first-order susceptibility and its detuning derivatives
    cplx chi(double delta) const;
    cplx chi_d1(double delta) const;
    cplx chi_d2(double delta) const;

    // complex refractive index n = sqrt(1 + chi), principal branch
    cplx index(double delta) const;
    double eta_minus_1(double delta) const;  // cancellation-free Re(n) - 1
    double etap(double delta) const;         // d eta / d delta
    double etapp(double delta) const;

    double inv_group_velocity(double delta) const;  // 1/v_g, s/m
    double group_velocity(double delta) const;      // signed inf when 1/v_g ~ 0
    double cvg(double delta) const;                 // c / v_g

    // dispersion function D = Gamma1 (w eta'' + 2 eta')/c, derivatives in w
    double dispersion(double delta) const;
    // group velocity dispersion d_g, two algebraically equal routes
    double dg_from_definition(double delta) const;
    double dg_from_dispersion(double delta) const;

    // slab transmission relative to vacuum propagation over the cell
    cplx transmission(double delta) const;
    double gt(double delta) const;  // |T|^2

    double centerline_gain_percent() const;  // 100 (G_T(0) - 1)
};

// Builds the response; derives dephasings from atom+drive. Throws
// InvalidParameter for gamma3 == 0 or off-resonant pump.
MediumResponse make_response(const AtomParams& atom, const DriveParams& drive,
                             const Populations& pops);

cplx refractive_index(cplx chi);

// T and G_T for a given complex index at absolute frequency omega
std::pair<cplx, double> slab_transmission(cplx n, double omega, double d);

// Sign changes of D located on a scan grid, bisection-refined. Sorted.
std::vector<double> zero_dispersion_roots(const MediumResponse& resp,
                                          double lo, double hi,
                                          int scan_points = 3001,
                                          double tol_rel = 1e-8);

// Location of the negative minimum of 1/v_g on (lo, hi); returns the
// golden-section minimizer. has_anomalous reports c/vg < 0 there.
struct AnomalousPoint {
    double delta = 0.0;
    double cvg = 0.0;
    bool has_anomalous = false;
};
AnomalousPoint find_anomalous_carrier(const MediumResponse& resp, double lo,
                                      double hi);

// Grid samplers (OpenMP kernels; serial path is the test reference).
ComplexSpectrum sample_chi(const MediumResponse& resp,
                           const FrequencyGrid& grid,
                           Execution exec = Execution::parallel);
RealSpectrum sample_gt(const MediumResponse& resp, const FrequencyGrid& grid,
                       Execution exec = Execution::parallel);
RealSpectrum sample_inv_vg(const MediumResponse& resp,
                           const FrequencyGrid& grid,
                           Execution exec = Execution::parallel);
RealSpectrum sample_dispersion(const MediumResponse& resp,
                               const FrequencyGrid& grid,
                               Execution exec = Execution::parallel);

}  // namespace eitprop

#endif
