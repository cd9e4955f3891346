#ifndef EITPROP_TESTS_ODE_ORACLE_HPP
#define EITPROP_TESTS_ODE_ORACLE_HPP

// Test-only oracles for the Bloch generator: fixed-step RK4 integration and
// a scaling-and-squaring matrix exponential. Independent of the library's
// steady-state solve path.

#include <Eigen/Dense>
#include <complex>

#include "eitprop/bloch.hpp"

namespace eitprop::testing {

using Vec16 = Eigen::Matrix<std::complex<double>, 16, 1>;

inline Vec16 vectorize(const DensityMatrix4& rho) {
    return Eigen::Map<const Vec16>(rho.data());
}

inline DensityMatrix4 devectorize(const Vec16& v) {
    return Eigen::Map<const DensityMatrix4>(v.data());
}

inline Vec16 rk4_evolve(const Generator& gen, Vec16 v, double t_total,
                        int steps) {
    const double h = t_total / steps;
    for (int s = 0; s < steps; ++s) {
        const Vec16 k1 = gen * v;
        const Vec16 k2 = gen * (v + 0.5 * h * k1);
        const Vec16 k3 = gen * (v + 0.5 * h * k2);
        const Vec16 k4 = gen * (v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return v;
}

// exp(gen * t) * v via Taylor series on gen*t/2^k followed by k squarings
inline Vec16 expm_evolve(const Generator& gen, const Vec16& v0, double t) {
    Generator a = gen * t;
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.5) {
        a *= 0.5;
        norm *= 0.5;
        ++squarings;
    }
    Generator e = Generator::Identity();
    Generator term = Generator::Identity();
    for (int k = 1; k <= 24; ++k) {
        term = (term * a) / double(k);
        e += term;
    }
    for (int s = 0; s < squarings; ++s) e = e * e;
    return e * v0;
}

// thermal initial state: 50/50 distribution over the two ground levels
inline Vec16 thermal_state() {
    DensityMatrix4 rho = DensityMatrix4::Zero();
    rho(1, 1) = 0.5;
    rho(2, 2) = 0.5;
    return vectorize(rho);
}

}  // namespace eitprop::testing

#endif
