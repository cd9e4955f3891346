#include "eitprop/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eitprop {

namespace {
constexpr cplx I(0.0, 1.0);
}

cplx MediumResponse::chi(double d) const {
    const cplx den = (d - I * gamma3) * (d - I * gamma1) - pump_q;
    const cplx num = (d - I * gamma1) * (pops.n1 - pops.n3) -
                     (I / gamma3) * pump_q * (pops.n3 - pops.n2);
    return 3.0 * pi * atom.scaled_density * atom.gamma_31 * num / den;
}

cplx MediumResponse::chi_d1(double d) const {
    const cplx den = (d - I * gamma3) * (d - I * gamma1) - pump_q;
    const cplx dden = 2.0 * d - I * (gamma1 + gamma3);
    const cplx num = (d - I * gamma1) * (pops.n1 - pops.n3) -
                     (I / gamma3) * pump_q * (pops.n3 - pops.n2);
    const cplx dnum = pops.n1 - pops.n3;
    const double a = 3.0 * pi * atom.scaled_density * atom.gamma_31;
    return a * (dnum * den - num * dden) / (den * den);
}

cplx MediumResponse::chi_d2(double d) const {
    const cplx den = (d - I * gamma3) * (d - I * gamma1) - pump_q;
    const cplx dden = 2.0 * d - I * (gamma1 + gamma3);
    const cplx num = (d - I * gamma1) * (pops.n1 - pops.n3) -
                     (I / gamma3) * pump_q * (pops.n3 - pops.n2);
    const cplx dnum = pops.n1 - pops.n3;
    const double a = 3.0 * pi * atom.scaled_density * atom.gamma_31;
    // d''(den) = 2; num is linear in delta
    return a * (-2.0 * dnum * dden / (den * den) - 2.0 * num / (den * den) +
                2.0 * num * dden * dden / (den * den * den));
}

cplx refractive_index(cplx chi) {
    const cplx arg = 1.0 + chi;
    if (arg.real() < 0 && std::abs(arg.imag()) <
                              std::numeric_limits<double>::min())
        throw InvalidParameter("refractive index: 1 + chi on the branch cut");
    return std::sqrt(arg);
}

cplx MediumResponse::index(double d) const { return refractive_index(chi(d)); }

double MediumResponse::eta_minus_1(double d) const {
    // sqrt(1+chi) - 1 = chi / (sqrt(1+chi) + 1), no cancellation
    const cplx c = chi(d);
    return (c / (std::sqrt(1.0 + c) + 1.0)).real();
}

double MediumResponse::etap(double d) const {
    return (chi_d1(d) / (2.0 * std::sqrt(1.0 + chi(d)))).real();
}

double MediumResponse::etapp(double d) const {
    const cplx c = chi(d);
    const cplx c1 = chi_d1(d);
    const cplx c2 = chi_d2(d);
    const cplx s = std::sqrt(1.0 + c);
    return (c2 / (2.0 * s) - c1 * c1 / (4.0 * s * s * s)).real();
}

double MediumResponse::cvg(double d) const {
    // c/v_g = eta + w d(eta)/dw, with d/dw = -d/d(delta)
    const double w = omega31 - d;
    return 1.0 + eta_minus_1(d) - w * etap(d);
}

double MediumResponse::inv_group_velocity(double d) const {
    return cvg(d) / speed_of_light;
}

double MediumResponse::group_velocity(double d) const {
    const double denom = cvg(d);
    if (std::abs(denom) < 1e-12)
        return std::copysign(std::numeric_limits<double>::infinity(), denom);
    return speed_of_light / denom;
}

double MediumResponse::dispersion(double d) const {
    const double w = omega31 - d;
    return atom.gamma_31 * (w * etapp(d) - 2.0 * etap(d)) / speed_of_light;
}

double MediumResponse::dg_from_definition(double d) const {
    const double w = omega31 - d;
    const double vg = group_velocity(d);
    return -vg * vg / speed_of_light * (w * etapp(d) - 2.0 * etap(d));
}

double MediumResponse::dg_from_dispersion(double d) const {
    const double vg = group_velocity(d);
    return -vg * vg * dispersion(d) / atom.gamma_31;
}

std::pair<cplx, double> slab_transmission(cplx n, double omega, double d) {
    const double phi = omega * d / speed_of_light;
    // the huge real phase 2*phi is reduced modulo 2*pi before exponentiating
    const cplx interference =
        std::exp(2.0 * I * (n - 1.0) * phi + I * std::fmod(2.0 * phi, two_pi));
    const cplx denom = (n + 1.0) * (n + 1.0) -
                       (n - 1.0) * (n - 1.0) * interference;
    if (std::abs(denom) < 1e-300)
        throw InvalidParameter("transmission: slab resonator singularity");
    const cplx T = 4.0 * n / denom * std::exp(I * (n - 1.0) * phi);
    return {T, std::norm(T)};
}

cplx MediumResponse::transmission(double d) const {
    return slab_transmission(index(d), omega31 - d, atom.cell_length).first;
}

double MediumResponse::gt(double d) const {
    return slab_transmission(index(d), omega31 - d, atom.cell_length).second;
}

double MediumResponse::centerline_gain_percent() const {
    return 100.0 * (gt(0.0) - 1.0);
}

MediumResponse make_response(const AtomParams& atom, const DriveParams& drive,
                             const Populations& pops) {
    atom.validate();
    drive.validate();
    pops.validate();
    if (drive.delta_pump != 0.0)
        throw InvalidParameter(
            "analytic response requires the pump on resonance");
    const Dephasings deph = derive_dephasings(atom, drive);
    if (deph.gamma3 <= 0)
        throw InvalidParameter("analytic response requires gamma3 > 0");
    MediumResponse resp;
    resp.atom = atom;
    resp.pops = pops;
    resp.gamma1 = deph.gamma1;
    resp.gamma3 = deph.gamma3;
    resp.pump_q = 0.25 * drive.omega_pump * drive.omega_pump;
    resp.omega31 = atom.omega31();
    return resp;
}

std::vector<double> zero_dispersion_roots(const MediumResponse& resp,
                                          double lo, double hi,
                                          int scan_points, double tol_rel) {
    const double tol = tol_rel * resp.gamma3;
    std::vector<double> xs(scan_points);
    std::vector<double> vals(scan_points);
    for (int i = 0; i < scan_points; ++i) {
        xs[i] = lo + (hi - lo) * i / (scan_points - 1);
        vals[i] = resp.dispersion(xs[i]);
    }
    std::vector<double> roots;
    for (int i = 0; i + 1 < scan_points; ++i) {
        if (vals[i] == 0.0) {
            // isolated zero only: an identically vanishing D has no roots
            if (i > 0 && i + 1 < scan_points &&
                vals[i - 1] * vals[i + 1] < 0.0)
                roots.push_back(xs[i]);
            continue;
        }
        if (vals[i] * vals[i + 1] < 0.0) {
            double a = xs[i], b = xs[i + 1], fa = vals[i];
            while (b - a > tol) {
                const double m = 0.5 * (a + b);
                const double fm = resp.dispersion(m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if (fa * fm < 0.0) {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

AnomalousPoint find_anomalous_carrier(const MediumResponse& resp, double lo,
                                      double hi) {
    // golden-section minimum of c/v_g
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = resp.cvg(c1), f2 = resp.cvg(c2);
    for (int it = 0; it < 200; ++it) {
        if (f1 < f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = resp.cvg(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = resp.cvg(c2);
        }
    }
    AnomalousPoint pt;
    pt.delta = 0.5 * (a + b);
    pt.cvg = resp.cvg(pt.delta);
    pt.has_anomalous = pt.cvg < 0.0;
    return pt;
}

void ComplexSpectrum::validate() const {
    if (static_cast<int>(values.size()) != grid.count)
        throw InvalidParameter("spectrum: sample count does not match grid");
    for (const cplx& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw InvalidParameter("spectrum: non-finite sample");
}

void RealSpectrum::validate() const {
    if (static_cast<int>(values.size()) != grid.count)
        throw InvalidParameter("spectrum: sample count does not match grid");
    for (double v : values)
        if (!std::isfinite(v))
            throw InvalidParameter("spectrum: non-finite sample");
}

ComplexSpectrum sample_chi(const MediumResponse& resp,
                           const FrequencyGrid& grid, Execution exec) {
    ComplexSpectrum out{grid, std::vector<cplx>(grid.count)};
    const bool par = exec == Execution::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < grid.count; ++i)
        out.values[i] = resp.chi(grid.delta(i));
    return out;
}

RealSpectrum sample_gt(const MediumResponse& resp, const FrequencyGrid& grid,
                       Execution exec) {
    RealSpectrum out{grid, std::vector<double>(grid.count)};
    const bool par = exec == Execution::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < grid.count; ++i)
        out.values[i] = resp.gt(grid.delta(i));
    return out;
}

RealSpectrum sample_inv_vg(const MediumResponse& resp,
                           const FrequencyGrid& grid, Execution exec) {
    RealSpectrum out{grid, std::vector<double>(grid.count)};
    const bool par = exec == Execution::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < grid.count; ++i)
        out.values[i] = resp.inv_group_velocity(grid.delta(i));
    return out;
}

RealSpectrum sample_dispersion(const MediumResponse& resp,
                               const FrequencyGrid& grid, Execution exec) {
    RealSpectrum out{grid, std::vector<double>(grid.count)};
    const bool par = exec == Execution::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < grid.count; ++i)
        out.values[i] = resp.dispersion(grid.delta(i));
    return out;
}

}  // namespace eitprop
