#include "eitprop/pulse.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <vector>

namespace eitprop {

namespace {

// FFTW's planner is not thread-safe; executing distinct plans is.
std::mutex planner_mutex;

class Fft {
  public:
    explicit Fft(int n) : n_(n), buf_(n) {
        std::lock_guard<std::mutex> lock(planner_mutex);
        auto* data = reinterpret_cast<fftw_complex*>(buf_.data());
        fwd_ = fftw_plan_dft_1d(n, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
        inv_ = fftw_plan_dft_1d(n, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Fft() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(inv_);
    }
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    std::vector<cplx>& buffer() { return buf_; }
    void forward() { fftw_execute(fwd_); }
    void inverse() {
        fftw_execute(inv_);
        for (auto& v : buf_) v /= static_cast<double>(n_);
    }

  private:
    int n_;
    std::vector<cplx> buf_;
    fftw_plan fwd_;
    fftw_plan inv_;
};

// envelope angular frequency of DFT bin k for the e^{-i w t} field
// convention: nu_k = -2*pi*fftfreq(k)
double bin_frequency(int k, int n, double dt) {
    const int kk = (k <= n / 2 - 1) ? k : k - n;
    return -two_pi * kk / (n * dt);
}

}  // namespace

void GaussianPulse::validate(double cell_length) const {
    if (tau <= 0) throw InvalidParameter("pulse: tau must be > 0");
    if (samples < 4 || (samples & (samples - 1)) != 0)
        throw InvalidParameter("pulse: samples must be a power of two");
    if (window_factor <= 2)
        throw InvalidParameter("pulse: window must be several tau wide");
    if (speed_of_light * tau < 10.0 * cell_length)
        throw InvalidParameter(
            "pulse: spatial length must far exceed the cell length");
}

PropagationResult propagate(const GaussianPulse& pulse,
                            const MediumResponse& resp, Execution exec) {
    pulse.validate(resp.atom.cell_length);
    const int n = pulse.samples;
    const double window = pulse.window_factor * pulse.tau;
    const double dt = window / n;

    PropagationResult out;
    out.time.resize(n);
    out.power_vac.resize(n);
    out.power_out.resize(n);

    Fft fft(n);
    auto& buf = fft.buffer();
    for (int k = 0; k < n; ++k) {
        const double t = (k - n / 2) * dt;
        out.time[k] = t;
        const double e = std::exp(-t * t / (2.0 * pulse.tau * pulse.tau));
        out.power_vac[k] = e * e;
        buf[k] = e;
    }
    fft.forward();

    // per-bin transmission at delta_p = delta_c - nu
    std::vector<cplx> tf(n);
    const bool par = exec == Execution::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (int k = 0; k < n; ++k) {
        const double nu = bin_frequency(k, n, dt);
        tf[k] = resp.transmission(pulse.carrier_detuning - nu);
    }

    std::vector<cplx> spectrum(buf);  // input spectrum, kept for the
                                      // spectral-phase delay route
    for (int k = 0; k < n; ++k) buf[k] *= tf[k];
    fft.inverse();

    for (int k = 0; k < n; ++k) out.power_out[k] = std::norm(buf[k]);

    const double peak =
        *std::max_element(out.power_out.begin(), out.power_out.end());
    if (std::max(out.power_out.front(), out.power_out.back()) > 1e-8 * peak)
        throw WindowError("pulse: output power reaches the window edge");

    double e_in = 0, e_out = 0, t_in = 0, t_out = 0;
    for (int k = 0; k < n; ++k) {
        e_in += out.power_vac[k];
        e_out += out.power_out[k];
        t_in += out.time[k] * out.power_vac[k];
        t_out += out.time[k] * out.power_out[k];
    }
    out.delay_m = speed_of_light * (t_out / e_out - t_in / e_in);
    out.energy_gain = e_out / e_in;

    // independent delay route: intensity-weighted slope of arg T(omega)
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return bin_frequency(a, n, dt) < bin_frequency(b, n, dt);
    });
    std::vector<double> phase(n);
    double prev = std::arg(tf[order[0]]);
    phase[0] = prev;
    for (int j = 1; j < n; ++j) {
        double p = std::arg(tf[order[j]]);
        while (p - prev > pi) p -= two_pi;
        while (p - prev < -pi) p += two_pi;
        phase[j] = p;
        prev = p;
    }
    double wsum = 0, tsum = 0;
    for (int j = 1; j + 1 < n; ++j) {
        const int k = order[j];
        const double w = std::norm(spectrum[k] * tf[k]);
        const double dnu = bin_frequency(order[j + 1], n, dt) -
                           bin_frequency(order[j - 1], n, dt);
        const double slope = (phase[j + 1] - phase[j - 1]) / dnu;
        wsum += w;
        tsum += w * slope;
    }
    out.spectral_delay_m = speed_of_light * tsum / wsum;
    return out;
}

DelayGain delay_and_gain_at(const MediumResponse& resp, double carrier,
                            const GaussianPulse& defaults) {
    GaussianPulse p = defaults;
    p.carrier_detuning = carrier;
    const PropagationResult r = propagate(p, resp);
    return {r.delay_m, r.energy_gain};
}

}  // namespace eitprop
