#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eitprop/config.hpp"
#include "eitprop/io.hpp"

namespace ep = eitprop;

namespace {

struct CliState {
    std::string config_path;
    std::string output_dir;
    bool emit_plots = false;
    bool serial = false;
    double loss_gamma3 = -1.0;        // <0: use config value
    double population_split = -1.0;   // <0: use config value
    double omega_pump_gamma3 = -1.0;  // <0: use config value
    std::string mode = "pinned";
    int points = 0;
    double grid_min = 0.0, grid_max = 0.0;
    bool grid_set = false;

    ep::SimConfig cfg;

    void load() {
        cfg = ep::load_config(config_path);
        if (omega_pump_gamma3 >= 0)
            cfg.omega_pump = omega_pump_gamma3 * cfg.atom.gamma3();
        if (loss_gamma3 >= 0) cfg.loss_1 = loss_gamma3 * cfg.atom.gamma3();
        if (population_split >= 0)
            cfg.pinned_pops = {1.0 - population_split, population_split, 0.0};
        if (points > 0) cfg.grid_points = points;
        if (grid_set) {
            cfg.grid_min_gamma3 = grid_min;
            cfg.grid_max_gamma3 = grid_max;
        }
    }

    ep::Execution exec() const {
        return serial ? ep::Execution::serial : ep::Execution::parallel;
    }

    ep::SweepMode sweep_mode() const {
        if (mode == "pinned") return ep::SweepMode::pinned;
        if (mode == "self-consistent") return ep::SweepMode::self_consistent;
        throw ep::InvalidParameter("mode must be pinned or self-consistent");
    }

    // response at the operating point; self-consistent mode takes the
    // populations from the Bloch steady state at the configured loss
    ep::MediumResponse response() const {
        if (sweep_mode() == ep::SweepMode::self_consistent) {
            ep::DriveParams d = cfg.drive();
            d.omega_probe = 0.0;
            const auto rho =
                ep::steady_state(ep::build_generator(cfg.atom, d, 0.0));
            return ep::make_response(cfg.atom, d, ep::populations_of(rho));
        }
        return ep::make_response(cfg.atom, cfg.drive(), cfg.pinned_pops);
    }

    ep::FrequencyGrid grid() const {
        const double g3 = cfg.atom.gamma3();
        return {cfg.grid_min_gamma3 * g3, cfg.grid_max_gamma3 * g3,
                cfg.grid_points, cfg.atom.omega31()};
    }

    void write(const ep::Table& t, const std::string& ylabel,
               const std::vector<int>& ycols) const {
        ep::write_table(t, output_dir);
        if (emit_plots) ep::write_plot_script(t, output_dir, ylabel, ycols);
    }
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

int run_populations(CliState& st, double max_loss_gamma3, int n) {
    st.load();
    const double g3 = st.cfg.atom.gamma3();
    const auto rows =
        ep::population_scan(st.cfg.atom, st.cfg.drive(), st.cfg.repumps,
                            linspace(0.0, max_loss_gamma3 * g3, n), st.exec());
    ep::Table t;
    t.name = "populations_vs_loss";
    t.comments = {"steady-state ground-level population ratios"};
    t.columns = {"loss_1/gamma3", "n2/n1", "n3/n1"};
    for (const auto& r : rows)
        t.rows.push_back({r.loss_1 / g3,
                          r.valid ? r.n2_over_n1 : std::nan(""),
                          r.valid ? r.n3_over_n1 : std::nan("")});
    st.write(t, "population ratio", {2, 3});
    std::cout << "populations: " << rows.size() << " points, n2/n1 at max loss = "
              << rows.back().n2_over_n1 << "\n";
    return 0;
}

int run_chi(CliState& st, const std::string& route) {
    st.load();
    const auto grid = st.grid();
    const double g3 = st.cfg.atom.gamma3();
    ep::Table t;
    t.name = "chi_spectrum";
    t.columns = {"delta_p/gamma3", "re_chi", "im_chi"};
    if (route == "analytic") {
        const auto spec = ep::sample_chi(st.response(), grid, st.exec());
        spec.validate();
        for (int i = 0; i < grid.count; ++i)
            t.rows.push_back({grid.delta(i) / g3, spec.values[i].real(),
                              spec.values[i].imag()});
    } else if (route == "bloch") {
        const ep::DriveParams d = st.cfg.drive();
        for (int i = 0; i < grid.count; ++i) {
            const auto r = ep::weak_probe_chi(st.cfg.atom, d, grid.delta(i));
            t.rows.push_back(
                {grid.delta(i) / g3, r.chi.real(), r.chi.imag()});
        }
    } else {
        throw ep::InvalidParameter("route must be analytic or bloch");
    }
    st.write(t, "chi", {2, 3});
    double peak = 0;
    for (const auto& r : t.rows) peak = std::max(peak, std::abs(r[2]));
    std::cout << "chi: " << grid.count << " points, max |Im chi| = " << peak
              << "\n";
    return 0;
}

int run_transmission(CliState& st) {
    st.load();
    const auto grid = st.grid();
    const double g3 = st.cfg.atom.gamma3();
    const auto resp = st.response();
    const auto spec = ep::sample_gt(resp, grid, st.exec());
    spec.validate();
    ep::Table t;
    t.name = "transmission_spectrum";
    t.columns = {"delta_p/gamma3", "G_T"};
    for (int i = 0; i < grid.count; ++i)
        t.rows.push_back({grid.delta(i) / g3, spec.values[i]});
    st.write(t, "G_T", {2});
    std::cout << "transmission: centerline gain = "
              << resp.centerline_gain_percent() << " %\n";
    return 0;
}

int run_groupvel(CliState& st) {
    st.load();
    const auto grid = st.grid();
    const double g3 = st.cfg.atom.gamma3();
    const auto resp = st.response();
    const auto spec = ep::sample_inv_vg(resp, grid, st.exec());
    spec.validate();
    ep::Table t;
    t.name = "inverse_group_velocity";
    t.columns = {"delta_p/gamma3", "inv_vg_s_per_m", "c_over_vg"};
    for (int i = 0; i < grid.count; ++i)
        t.rows.push_back({grid.delta(i) / g3, spec.values[i],
                          spec.values[i] * ep::speed_of_light});
    st.write(t, "1/v_g (s/m)", {2});
    std::cout << "groupvel: c/v_g at resonance = " << resp.cvg(0.0) << "\n";
    return 0;
}

int run_dispersion(CliState& st) {
    st.load();
    const auto grid = st.grid();
    const double g3 = st.cfg.atom.gamma3();
    const auto resp = st.response();
    const auto spec = ep::sample_dispersion(resp, grid, st.exec());
    spec.validate();
    ep::Table t;
    t.name = "dispersion_spectrum";
    t.columns = {"delta_p/gamma3", "D_s_per_m"};
    for (int i = 0; i < grid.count; ++i)
        t.rows.push_back({grid.delta(i) / g3, spec.values[i]});
    st.write(t, "D (s/m)", {2});
    std::cout << "dispersion: D(0) = " << resp.dispersion(0.0) << " s/m\n";
    return 0;
}

int run_roots(CliState& st, double window_gamma3) {
    st.load();
    const double g3 = st.cfg.atom.gamma3();
    const auto resp = st.response();
    const auto roots = ep::zero_dispersion_roots(resp, -window_gamma3 * g3,
                                                 window_gamma3 * g3);
    ep::Table t;
    t.name = "dispersion_roots";
    t.comments = {"probe detunings where the group velocity dispersion "
                  "vanishes"};
    t.columns = {"root/gamma3", "c_over_vg"};
    for (double r : roots) t.rows.push_back({r / g3, resp.cvg(r)});
    st.write(t, "c/v_g", {2});
    std::cout << "roots: " << roots.size() << " zero-dispersion points in ["
              << -window_gamma3 << ", " << window_gamma3 << "] gamma3\n";
    return 0;
}

int run_propagate(CliState& st, const std::string& carrier) {
    st.load();
    const double g3 = st.cfg.atom.gamma3();
    const auto resp = st.response();
    double delta_c = 0.0;
    if (carrier == "resonance") {
        delta_c = 0.0;
    } else if (carrier == "anomalous") {
        const auto pt = ep::find_anomalous_carrier(resp, 0.02 * g3, 3.0 * g3);
        if (!pt.has_anomalous)
            throw ep::InvalidParameter(
                "no anomalous group-velocity region for these parameters");
        delta_c = pt.delta;
    } else {
        delta_c = std::stod(carrier) * g3;
    }
    ep::GaussianPulse pulse = st.cfg.pulse;
    pulse.carrier_detuning = delta_c;
    const auto res = ep::propagate(pulse, resp, st.exec());
    const double peak_vac =
        *std::max_element(res.power_vac.begin(), res.power_vac.end());
    ep::Table t;
    t.name = "pulse_propagation";
    t.comments = {"power densities normalized to the vacuum pulse peak"};
    t.columns = {"t_s", "z_m", "power_vac", "power_out"};
    for (size_t i = 0; i < res.time.size(); ++i)
        t.rows.push_back({res.time[i], ep::speed_of_light * res.time[i],
                          res.power_vac[i] / peak_vac,
                          res.power_out[i] / peak_vac});
    st.write(t, "normalized power density", {3, 4});
    std::cout << "propagate: carrier = " << delta_c / g3
              << " gamma3, delay = " << res.delay_m
              << " m, energy gain = " << res.energy_gain
              << ", c/v_g(carrier) = " << resp.cvg(delta_c) << "\n";
    return 0;
}

int run_scan_gain(CliState& st, double gamma1_max, int n) {
    st.load();
    const double g3 = st.cfg.atom.gamma3();
    const double g1_floor = 0.5 * st.cfg.atom.gamma_1out;
    const auto rows = ep::gain_vs_dephasing(
        st.cfg.atom, st.cfg.drive(), st.cfg.pinned_pops,
        linspace(g1_floor, gamma1_max * g3, n), st.sweep_mode(),
        st.cfg.repumps, st.exec());
    ep::Table t;
    t.name = "gain_vs_dephasing";
    t.comments = {"centerline gain, sweep mode: " + st.mode,
                  "gamma1 axis: ground-state coherence dephasing"};
    t.columns = {"gamma1/gamma3", "gain_percent"};
    double best = -1e30, best_g1 = 0;
    for (const auto& r : rows) {
        t.rows.push_back(
            {r.gamma1_over_gamma3, r.valid ? r.gain_percent : std::nan("")});
        if (r.valid && r.gain_percent > best) {
            best = r.gain_percent;
            best_g1 = r.gamma1_over_gamma3;
        }
    }
    st.write(t, "gain (%)", {2});
    std::cout << "scan-gain: max gain = " << best << " % at gamma1 = "
              << best_g1 << " gamma3\n";
    return 0;
}

int run_scan_delay(CliState& st, double gamma1_max, int n) {
    st.load();
    const double g3 = st.cfg.atom.gamma3();
    const double g1_floor = 0.5 * st.cfg.atom.gamma_1out;
    const auto rows = ep::delay_advance_vs_dephasing(
        st.cfg.atom, st.cfg.drive(), st.cfg.pinned_pops,
        linspace(g1_floor, gamma1_max * g3, n), st.sweep_mode(),
        st.cfg.pulse, st.cfg.repumps, st.exec());
    ep::Table t;
    t.name = "delay_advance_vs_dephasing";
    t.comments = {"resonant delay and anomalous-carrier advance, sweep mode: " +
                      st.mode,
                  "gamma1 axis: ground-state coherence dephasing"};
    t.columns = {"gamma1/gamma3", "delay_m", "advance_m"};
    for (const auto& r : rows)
        t.rows.push_back({r.gamma1_over_gamma3,
                          r.valid ? r.delay_m : std::nan(""),
                          r.valid && r.anomalous_present ? r.advance_m
                                                         : std::nan("")});
    st.write(t, "pulse displacement (m)", {2, 3});
    std::cout << "scan-delay: delay at gamma1=" << gamma1_max << " gamma3: "
              << rows.back().delay_m << " m, advance: " << rows.back().advance_m
              << " m\n";
    return 0;
}

int run_calibrate(CliState& st, double target) {
    st.load();
    const double np = ep::calibrate_density(target, st.cfg.atom,
                                            st.cfg.drive(), st.cfg.pulse);
    std::cout << "calibrate: scaled_density = " << std::scientific << np
              << " for a " << target << " m pure-EIT resonant delay\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Steady-state response and pulse propagation for a pumped "
        "three-level Lambda medium"};
    app.require_subcommand(1);
    app.fallthrough();

    CliState st;
    const char* env_dir = std::getenv("EITPROP_OUTDIR");
    st.output_dir = env_dir ? env_dir : ".";

    app.add_option("--config", st.config_path, "JSON config file")
        ->required();
    app.add_option("--output-dir", st.output_dir,
                   "directory for table output");
    app.add_flag("--emit-plots", st.emit_plots,
                 "also write gnuplot scripts next to the tables");
    app.add_flag("--serial", st.serial, "disable OpenMP parallel kernels");
    app.add_option("--loss", st.loss_gamma3,
                   "override loss from |1>, units of gamma3");
    app.add_option("--population-split", st.population_split,
                   "pinned population fraction in |2>");
    app.add_option("--omega-pump", st.omega_pump_gamma3,
                   "override pump Rabi frequency, units of gamma3");
    app.add_option("--mode", st.mode, "sweep mode: pinned | self-consistent");
    app.add_option("--points", st.points, "number of grid points");

    double grid_min = -3.0, grid_max = 3.0;
    auto* omin = app.add_option("--min", grid_min, "grid minimum, gamma3");
    auto* omax = app.add_option("--max", grid_max, "grid maximum, gamma3");

    double max_loss = 0.5;
    int scan_points = 101;
    auto* sub_pop = app.add_subcommand(
        "populations", "steady-state population ratios vs loss");
    sub_pop->add_option("--max-loss", max_loss, "largest loss, gamma3");
    sub_pop->add_option("--scan-points", scan_points, "scan points");

    std::string route = "analytic";
    auto* sub_chi =
        app.add_subcommand("chi", "first-order susceptibility spectrum");
    sub_chi->add_option("--route", route, "analytic | bloch");

    auto* sub_tr =
        app.add_subcommand("transmission", "cell transmission spectrum");
    auto* sub_gv =
        app.add_subcommand("groupvel", "reciprocal group velocity spectrum");
    auto* sub_disp =
        app.add_subcommand("dispersion", "group velocity dispersion spectrum");

    double window = 1.5;
    auto* sub_roots =
        app.add_subcommand("roots", "zeros of the dispersion function");
    sub_roots->add_option("--window", window, "search window, gamma3");

    std::string carrier = "resonance";
    auto* sub_prop =
        app.add_subcommand("propagate", "Gaussian pulse through the cell");
    sub_prop->add_option(
        "--carrier", carrier,
        "resonance | anomalous | carrier detuning in gamma3");

    double gamma1_max = 0.3;
    int sweep_points = 61;
    auto* sub_sg =
        app.add_subcommand("scan-gain", "centerline gain vs dephasing");
    sub_sg->add_option("--gamma1-max", gamma1_max, "largest gamma1, gamma3");
    sub_sg->add_option("--scan-points", sweep_points, "scan points");
    auto* sub_sd = app.add_subcommand(
        "scan-delay", "pulse delay and advance vs dephasing");
    sub_sd->add_option("--gamma1-max", gamma1_max, "largest gamma1, gamma3");
    sub_sd->add_option("--scan-points", sweep_points, "scan points");

    double target = 18.9;
    auto* sub_cal = app.add_subcommand(
        "calibrate", "scaled density from the pure-EIT delay anchor");
    sub_cal->add_option("--target", target, "target delay, m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    st.grid_set = omin->count() > 0 || omax->count() > 0;
    st.grid_min = grid_min;
    st.grid_max = grid_max;

    try {
        if (sub_pop->parsed())
            return run_populations(st, max_loss, scan_points);
        if (sub_chi->parsed()) return run_chi(st, route);
        if (sub_tr->parsed()) return run_transmission(st);
        if (sub_gv->parsed()) return run_groupvel(st);
        if (sub_disp->parsed()) return run_dispersion(st);
        if (sub_roots->parsed()) return run_roots(st, window);
        if (sub_prop->parsed()) return run_propagate(st, carrier);
        if (sub_sg->parsed())
            return run_scan_gain(st, gamma1_max, sweep_points);
        if (sub_sd->parsed())
            return run_scan_delay(st, gamma1_max, sweep_points);
        if (sub_cal->parsed()) return run_calibrate(st, target);
    } catch (const ep::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
