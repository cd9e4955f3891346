#include "eitprop/config.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

namespace eitprop {

namespace {

using nlohmann::json;

// Rate-valued entry "<name>_mhz" / "<name>_khz" / "<name>_gamma3"; values
// in ordinary frequency are converted to angular. gamma3 < 0 marks it as
// not yet derivable.
double read_rate(const json& obj, const std::string& name, double gamma3,
                 double fallback) {
    const std::string mhz = name + "_mhz";
    const std::string khz = name + "_khz";
    const std::string g3 = name + "_gamma3";
    int found = 0;
    double value = fallback;
    if (obj.contains(mhz)) {
        value = two_pi * obj.at(mhz).get<double>() * 1e6;
        ++found;
    }
    if (obj.contains(khz)) {
        value = two_pi * obj.at(khz).get<double>() * 1e3;
        ++found;
    }
    if (obj.contains(g3)) {
        if (gamma3 < 0)
            throw ConfigError(name + "_gamma3 used before gamma3 is known");
        value = obj.at(g3).get<double>() * gamma3;
        ++found;
    }
    if (found > 1) throw ConfigError(name + ": multiple unit suffixes given");
    return value;
}

double read_rate_required(const json& obj, const std::string& name,
                          double gamma3) {
    const double v = read_rate(obj, name, gamma3, std::nan(""));
    if (std::isnan(v))
        throw ConfigError(name + ": missing (expect _mhz/_khz/_gamma3 key)");
    return v;
}

}  // namespace

DriveParams SimConfig::drive_at(double loss) const {
    DriveParams d;
    d.omega_pump = omega_pump;
    d.delta_pump = delta_pump;
    d.omega_probe = probe_fraction * omega_pump;
    d.loss_1 = loss;
    d.repump_1 = repumps.r1 * (atom.gamma_1out + loss);
    d.repump_2 = repumps.r2 * (atom.gamma_1out + loss);
    return d;
}

SimConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    SimConfig cfg;
    const json& atom = j.at("atom");
    cfg.atom.gamma_31 = read_rate_required(atom, "gamma_31", -1.0);
    cfg.atom.gamma_32 = read_rate_required(atom, "gamma_32", -1.0);
    const double gamma3 = 0.5 * (cfg.atom.gamma_31 + cfg.atom.gamma_32);
    cfg.atom.gamma_1out = read_rate(atom, "gamma_1out", gamma3, 0.0);
    cfg.atom.gamma_3out = read_rate(atom, "gamma_3out", gamma3, 0.0);
    cfg.atom.lambda_p = atom.at("lambda_p_nm").get<double>() * 1e-9;
    cfg.atom.cell_length = atom.at("cell_length_m").get<double>();
    cfg.atom.scaled_density = atom.value("scaled_density", 0.0);
    cfg.atom.validate();

    const json& drive = j.at("drive");
    cfg.omega_pump = read_rate_required(drive, "omega_pump", gamma3);
    cfg.delta_pump = read_rate(drive, "delta_pump", gamma3, 0.0);
    cfg.probe_fraction = drive.value("probe_fraction", 1e-3);
    cfg.loss_1 = read_rate(drive, "loss_1", gamma3, 0.0);
    cfg.repumps.r1 = drive.value("repump_factor_1", 10.0);
    cfg.repumps.r2 = drive.value("repump_factor_2", 10.0);

    const double split = j.value("population_split", 0.0);
    if (split < 0 || split > 1)
        throw ConfigError("population_split must lie in [0, 1]");
    cfg.pinned_pops = {1.0 - split, split, 0.0};

    if (j.contains("pulse")) {
        const json& pulse = j.at("pulse");
        cfg.pulse.tau = pulse.value("tau_ns", 333.0) * 1e-9;
        cfg.pulse.window_factor = pulse.value("window_tau_factor", 16.0);
        cfg.pulse.samples = pulse.value("samples", 1 << 14);
    }
    if (j.contains("grid")) {
        const json& grid = j.at("grid");
        cfg.grid_min_gamma3 = grid.value("delta_min_gamma3", -3.0);
        cfg.grid_max_gamma3 = grid.value("delta_max_gamma3", 3.0);
        cfg.grid_points = grid.value("points", 601);
    }
    cfg.drive().validate();
    return cfg;
}

}  // namespace eitprop
