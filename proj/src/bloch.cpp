#include "eitprop/bloch.hpp"

#include <cmath>

namespace eitprop {

namespace {

constexpr cplx I(0.0, 1.0);

// column-major position of rho_rc in vec(rho)
inline int idx(int r, int c) { return 4 * c + r; }

struct Channel {
    int from;
    int to;
    double rate;
};

}  // namespace

Generator build_generator(const AtomParams& atom, const DriveParams& drive,
                          double delta_p) {
    atom.validate();
    drive.validate();

    Eigen::Matrix4cd H = Eigen::Matrix4cd::Zero();
    H(3, 3) = delta_p;
    H(2, 2) = delta_p - drive.delta_pump;
    H(3, 1) = H(1, 3) = 0.5 * drive.omega_probe;
    H(3, 2) = H(2, 3) = 0.5 * drive.omega_pump;

    Generator gen = Generator::Zero();

    // coherent part: d(rho)/dt = -i (H rho - rho H)
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int k = 0; k < 4; ++k) {
                if (H(a, k) != 0.0) gen(idx(a, b), idx(k, b)) += -I * H(a, k);
                if (H(k, b) != 0.0) gen(idx(a, b), idx(a, k)) += I * H(k, b);
            }

    const double lam = atom.gamma_1out + drive.loss_1;
    const Channel channels[] = {
        {3, 1, atom.gamma_31}, {3, 2, atom.gamma_32}, {3, 0, atom.gamma_3out},
        {1, 0, lam},           {0, 1, drive.repump_1}, {0, 2, drive.repump_2},
        {2, 0, drive.repump_2},  // incoherent repump of |2> is two-way
    };

    double rate_out[4] = {0, 0, 0, 0};
    for (const auto& ch : channels) {
        gen(idx(ch.to, ch.to), idx(ch.from, ch.from)) += ch.rate;
        gen(idx(ch.from, ch.from), idx(ch.from, ch.from)) -= ch.rate;
        rate_out[ch.from] += ch.rate;
    }

    // coherence damping; the optical and ground coherences carry the
    // dephasings of the first-order susceptibility
    const double g3 = 0.5 * (atom.gamma_31 + atom.gamma_32);
    const double g1 = 0.5 * lam;
    double gam[4][4];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            gam[a][b] = 0.5 * (rate_out[a] + rate_out[b]);
    gam[3][1] = gam[1][3] = g3;
    gam[3][2] = gam[2][3] = g3;
    gam[2][1] = gam[1][2] = g1;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) gen(idx(a, b), idx(a, b)) -= gam[a][b];

    return gen;
}

DensityMatrix4 steady_state(const Generator& gen) {
    Generator bordered = gen;
    Eigen::Matrix<cplx, 16, 1> rhs = Eigen::Matrix<cplx, 16, 1>::Zero();
    // replace the (redundant) rho_00 row by the trace constraint
    bordered.row(idx(0, 0)).setZero();
    for (int k = 0; k < 4; ++k) bordered(idx(0, 0), idx(k, k)) = 1.0;
    rhs(idx(0, 0)) = 1.0;

    Eigen::FullPivLU<Eigen::Matrix<cplx, 16, 16>> lu(bordered);
    if (!lu.isInvertible())
        throw DegenerateSteadyState(
            "steady state is not unique (null space dimension != 1)");
    const Eigen::Matrix<cplx, 16, 1> v = lu.solve(rhs);

    const double scale = gen.cwiseAbs().maxCoeff();
    const double residual =
        scale > 0 ? (gen * v).cwiseAbs().maxCoeff() / scale : 0.0;
    if (!v.allFinite() || residual > 1e-8)
        throw DegenerateSteadyState("steady-state solve did not converge");

    DensityMatrix4 rho = Eigen::Map<const DensityMatrix4>(v.data());
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const double trace_err = std::abs(rho.trace().real() - 1.0);
    double min_diag = 1.0;
    for (int k = 0; k < 4; ++k)
        min_diag = std::min(min_diag, rho(k, k).real());
    if (herm > 1e-10 || trace_err > 1e-10 || min_diag < -1e-10)
        throw DegenerateSteadyState("steady state failed sanity checks");
    return rho;
}

Populations populations_of(const DensityMatrix4& rho) {
    const double s =
        (rho(1, 1) + rho(2, 2) + rho(3, 3)).real();
    if (s <= 0)
        throw DegenerateSteadyState("no population left in the Lambda system");
    return {rho(1, 1).real() / s, rho(2, 2).real() / s, rho(3, 3).real() / s};
}

double reservoir_population(const DensityMatrix4& rho) {
    return rho(0, 0).real();
}

namespace {

cplx extract_chi(const AtomParams& atom, const DriveParams& drive,
                 double delta_p, Populations* pops_out) {
    const Generator gen = build_generator(atom, drive, delta_p);
    const DensityMatrix4 rho = steady_state(gen);
    const double s = (rho(1, 1) + rho(2, 2) + rho(3, 3)).real();
    if (pops_out) *pops_out = populations_of(rho);
    // normalization reproduces the first-order formula in the weak-probe
    // limit (Omega_P -> 0, loss -> 0, n1 = 1: chi = 3 pi Np Gamma1/(d - i g3))
    return -3.0 * pi * atom.scaled_density * atom.gamma_31 * rho(3, 1) /
           (0.5 * drive.omega_probe * s);
}

}  // namespace

ChiNumeric weak_probe_chi(const AtomParams& atom, const DriveParams& drive,
                          double delta_p, bool check_linearity) {
    if (drive.omega_probe <= 0)
        throw InvalidParameter("weak_probe_chi: omega_probe must be > 0");
    ChiNumeric out;
    out.chi = extract_chi(atom, drive, delta_p, &out.pops);
    if (check_linearity) {
        DriveParams half = drive;
        half.omega_probe *= 0.5;
        const cplx chi_half = extract_chi(atom, half, delta_p, nullptr);
        out.halving_change = std::abs(out.chi - chi_half) / std::abs(chi_half);
        out.perturbative_warning = out.halving_change > 1e-3;
    }
    return out;
}

DriveParams drive_at_loss(const DriveParams& base, const AtomParams& atom,
                          double loss, const RepumpFactors& repumps) {
    DriveParams d = base;
    d.loss_1 = loss;
    d.repump_1 = repumps.r1 * (atom.gamma_1out + loss);
    d.repump_2 = repumps.r2 * (atom.gamma_1out + loss);
    return d;
}

std::vector<PopulationRow> population_scan(const AtomParams& atom,
                                           const DriveParams& drive_template,
                                           const RepumpFactors& repumps,
                                           const std::vector<double>& loss_grid,
                                           Execution exec) {
    std::vector<PopulationRow> rows(loss_grid.size());
    const bool par = exec == Execution::parallel;
    const int n = static_cast<int>(loss_grid.size());
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < n; ++i) {
        PopulationRow row;
        row.loss_1 = loss_grid[i];
        try {
            DriveParams d =
                drive_at_loss(drive_template, atom, loss_grid[i], repumps);
            d.omega_probe = 0.0;
            const DensityMatrix4 rho =
                steady_state(build_generator(atom, d, 0.0));
            const Populations p = populations_of(rho);
            row.n2_over_n1 = p.n2 / p.n1;
            row.n3_over_n1 = p.n3 / p.n1;
        } catch (const DegenerateSteadyState&) {
            row.valid = false;
        }
        rows[i] = row;
    }
    return rows;
}

}  // namespace eitprop
