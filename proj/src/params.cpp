#include "eitprop/params.hpp"

namespace eitprop {

void AtomParams::validate() const {
    if (gamma_31 < 0 || gamma_32 < 0 || gamma_3out < 0 || gamma_1out < 0)
        throw InvalidParameter("atom: decay rates must be >= 0");
    if (lambda_p <= 0) throw InvalidParameter("atom: lambda_p must be > 0");
    if (cell_length <= 0)
        throw InvalidParameter("atom: cell_length must be > 0");
    if (scaled_density < 0)
        throw InvalidParameter("atom: scaled_density must be >= 0");
}

void DriveParams::validate() const {
    if (omega_pump < 0 || omega_probe < 0)
        throw InvalidParameter("drive: Rabi frequencies must be >= 0");
    if (loss_1 < 0 || repump_1 < 0 || repump_2 < 0)
        throw InvalidParameter("drive: incoherent rates must be >= 0");
}

void Populations::validate() const {
    const double slack = 1e-10;
    if (n1 < -slack || n2 < -slack || n3 < -slack || n1 > 1 + slack ||
        n2 > 1 + slack || n3 > 1 + slack)
        throw InvalidParameter("populations must lie in [0, 1]");
    if (n1 + n2 + n3 > 1 + 1e-9)
        throw InvalidParameter("populations must sum to at most 1");
}

Dephasings derive_dephasings(const AtomParams& atom,
                             const DriveParams& drive) {
    atom.validate();
    drive.validate();
    return {0.5 * (atom.gamma_1out + drive.loss_1),
            0.5 * (atom.gamma_31 + atom.gamma_32)};
}

FrequencyGrid::FrequencyGrid(double lo, double hi, int n, double omega31)
    : delta_min(lo), delta_max(hi), count(n), omega_ref(omega31) {
    if (n < 2) throw InvalidParameter("grid: need at least 2 points");
    if (!(hi > lo)) throw InvalidParameter("grid: must be increasing");
}

std::vector<double> FrequencyGrid::deltas() const {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = delta(i);
    return out;
}

}  // namespace eitprop
