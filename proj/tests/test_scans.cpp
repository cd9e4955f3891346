#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "eitprop/io.hpp"
#include "eitprop/scans.hpp"
#include "support/fixtures.hpp"

using namespace eitprop;
using testing::default_atom;
using testing::drive_with_loss;

namespace {

std::vector<double> gamma1_grid(const AtomParams& atom, double max_gamma3,
                                int n) {
    std::vector<double> g(n);
    const double lo = 0.5 * atom.gamma_1out;
    const double hi = max_gamma3 * atom.gamma3();
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

}  // namespace

TEST_CASE("calibration: zero target gives zero density") {
    const AtomParams atom = default_atom();
    CHECK(calibrate_density(0.0, atom, drive_with_loss(atom, 0.0)) == 0.0);
}

TEST_CASE("calibration reproduces the frozen density") {
    const AtomParams atom = default_atom();
    const double np = calibrate_density(18.9, atom, drive_with_loss(atom, 0.0));
    CHECK(np == doctest::Approx(2.084303254328e-07).epsilon(1e-4));
}

TEST_CASE("delay is close to linear in the density") {
    AtomParams atom = default_atom();
    const MediumResponse r1 =
        make_response(atom, drive_with_loss(atom, 0.0), {1, 0, 0});
    AtomParams atom2 = atom;
    atom2.scaled_density *= 2.0;
    const MediumResponse r2 =
        make_response(atom2, drive_with_loss(atom2, 0.0), {1, 0, 0});
    const double d1 = propagate({}, r1).delay_m;
    const double d2 = propagate({}, r2).delay_m;
    CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(0.05));
}

TEST_CASE("unreachable calibration target raises") {
    AtomParams atom = default_atom();
    CHECK_THROWS_AS(calibrate_density(1e12, atom, drive_with_loss(atom, 0.0)),
                    CalibrationError);
}

TEST_CASE("pinned gain sweep: positive at zero dephasing, negative at 0.25") {
    const AtomParams atom = default_atom();
    const auto rows = gain_vs_dephasing(
        atom, drive_with_loss(atom, 0.2), {0.7, 0.3, 0.0},
        gamma1_grid(atom, 0.25, 26), SweepMode::pinned,
        {testing::kRepump1, testing::kRepump2});
    REQUIRE(rows.size() == 26);
    CHECK(rows.front().gain_percent > 0.0);   // gamma1 ~ 0 with n2 = 0.3
    CHECK(rows.back().gain_percent <= 0.0);   // gamma1 = 0.25 gamma3
    // monotone decrease with pinned populations
    for (size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].gain_percent < rows[i - 1].gain_percent);
}

TEST_CASE("self-consistent gain sweep has a unique interior maximum") {
    const AtomParams atom = default_atom();
    const auto rows = gain_vs_dephasing(
        atom, drive_with_loss(atom, 0.2), {0.7, 0.3, 0.0},
        gamma1_grid(atom, 0.3, 61), SweepMode::self_consistent,
        {testing::kRepump1, testing::kRepump2});
    const auto it = std::max_element(
        rows.begin(), rows.end(), [](const GainRow& a, const GainRow& b) {
            return a.gain_percent < b.gain_percent;
        });
    const size_t imax = it - rows.begin();
    CHECK(imax > 0);
    CHECK(imax < rows.size() - 1);
    CHECK(it->gain_percent > 5.0);
    // unimodal: rises before the maximum, falls after it
    for (size_t i = 1; i <= imax; ++i)
        CHECK(rows[i].gain_percent >= rows[i - 1].gain_percent);
    for (size_t i = imax + 1; i < rows.size(); ++i)
        CHECK(rows[i].gain_percent <= rows[i - 1].gain_percent);
    // frozen: maximum near gamma1 = 0.062 gamma3, ~11.8%
    CHECK(rows[imax].gamma1_over_gamma3 ==
          doctest::Approx(0.062).epsilon(0.15));
    CHECK(it->gain_percent == doctest::Approx(11.79).epsilon(0.02));
}

TEST_CASE("no gain anywhere without population in |2>") {
    const AtomParams atom = default_atom();
    const auto rows = gain_vs_dephasing(
        atom, drive_with_loss(atom, 0.0), {1.0, 0.0, 0.0},
        gamma1_grid(atom, 0.3, 31), SweepMode::pinned,
        {testing::kRepump1, testing::kRepump2});
    for (const auto& r : rows) CHECK(r.gain_percent <= 0.0);
}

TEST_CASE("delay sweep endpoints: 18.9 m anchor, below 5 m at 0.25 gamma3") {
    const AtomParams atom = default_atom();
    GaussianPulse pulse;
    const auto rows = delay_advance_vs_dephasing(
        atom, drive_with_loss(atom, 0.0), {1.0, 0.0, 0.0},
        gamma1_grid(atom, 0.25, 6), SweepMode::pinned, pulse,
        {testing::kRepump1, testing::kRepump2});
    REQUIRE(rows.size() == 6);
    CHECK(rows.front().delay_m == doctest::Approx(18.9).epsilon(1e-3));
    CHECK(rows.back().delay_m < 5.0);
    // monotone decreasing over the sweep
    for (size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].delay_m < rows[i - 1].delay_m);
    // every point reports an anomalous carrier at these parameters
    for (const auto& r : rows) {
        CHECK(r.anomalous_present);
        CHECK(r.advance_m < 0.0);
    }
}

TEST_CASE("scan rows only permute when the grid permutes") {
    const AtomParams atom = default_atom();
    auto grid = gamma1_grid(atom, 0.2, 9);
    auto rows = gain_vs_dephasing(atom, drive_with_loss(atom, 0.2),
                                  {0.7, 0.3, 0.0}, grid, SweepMode::pinned,
                                  {testing::kRepump1, testing::kRepump2});
    std::reverse(grid.begin(), grid.end());
    auto rev = gain_vs_dephasing(atom, drive_with_loss(atom, 0.2),
                                 {0.7, 0.3, 0.0}, grid, SweepMode::pinned,
                                 {testing::kRepump1, testing::kRepump2});
    std::reverse(rev.begin(), rev.end());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].gamma1_over_gamma3 == rev[i].gamma1_over_gamma3);
        CHECK(rows[i].gain_percent == rev[i].gain_percent);
    }
}

TEST_CASE("gain sweep serial/parallel equality") {
    const AtomParams atom = default_atom();
    const auto grid = gamma1_grid(atom, 0.3, 24);
    const auto a = gain_vs_dephasing(
        atom, drive_with_loss(atom, 0.2), {0.7, 0.3, 0.0}, grid,
        SweepMode::self_consistent, {testing::kRepump1, testing::kRepump2},
        Execution::serial);
    const auto b = gain_vs_dephasing(
        atom, drive_with_loss(atom, 0.2), {0.7, 0.3, 0.0}, grid,
        SweepMode::self_consistent, {testing::kRepump1, testing::kRepump2},
        Execution::parallel);
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(a[i].gain_percent == b[i].gain_percent);
}

TEST_CASE("table formatting is deterministic and tab-separated") {
    Table t;
    t.name = "sample";
    t.columns = {"x", "y"};
    t.rows = {{1.0, 2.5}, {0.1, std::nan("")}};
    const std::string a = format_table(t);
    const std::string b = format_table(t);
    CHECK(a == b);
    CHECK(a.find("# sample\n") == 0);
    CHECK(a.find("#\tx\ty\n") != std::string::npos);
    CHECK(a.find("\t2.5\n") != std::string::npos);
    CHECK(a.find("nan") != std::string::npos);
}
