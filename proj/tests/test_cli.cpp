#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// CLI binary path and bundled config injected by the build.
#ifndef EITPROP_CLI_PATH
#define EITPROP_CLI_PATH "eitprop"
#endif
#ifndef EITPROP_CONFIG_PATH
#define EITPROP_CONFIG_PATH "configs/rb87_d1.json"
#endif

namespace {

int run(const std::string& args) {
    const std::string cmd =
        std::string(EITPROP_CLI_PATH) + " " + args + " > cli_stdout.txt 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("no arguments prints usage and exits 2") {
    CHECK(run("") == 2);
    const std::string out = slurp("cli_stdout.txt");
    CHECK(out.find("Usage") != std::string::npos);
}

TEST_CASE("unknown subcommand exits 2") {
    CHECK(run("frobnicate --config " EITPROP_CONFIG_PATH) == 2);
}

TEST_CASE("missing config exits 2") {
    CHECK(run("chi") == 2);
    CHECK(run("chi --config does_not_exist.json") == 2);
}

TEST_CASE("chi subcommand writes the spectrum table") {
    CHECK(run("--config " EITPROP_CONFIG_PATH
              " --output-dir . --points 101 chi") == 0);
    const std::string table = slurp("chi_spectrum.tsv");
    CHECK(table.find("delta_p/gamma3") != std::string::npos);
    CHECK(std::count(table.begin(), table.end(), '\n') >= 101);
}

TEST_CASE("same config and subcommand give byte-identical output") {
    CHECK(run("--config " EITPROP_CONFIG_PATH
              " --output-dir . --points 201 transmission") == 0);
    const std::string first = slurp("transmission_spectrum.tsv");
    CHECK(run("--config " EITPROP_CONFIG_PATH
              " --output-dir . --points 201 transmission") == 0);
    CHECK(slurp("transmission_spectrum.tsv") == first);
    REQUIRE(!first.empty());
}

TEST_CASE("serial flag reproduces the parallel output bytes") {
    CHECK(run("--config " EITPROP_CONFIG_PATH
              " --output-dir . --points 201 groupvel") == 0);
    const std::string par = slurp("inverse_group_velocity.tsv");
    CHECK(run("--config " EITPROP_CONFIG_PATH
              " --output-dir . --points 201 --serial groupvel") == 0);
    CHECK(slurp("inverse_group_velocity.tsv") == par);
}

TEST_CASE("propagate at the amplifying point reports delay and gain") {
    CHECK(run("--config " EITPROP_CONFIG_PATH
              " --output-dir . --population-split 0.3 propagate "
              "--carrier resonance") == 0);
    const std::string out = slurp("cli_stdout.txt");
    CHECK(out.find("delay = 11.2") != std::string::npos);
    CHECK(out.find("energy gain = 1.0") != std::string::npos);
}

TEST_CASE("emit-plots writes a gnuplot script") {
    CHECK(run("--config " EITPROP_CONFIG_PATH
              " --output-dir . --points 51 --emit-plots dispersion") == 0);
    const std::string gp = slurp("dispersion_spectrum.gp");
    CHECK(gp.find("plot") != std::string::npos);
    CHECK(gp.find("dispersion_spectrum.tsv") != std::string::npos);
}

TEST_CASE("roots subcommand finds the three zero-dispersion points") {
    CHECK(run("--config " EITPROP_CONFIG_PATH " --output-dir . roots") == 0);
    const std::string out = slurp("cli_stdout.txt");
    CHECK(out.find("3 zero-dispersion points") != std::string::npos);
}
