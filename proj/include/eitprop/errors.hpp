#ifndef EITPROP_ERRORS_HPP
#define EITPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eitprop {

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& msg)
        : std::invalid_argument(msg) {}
};

// steady-state null space is not one-dimensional (e.g. no drive, no loss)
struct DegenerateSteadyState : std::runtime_error {
    explicit DegenerateSteadyState(const std::string& msg)
        : std::runtime_error(msg) {}
};

struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// pulse propagation window too small (power leaking at the grid edges)
struct WindowError : std::runtime_error {
    explicit WindowError(const std::string& msg)
        : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg)
        : std::runtime_error(msg) {}
};

}  // namespace eitprop

#endif
