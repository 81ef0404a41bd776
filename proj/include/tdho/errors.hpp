#ifndef TDHO_ERRORS_HPP
#define TDHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tdho {

// Bad or missing configuration (file syntax, unknown scenario, invalid field).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The auxiliary function sigma(t) reached the configured floor.
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& what, double t)
        : std::runtime_error(what), time_of_failure(t) {}
    double time_of_failure;
};

// The ODE integrator could not complete (step count, breakpoint handling).
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Grid extent insufficient for the requested field width.
class GridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tdho

#endif
