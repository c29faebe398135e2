#pragma once

#include <stdexcept>
#include <string>

namespace fraclap {

// Error codes mirror the failure modes named in the public contracts; the CLI
// maps them to exit code 1.
enum class Errc {
    reject_s_range,
    reject_dimension,
    reject_sign,
    bad_annulus,
    bad_tolerance,
    bad_profile,
    sigma_out_of_range,
    corner_radius,
    non_differentiable,
    precondition,
    inconclusive,
    no_certified_point,
    no_falsified_point,
    io_failure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace fraclap
