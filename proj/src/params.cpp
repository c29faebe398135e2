#include "fraclap/params.hpp"

namespace fraclap {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::reject_s_range: return "REJECT_S_RANGE";
        case Errc::reject_dimension: return "REJECT_DIMENSION";
        case Errc::reject_sign: return "REJECT_SIGN";
        case Errc::bad_annulus: return "BAD_ANNULUS";
        case Errc::bad_tolerance: return "BAD_TOLERANCE";
        case Errc::bad_profile: return "BAD_PROFILE";
        case Errc::sigma_out_of_range: return "SIGMA_OUT_OF_RANGE";
        case Errc::corner_radius: return "CORNER_RADIUS";
        case Errc::non_differentiable: return "NON_DIFFERENTIABLE";
        case Errc::precondition: return "PRECONDITION";
        case Errc::inconclusive: return "INCONCLUSIVE";
        case Errc::no_certified_point: return "NO_CERTIFIED_POINT";
        case Errc::no_falsified_point: return "NO_FALSIFIED_POINT";
        case Errc::io_failure: return "IO_FAILURE";
    }
    return "UNKNOWN";
}

ProblemParams validate_params(const ProblemParams& params) {
    if (!(params.s > 0.5) || !(params.s < 1.0))
        throw Error(Errc::reject_s_range, "s must lie in (1/2, 1)");
    if (!(static_cast<double>(params.N) > 2.0 * params.s))
        throw Error(Errc::reject_dimension, "N > 2s required");
    if (!(params.p > 0.0) || !(params.lambda > 0.0) || !(params.R0 > 0.0))
        throw Error(Errc::reject_sign, "p, lambda, R0 must be positive");
    if (!(params.q >= 0.0))
        throw Error(Errc::reject_sign, "q must be nonnegative");
    return params;
}

double critical_p(int N, double s) { return N / (N - 2.0 * s); }

double q1_threshold(int N, double s) { return (N + 2.0 * s) / (N + 1.0); }

double q2_threshold(int N, double s) { return N / (N + 1.0 - 2.0 * s); }

} // namespace fraclap
