#include "ramfilt/errors.hpp"

namespace ramfilt {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::not_eisenstein: return "NotEisenstein";
        case errc::precision_too_small: return "PrecisionTooSmall";
        case errc::non_unit: return "NonUnit";
        case errc::at_precision_zero: return "AtPrecisionZero";
        case errc::not_principal_unit: return "NotPrincipalUnit";
        case errc::not_applicable: return "NotApplicable";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::zero_input: return "ZeroInput";
        case errc::zero_class: return "ZeroClass";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::ambient_mismatch: return "AmbientMismatch";
        case errc::not_hyperplane: return "NotHyperplane";
        case errc::no_hyperplane_above: return "NoHyperplaneAbove";
        case errc::not_sorted: return "NotSorted";
        case errc::zeta_in_k: return "ZetaInK";
        case errc::not_admissible: return "NotAdmissible";
        case errc::self_verification_failed: return "SelfVerificationFailed";
        case errc::not_divisible: return "NotDivisible";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

Error::Error(errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(errc code, const std::string& msg) { throw Error(code, msg); }

namespace detail {
void assert_fail(const char* expr, const char* file, int line) {
    throw Error(errc::internal, std::string("assertion '") + expr + "' failed at " +
                                    file + ":" + std::to_string(line));
}
}  // namespace detail

}  // namespace ramfilt
