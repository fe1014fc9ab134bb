#pragma once

#include <stdexcept>
#include <string>

namespace ramfilt {

// Machine-readable failure modes. Domain errors (bad mathematical input)
// are distinguished from usage errors so that callers can map them to
// exit codes without string matching.
enum class errc {
    not_prime,
    not_irreducible,
    not_eisenstein,
    precision_too_small,
    non_unit,
    at_precision_zero,
    not_principal_unit,
    not_applicable,
    precision_exhausted,
    zero_input,
    zero_class,
    dimension_mismatch,
    ambient_mismatch,
    not_hyperplane,
    no_hyperplane_above,
    not_sorted,
    zeta_in_k,
    not_admissible,
    self_verification_failed,
    not_divisible,
    invalid_argument,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg);
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

namespace detail {
[[noreturn]] void assert_fail(const char* expr, const char* file, int line);
}

// Internal invariant check; a failure indicates a bug, never bad input.
#define RAMFILT_ASSERT(expr)                                              \
    do {                                                                  \
        if (!(expr)) ::ramfilt::detail::assert_fail(#expr, __FILE__, __LINE__); \
    } while (0)

}  // namespace ramfilt
