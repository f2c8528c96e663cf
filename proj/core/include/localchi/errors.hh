/**
 * @file errors.hh
 * @brief Error taxonomy mirrored by the CLI exit codes.
 */
#ifndef LOCALCHI_ERRORS_HH
#define LOCALCHI_ERRORS_HH

#include <stdexcept>
#include <string>

namespace localchi {

// rejected input (malformed polynomial, out-of-support monomial, bad range)
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& m) : std::runtime_error(m) {}
};

// the truncation escalation failed to certify a stable presentation
struct stabilization_error : std::runtime_error {
    explicit stabilization_error(const std::string& m) : std::runtime_error(m) {}
};

// a module expected to have finite length does not (insufficient truncation)
struct divergence_error : std::runtime_error {
    explicit divergence_error(const std::string& m) : std::runtime_error(m) {}
};

// two independent computations of the same invariant disagree
struct crosscheck_error : std::runtime_error {
    explicit crosscheck_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace localchi

#endif
