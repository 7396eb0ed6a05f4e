#ifndef CFC_ERRORS_HPP
#define CFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfc {

// Malformed or unreadable input (files, parse errors, unknown names).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation does not hold for the given
// instance. The message names the violated condition and the offending
// vertex or edge where applicable.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The resampling loop exceeded its round budget. Expected outcome for
// scaled parameter choices outside the guaranteed regime.
struct resample_timeout : std::runtime_error {
    resample_timeout(const std::string& msg, long long resamples_, int residual_bad_)
        : std::runtime_error(msg), resamples(resamples_), residual_bad(residual_bad_) {}
    long long resamples;
    int residual_bad;
};

}  // namespace cfc

#endif
