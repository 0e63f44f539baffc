// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_ERROR_HPP
#define PMDCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pmd {

enum class ErrorCode {
    invalid_argument,
    parse_error,
    vertex_out_of_range,
    empty_edge,
    clutter_violation,
    duplicate_edge,
    index_out_of_range,
    not_uniform,
    not_a_tree,
    no_edges,
    pivot_isolated,
    t_out_of_range,
    n_too_small,
    invalid_d,
    shape_mismatch,
    not_homogeneous_strict,
    star_decomposition_violation,
    contradiction_detected,
    internal_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace pmd

#endif
