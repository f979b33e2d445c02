#pragma once

#include <stdexcept>
#include <string>

namespace thurstonlab {

// Machine-readable reason codes carried by domain exceptions. The CLI maps
// precondition_error to exit code 2 and input_error to exit code 1.
enum class errc {
    dimension_mismatch,
    zero_polynomial,
    empty_input,
    zero_vector,
    asymmetric,
    non_integral_vertex,
    zero_norm_face,
    no_fibered_marks,
    torsion_euler,
    not_divisible,
    gysin_violation,
    zero_euler_class,
    exponent_overflow,
    bad_schema,
};

const char* to_string(errc c);

class precondition_error : public std::runtime_error {
public:
    precondition_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace thurstonlab
