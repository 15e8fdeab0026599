#pragma once

#include <stdexcept>
#include <string>

namespace a2skein {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct non_unit_denominator : error {
    explicit non_unit_denominator(const std::string& msg = "denominator is not a unit over the integers")
        : error(msg) {}
};

struct negative_argument : error {
    explicit negative_argument(const std::string& msg) : error(msg) {}
};

struct parts_sum_mismatch : error {
    explicit parts_sum_mismatch(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

struct clasp_present : error {
    clasp_present() : error("diagram contains clasp boxes; expand clasps first") {}
};

struct stuck_diagram : error {
    stuck_diagram() : error("no reducible face found in a non-basis diagram") {}
};

struct commutation_violated : error {
    explicit commutation_violated(const std::string& msg) : error(msg) {}
};

struct index_out_of_range : error {
    explicit index_out_of_range(const std::string& msg) : error(msg) {}
};

struct denominator_not_cleared : error {
    explicit denominator_not_cleared(const std::string& msg) : error(msg) {}
};

struct fractional_residue : error {
    explicit fractional_residue(const std::string& msg) : error(msg) {}
};

struct overflow_error : error {
    overflow_error() : error("integer overflow in coefficient arithmetic") {}
};

} // namespace a2skein
