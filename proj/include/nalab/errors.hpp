#pragma once

#include <stdexcept>
#include <string>

namespace nalab {

/// Base class for everything this library throws.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& what) : error("dimension mismatch: " + what) {}
};

struct not_anticommutative : error {
    explicit not_anticommutative(const std::string& what) : error("not anticommutative: " + what) {}
};

struct not_nearly_associative : error {
    explicit not_nearly_associative(const std::string& what)
        : error("not nearly associative: " + what) {}
};

struct not_nal : error {
    explicit not_nal(const std::string& what) : error("not a nearly associative L-algebra: " + what) {}
};

struct not_quadratic : error {
    explicit not_quadratic(const std::string& what) : error("form is not quadratic: " + what) {}
};

struct not_intertwining : error {
    explicit not_intertwining(const std::string& what) : error("map does not intertwine: " + what) {}
};

struct not_invertible : error {
    explicit not_invertible(const std::string& what) : error("map is not invertible: " + what) {}
};

struct skew_required : error {
    explicit skew_required(const std::string& what) : error("skew-symmetric r required: " + what) {}
};

struct halves_not_nal : error {
    explicit halves_not_nal(const std::string& what) : error("bialgebra halves must be NAL: " + what) {}
};

/// A verified theorem failed on concrete input: either the input violated a
/// precondition certificate or there is a bug. Never caught internally.
struct internal_contradiction : error {
    explicit internal_contradiction(const std::string& what)
        : error("internal contradiction: " + what) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

struct index_out_of_range : parse_error {
    explicit index_out_of_range(const std::string& what) : parse_error("index out of range: " + what) {}
};

struct duplicate_entry : parse_error {
    explicit duplicate_entry(const std::string& what) : parse_error("duplicate entry: " + what) {}
};

} // namespace nalab
