#pragma once

#include <stdexcept>
#include <string>

namespace fdalg {

// Malformed input: parse errors, index bounds, non-prime moduli, size mismatches.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A presentation that parsed fine but fails an algebraic identity
// (associativity, unit axioms, module compatibility).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The algebra is not split over its ground field.
struct not_split_error : std::runtime_error {
    explicit not_split_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Automatic idempotent search cannot proceed over this field; the caller
// must supply idempotents in the input file.
struct needs_supplied_error : std::runtime_error {
    explicit needs_supplied_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A randomized search ran out of its retry budget.
struct retry_exhausted_error : std::runtime_error {
    explicit retry_exhausted_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A self-check failed after a computation: the result would have been wrong.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace fdalg
