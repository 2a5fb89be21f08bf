#pragma once

#include <stdexcept>
#include <string>

namespace ncprob {

// Domain or validation failure: bad input, division by zero, no unit, wrong flavor.
struct value_error : std::runtime_error {
    explicit value_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation asked for a coefficient beyond the series truncation.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// Input that failed to parse (rationals, polynomials, words, JSON schema).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ncprob
