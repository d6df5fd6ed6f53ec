#pragma once

#include <stdexcept>
#include <string>

namespace orient {

// Input text could not be parsed (bad syntax, bad counts).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input violates a domain invariant
// (duplicate edge, loop, orientation does not cover the edge set, ...).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured search cap.
struct size_error : std::runtime_error {
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition.
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// An internal invariant that must be unreachable fired; always a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace orient
