#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhopf {

// Violated mathematical precondition (lattice mismatch, too many rows, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; pos is a 0-based offset into the source string.
struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

}  // namespace qhopf
