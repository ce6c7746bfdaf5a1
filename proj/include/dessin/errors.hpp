#pragma once

#include <stdexcept>
#include <string>

namespace dessin {

// Violation of a mathematical precondition (disconnected dessin, non-tree
// valency data, polynomial that is not Shabat, ...).  The CLI maps these to
// exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input (JSON shape, bad rational literal, unknown flag value).
// The CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dessin
