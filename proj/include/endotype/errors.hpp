#pragma once

#include <stdexcept>
#include <string>

namespace endotype {

/// Malformed query text or unsupported family/size (CLI exit code 1).
struct ParseError : std::runtime_error {
    size_t position;
    explicit ParseError(const std::string& msg, size_t pos = 0)
        : std::runtime_error(msg), position(pos) {}
};

/// Input is well-formed but violates a classification precondition
/// (CLI exit code 2).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency failure, e.g. the reality trap of Lemma-level
/// invariants (CLI exit code 3).  Any occurrence is a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace endotype
