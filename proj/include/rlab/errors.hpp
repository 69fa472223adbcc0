#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rlab {

// Bad files, bad flags, malformed domain objects. CLI exit code 2.
struct InvalidInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its stated contract. CLI exit code 2.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search ran out of its node budget before reaching a decision.
// Never converted into a boolean answer. CLI exit code 3.
struct InconclusiveError : std::runtime_error {
    std::uint64_t nodes_explored;
    explicit InconclusiveError(std::uint64_t nodes)
        : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"),
          nodes_explored(nodes) {}
};

} // namespace rlab
