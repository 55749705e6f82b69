#pragma once

#include <stdexcept>
#include <string>

namespace laz {

// Raised when an operation's input violates a documented precondition
// (gcd(a2, N) != 1, K < N, composite order, ...). The CLI maps it to exit 3.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed sequence-set / metadata files.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace laz
