#pragma once

#include <stdexcept>

namespace wrcomb {

// A caller violated an operation's stated precondition: mismatched orders,
// an index out of range, dependent forms where independence is required.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input: bad rational literals, bad JSON, non-homogeneous
// polynomial expressions.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wrcomb
