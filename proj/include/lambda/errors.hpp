#pragma once

#include <stdexcept>
#include <string>

namespace lambda {

/// Bad input: malformed words, non-prime p, indices out of range.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured budget (terms, cells, degree) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lambda
