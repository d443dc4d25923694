#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

// Bad argument values (vertex out of range, base/exponent out of domain, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a configured size cap or would overflow.
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mcg
