#ifndef CLIFF_ERRORS_HPP
#define CLIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cliff {

// Error categories map onto CLI exit codes: parse -> 2, domain -> 3,
// resource guard -> 4.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct dimension_mismatch : domain_error {
    explicit dimension_mismatch(const std::string& msg) : domain_error(msg) {}
};

struct singular_point : domain_error {
    explicit singular_point(const std::string& msg) : domain_error(msg) {}
};

struct resource_limit : std::runtime_error {
    explicit resource_limit(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cliff

#endif
