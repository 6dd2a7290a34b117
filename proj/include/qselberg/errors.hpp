#pragma once

#include <stdexcept>
#include <string>

namespace qselberg {

// Parameter hits a zero of a printed denominator (or a pole of the weight).
// `what()` names the offending factor so the CLI can report it.
class singular_parameter_error : public std::domain_error {
public:
    explicit singular_parameter_error(const std::string& factor)
        : std::domain_error("singular parameter: " + factor) {}
};

class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

} // namespace qselberg
