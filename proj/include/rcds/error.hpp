#ifndef RCDS_ERROR_HPP
#define RCDS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rcds {

/// Thrown on malformed input, dimension mismatches and violated preconditions.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rcds

#endif
