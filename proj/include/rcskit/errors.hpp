#ifndef RCSKIT_ERRORS_HPP
#define RCSKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rcskit {

// Bad data or bad arguments: invariant violations, malformed records,
// out-of-domain math inputs. Maps to CLI exit code 1.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failures: missing files, unreadable/unwritable paths.
// Maps to CLI exit code 2.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rcskit

#endif
