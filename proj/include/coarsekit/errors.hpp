#pragma once

#include <stdexcept>
#include <string>

namespace coarsekit {

/// Rejected input: malformed metric, mismatched spaces, bad precondition.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured enumeration cap was exceeded (ball size, closure size).
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t partial_count)
        : std::runtime_error(what), partial(partial_count) {}
    std::size_t partial;
};

} // namespace coarsekit
