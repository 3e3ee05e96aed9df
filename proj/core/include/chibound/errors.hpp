#ifndef CHIBOUND_ERRORS_HPP
#define CHIBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chibound {

// exact-oracle input exceeds the configured size limit
struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// a structural consequence of the theory failed on this instance
// (expected at desk scale; callers fall back and record it)
struct StructuralViolation : std::runtime_error {
    StructuralViolation(const std::string& what, int vertex = -1, int index = -1)
        : std::runtime_error(what), vertex(vertex), index(index) {}
    int vertex;
    int index;
};

struct InternalInvariantError : std::logic_error {
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace chibound

#endif
