#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geocount {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (bad dimensions, non-integer entries
// where integers are required, singular matrices passed where regular ones
// are expected, and so on).
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

// The root data fail one of the structural checks: crystallographic
// integrality, closure under the generated reflections, or decomposability
// against the simple system.
struct InvalidRootSystem : Error {
    explicit InvalidRootSystem(const std::string& what) : Error(what) {}
};

// A lookup by name failed.
struct NotFound : Error {
    explicit NotFound(const std::string& what) : Error(what) {}
};

// The requested operation is outside what this build implements.
struct NotSupported : Error {
    explicit NotSupported(const std::string& what) : Error(what) {}
};

// Group enumeration exceeded the configured element cap.  partial_count is
// the number of distinct elements found before giving up.
struct GroupTooLarge : Error {
    std::uint64_t partial_count;
    GroupTooLarge(const std::string& what, std::uint64_t count)
        : Error(what), partial_count(count) {}
};

// An internal cross-check failed.  Indicates a bug, not bad input.
struct InternalInvariantViolation : Error {
    explicit InternalInvariantViolation(const std::string& what) : Error(what) {}
};

}  // namespace geocount
