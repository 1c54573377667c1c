#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gt {

// Thrown when two objects that must share a dimension (vector lengths,
// matrix columns vs. support universe, ...) do not.
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the planners when no parameter bundle exists for the request.
class InfeasibleParameters : public std::runtime_error {
public:
    explicit InfeasibleParameters(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed GTM1/GTV1/observation files.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration cap shared by the exhaustive verifier, the brute-force decoder
// and the noise-pattern stream.  GT_ENUM_CAP in the environment overrides it.
std::uint64_t default_enum_cap();

} // namespace gt
