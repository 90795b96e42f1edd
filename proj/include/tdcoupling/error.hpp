// error.hpp: exception types shared by every module

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace tdc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (negative time, bad dimensions, ...).
struct DomainError : Error {
    using Error::Error;
};

// A finite Fock cutoff would discard more probability than allowed.
struct TruncationError : Error {
    using Error::Error;
};

// Integration or decomposition drifted outside its accuracy contract.
struct NumericalError : Error {
    using Error::Error;
};

// Malformed scenario configuration or input file.
struct ConfigError : Error {
    using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
    if (!condition) throw DomainError(what);
}

// Short form of a number for messages; keeps tiny values visible.
inline std::string show(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

} // namespace detail

} // namespace tdc
