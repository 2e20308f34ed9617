// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace spinwork {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Gamma-family function evaluated at a non-positive integer.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Argument outside an operation's domain (negative time, bad grid, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A matrix fails the unitarity invariant.
struct NotUnitaryError : Error {
    explicit NotUnitaryError(const std::string& what) : Error(what) {}
};

// Operation requires an ohmic spectrum (or otherwise unsupported bath).
struct UnsupportedSpectrumError : Error {
    explicit UnsupportedSpectrumError(const std::string& what) : Error(what) {}
};

// Node doubling failed to converge an ensemble quadrature.
struct QuadratureNotConvergedError : Error {
    explicit QuadratureNotConvergedError(const std::string& what) : Error(what) {}
};

// Fock truncation leaves too much thermal tail mass.
struct CutoffTooSmallError : Error {
    explicit CutoffTooSmallError(const std::string& what) : Error(what) {}
};

// Equal temperatures combined with observed extraction: a second-law
// violation, which can only come from a bug upstream.
struct DegenerateTemperaturesError : Error {
    explicit DegenerateTemperaturesError(const std::string& what) : Error(what) {}
};

// Malformed run configuration (CLI / config file).
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace spinwork
