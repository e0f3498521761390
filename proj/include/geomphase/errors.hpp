#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geomphase {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVector : Error {
    ZeroVector() : Error("vector norm below 1e-12, no ray defined") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(std::size_t a, std::size_t b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct LengthMismatch : Error {
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct OrthogonalEndpoints : Error {
    OrthogonalEndpoints() : Error("geodesic undefined between orthogonal rays") {}
};

// The Pancharatnam connection is undefined between orthogonal states.
struct OrthogonalStates : Error {
    OrthogonalStates() : Error("overlap magnitude below orthogonality cutoff") {}
};

struct OrthogonalStep : Error {
    explicit OrthogonalStep(std::size_t step)
        : Error("phase undefined at step " + std::to_string(step) +
                ": overlap magnitude below orthogonality cutoff"),
          index(step) {}
    std::size_t index;
};

struct MissingTimestamps : Error {
    MissingTimestamps() : Error("path carries no timestamps") {}
};

struct NonMonotoneTimestamps : Error {
    NonMonotoneTimestamps() : Error("timestamps must be strictly increasing") {}
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& what) : Error("invalid config: " + what) {}
};

struct GridTooCoarse : Error {
    explicit GridTooCoarse(double deviation)
        : Error("grid normalization deviates from 1 by " + std::to_string(deviation)) {}
};

struct BasisMismatch : Error {
    BasisMismatch(std::size_t a, std::size_t b)
        : Error("angular basis order mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct UnsupportedTopology : Error {
    explicit UnsupportedTopology(std::size_t count)
        : Error("energy model requires exactly one junction, got " + std::to_string(count)) {}
};

struct InvalidBeta : Error {
    explicit InvalidBeta(double beta)
        : Error("screening parameter must exceed 1, got " + std::to_string(beta)) {}
};

}  // namespace geomphase
