#ifndef COCONE_ERRORS_HPP
#define COCONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cocone {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A halfspace intersection has a recession direction.
struct Unbounded : Error {
    explicit Unbounded(const std::string& msg) : Error(msg) {}
};

// A halfspace system is infeasible.
struct Empty : Error {
    explicit Empty(const std::string& msg) : Error(msg) {}
};

// A point set does not affinely span the ambient space.
struct DegenerateHull : Error {
    explicit DegenerateHull(const std::string& msg) : Error(msg) {}
};

struct NotFullDimensional : Error {
    explicit NotFullDimensional(const std::string& msg) : Error(msg) {}
};

// The cone contains a line through the origin.
struct NotStrictlyConvex : Error {
    explicit NotStrictlyConvex(const std::string& msg) : Error(msg) {}
};

struct GeneratorOutsideCone : Error {
    explicit GeneratorOutsideCone(const std::string& msg) : Error(msg) {}
};

struct ConeMismatch : Error {
    explicit ConeMismatch(const std::string& msg) : Error(msg) {}
};

// The complement of the region in its cone is unbounded.
struct NotCobounded : Error {
    explicit NotCobounded(const std::string& msg) : Error(msg) {}
};

struct AlphaOutsideSemigroup : Error {
    explicit AlphaOutsideSemigroup(const std::string& msg) : Error(msg) {}
};

struct NotMPrimary : Error {
    explicit NotMPrimary(const std::string& msg) : Error(msg) {}
};

struct SemigroupMismatch : Error {
    explicit SemigroupMismatch(const std::string& msg) : Error(msg) {}
};

// Polarization produced a non-integer or non-positive multiplicity.
struct NonIntegerResult : Error {
    explicit NonIntegerResult(const std::string& msg) : Error(msg) {}
};

// Finite differences of the Hilbert-Samuel function never settled.
struct NoStabilization : Error {
    explicit NoStabilization(const std::string& msg) : Error(msg) {}
};

// An exact interpolation failed to reproduce a sample.
struct FitMismatch : Error {
    explicit FitMismatch(const std::string& msg) : Error(msg) {}
};

struct GenerationFailed : Error {
    explicit GenerationFailed(const std::string& msg) : Error(msg) {}
};

} // namespace cocone

#endif
