#pragma once

#include <stdexcept>
#include <string>

namespace sicforge {

// Error hierarchy. Input/contract violations derive from std::invalid_argument,
// resource guards and internal consistency failures from std::runtime_error.

struct ZeroInverse : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ModulusMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotUnitary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotFiducial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotASic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signals an implementation bug, not bad input: the synthesized operator
// failed its defining conjugation law.
struct SynthesisCheckFailed : std::logic_error {
    using std::logic_error::logic_error;
};

struct VanishingTrace : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sicforge
