#pragma once

#include <stdexcept>
#include <string>

namespace bandlim {

/// Precondition violations (bad orderings, shapes, parameter ranges).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Grids that do not share (a, b, h).
class IncompatibleGrid : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Derivative order above the configured kernel table maximum.
class UnsupportedOrder : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Grid too coarse for the requested bandwidth.
class ResolutionError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Quadrature window too small for the certified tail budget.
class WindowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root scan found no sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Frame bounds degenerate (A_eps = 0), no relaxation parameter exists.
class DegenerateBounds : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bandlim
