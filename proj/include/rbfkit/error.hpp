#pragma once

#include <stdexcept>
#include <string>

namespace rbfkit {

// Input outside the mathematical domain of a function (non-finite arguments,
// y < 0 for the Tricomi map, x = 0 for the exact Burger solution).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Result would overflow (I0 / exp arguments past the guard).
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

// Size, dimension or emptiness violations.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix lacks the structure an algorithm relies on.
class StructureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// r2 = 0 in the Tricomi ratio r1 / r2.
class SingularRatioError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Root-finding failures.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rbfkit
