#pragma once

#include <stdexcept>
#include <string>

namespace eisenheron {

/// Input outside an operation's mathematical domain (negative radicand, square D, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed value object: degenerate triangle, mixed-parity (u,v,w), bad figure spec.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input that the operation does not handle, e.g. a triangle without
/// an integral area quantum.
class UnsupportedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A perimeter-dominant lattice-Heron triangle that matches none of the known
/// families. Unreachable unless the classifier (or the theorem) is wrong.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The embedding search exhausted its space for an admissible triangle.
class EmbeddabilityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace eisenheron
