#pragma once

#include <stdexcept>

namespace partsym {

// Operands disagree in shape: series with different variable lists or
// truncation orders, or a permutation whose length does not match the
// partition it is applied to.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input outside an operation's mathematical domain (e.g. exponentiating a
// series with nonzero constant term, or an even dimension where an odd one
// is required).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Index or exponent outside a table cap or series truncation bound.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A quantity that must be an integer came out fractional, or an internal
// identity failed. This always signals a formula bug, never bad user input.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exhaustive enumeration was requested above the configured cell cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad command-line usage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace partsym
