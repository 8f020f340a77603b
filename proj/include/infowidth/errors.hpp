#pragma once

#include <stdexcept>
#include <string>

namespace infowidth {

// Argument outside the mathematical domain of an operation (empty set, l <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Query parameter outside the supported range (l outside the width range, n too large, ...).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Operation not defined for the given representation or (method, property) pair.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Quantity is undefined, e.g. a cost with zero information in the denominator.
class UndefinedValueError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Computation cannot be carried out within the practical budget (rejection sampling caps).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Asymptotic evaluator called outside the regime its formula was derived for.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace infowidth
