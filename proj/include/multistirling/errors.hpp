#pragma once

#include <stdexcept>

namespace multistirling {

// Operands that cannot be combined, e.g. series of different truncation order.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Index beyond what a truncated object can answer exactly.
class range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Malformed literal or invalid distribution parameters.
class spec_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A check whose hypotheses do not hold for the given input.
class precondition_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace multistirling
