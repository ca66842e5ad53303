#pragma once

#include <stdexcept>
#include <string>

namespace triscroll {

/// Divisor classes from two different models were combined.
struct BasisMismatchError : std::invalid_argument {
    explicit BasisMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// A lattice operation was asked of a model that cannot support it
/// (e.g. an abstract invariants-only surface, which has no basis).
struct UnsupportedModelError : std::invalid_argument {
    explicit UnsupportedModelError(const std::string& what) : std::invalid_argument(what) {}
};

/// A formula produced a non-integral value where an integer is required
/// (sectional genus parity, p_g of a branch datum, exact divisibility).
struct IntegralityError : std::invalid_argument {
    explicit IntegralityError(const std::string& what) : std::invalid_argument(what) {}
};

/// A point set cannot impose the requested number of linear conditions.
struct InfeasibleConditionsError : std::invalid_argument {
    explicit InfeasibleConditionsError(const std::string& what) : std::invalid_argument(what) {}
};

/// A relation that holds by construction failed. Indicates a bug, not bad input.
struct InternalConsistencyError : std::logic_error {
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace triscroll
