#pragma once

#include <stdexcept>
#include <string>

namespace cesolve {

/// Parameters outside the domain where a formula is defined (b <= 1/4, r <= 0, R <= 0 ...).
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure did not reach its target within the fixed budget.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal consistency assertion on a physical state fails
/// (e.g. complex Jacobi roots for a level that passed root selection).
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cesolve
