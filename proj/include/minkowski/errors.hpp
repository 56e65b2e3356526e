#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace minkowski {

/// Precondition violated by an argument (outside [0,1], tol <= 0, digit < 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Common base so callers can catch any budget failure without knowing the payload.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cell budget ran out before the requested tolerance was reached.
/// Carries whatever was computed so far; its error bound exceeds the request.
template <class Partial>
class BudgetExhausted : public BudgetError {
public:
    BudgetExhausted(const std::string& what, Partial partial)
        : BudgetError(what), partial_(std::move(partial)) {}

    const Partial& partial() const noexcept { return partial_; }

private:
    Partial partial_;
};

/// A least-squares decay fit would take the log of a value not resolved above its error.
class IllConditionedFit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace minkowski
