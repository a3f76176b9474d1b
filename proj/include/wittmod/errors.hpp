#pragma once

#include <stdexcept>
#include <string>

namespace wittmod {

/// A vector or weight left the materialized window of a module.
class WindowExceeded : public std::runtime_error {
public:
    explicit WindowExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Normal ordering exceeded the configured monomial budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live over different ranks or incompatible shapes.
class RankMismatch : public std::invalid_argument {
public:
    explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wittmod
