#pragma once

#include <stdexcept>
#include <string>

namespace macvogan {

/// Inputs outside a precondition (modulus mismatch, invalid field size, ...).
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation would exceed the configured desk-scale budget.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace macvogan
