#pragma once

#include <stdexcept>
#include <string>

namespace osculant {

// Invalid input that the caller could have validated.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (cells, terms, pairs) was exhausted.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Positive-dimensional ideal, repeated roots, or other degenerate data
// that the caller is expected to resample.
struct degeneracy_error : std::runtime_error {
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace osculant
