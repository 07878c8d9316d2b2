#pragma once
#include <stdexcept>
#include <string>

namespace subring {

// Search space (or brute-force iteration space) exceeds the configured budget.
// `size` is the exact space size as a decimal string.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::string what, std::string size)
        : std::runtime_error(std::move(what)), size_(std::move(size)) {}
    const std::string& size() const { return size_; }

private:
    std::string size_;
};

// A closed-form formula was evaluated outside its validity domain.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Result cache is malformed or contradicts a fresh computation.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace subring
