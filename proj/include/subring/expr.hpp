#pragma once
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "subring/polynomial.hpp"

namespace subring {

// Symbol bindings for formula evaluation (n, r, beta, gamma, k, ...).
using SymbolEnv = std::map<std::string, mpz_class>;

// Parses an arithmetic expression over +, -, *, ^, parentheses, integer
// literals, the free variable `var` (result is a polynomial in it) and any
// symbols bound in `env`. Exponents must be constant and nonnegative.
// Functions: binom(a, b) and fdiv(a, b) on constant arguments.
PolynomialQ parse_poly_expr(const std::string& text, const std::string& var, const SymbolEnv& env);

// Conjunction of comparisons "lhs OP rhs (& ...)" with OP one of
// == != <= >= < >. Both sides must be constant under `env`.
bool eval_guard(const std::string& text, const SymbolEnv& env);

// First failing clause of the guard, or nullopt if it holds.
std::optional<std::string> guard_violation(const std::string& text, const SymbolEnv& env);

} // namespace subring
