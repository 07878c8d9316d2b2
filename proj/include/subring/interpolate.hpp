#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "subring/composition.hpp"
#include "subring/enumerate.hpp"
#include "subring/polynomial.hpp"

namespace subring {

// Unique interpolating polynomial of degree < #samples through the given
// points, exact rational coefficients. Throws on duplicate abscissae or
// fewer than two samples.
PolynomialQ lagrange_fit(const std::vector<std::pair<mpz_class, mpz_class>>& samples);

enum class FitStatus { CONFIRMED, REFUTED, UNDETERMINED };

std::string fit_status_name(FitStatus s);

struct FitConfirmation {
    int64_t prime;
    mpz_class predicted;
    mpz_class counted;
};

struct FitReport {
    PolynomialQ poly;
    bool integer_coeffs = false;
    FitStatus status = FitStatus::UNDETERMINED;
    std::string note;
    std::vector<FitConfirmation> confirmations;
};

// Enumerates g_alpha at the fit primes, interpolates, then re-enumerates at
// the held-out primes. CONFIRMED needs integer coefficients and at least one
// matching held-out prime; any held-out mismatch is REFUTED; budget refusals
// and missing evidence leave the verdict UNDETERMINED.
FitReport fit_and_confirm(const Composition& alpha, const std::vector<int64_t>& fit_primes,
                          const std::vector<int64_t>& confirm_primes,
                          const EnumerateOptions& opt = {});

} // namespace subring
