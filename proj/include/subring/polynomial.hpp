#pragma once
#include <string>
#include <vector>

#include <gmpxx.h>

namespace subring {

// Polynomial in one variable with exact rational coefficients, ascending
// degree, normalized so the trailing coefficient is nonzero.
class PolynomialQ {
public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<mpq_class> coeffs);
    static PolynomialQ constant(const mpq_class& c);
    static PolynomialQ variable(); // the monomial x

    const std::vector<mpq_class>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    mpq_class constant_value() const; // requires is_constant

    mpq_class eval(const mpq_class& x) const;
    // Exact integer evaluation; throws std::domain_error if non-integral.
    mpz_class eval_z(const mpz_class& x) const;

    bool integer_coefficients() const;
    std::string str(const std::string& var = "p") const;

    bool operator==(const PolynomialQ&) const = default;

    PolynomialQ operator+(const PolynomialQ&) const;
    PolynomialQ operator-(const PolynomialQ&) const;
    PolynomialQ operator*(const PolynomialQ&) const;
    PolynomialQ operator-() const;
    PolynomialQ pow(unsigned long e) const;

private:
    std::vector<mpq_class> c_;
    void normalize();
};

// Sum of c_k(p) * binom(n, k) terms; the shape of the f_n(p^e) closed forms.
struct BinomPoly {
    std::vector<std::pair<int, PolynomialQ>> terms; // distinct k, ascending

    mpz_class eval(long n, const mpz_class& p) const;
    std::string str() const;
};

} // namespace subring
