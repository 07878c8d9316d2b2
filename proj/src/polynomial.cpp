#include "subring/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "subring/util.hpp"

namespace subring {

PolynomialQ::PolynomialQ(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_)
        q.canonicalize();
    normalize();
}

void PolynomialQ::normalize() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

PolynomialQ PolynomialQ::constant(const mpq_class& v) {
    return PolynomialQ(std::vector<mpq_class>{v});
}

PolynomialQ PolynomialQ::variable() {
    return PolynomialQ(std::vector<mpq_class>{0, 1});
}

mpq_class PolynomialQ::constant_value() const {
    if (!is_constant())
        throw std::domain_error("polynomial is not constant");
    return c_.empty() ? mpq_class(0) : c_[0];
}

mpq_class PolynomialQ::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpz_class PolynomialQ::eval_z(const mpz_class& x) const {
    mpq_class v = eval(mpq_class(x));
    if (v.get_den() != 1)
        throw std::domain_error("polynomial value is not an integer: " + v.get_str());
    return v.get_num();
}

bool PolynomialQ::integer_coefficients() const {
    for (const auto& q : c_)
        if (q.get_den() != 1)
            return false;
    return true;
}

std::string PolynomialQ::str(const std::string& var) const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const mpq_class& q = c_[d];
        if (q == 0)
            continue;
        mpq_class a = q;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        bool unit = (a == 1);
        if (d == 0 || !unit)
            os << a.get_str();
        if (d > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (d > 1)
                os << "^" << d;
        }
    }
    return os.str();
}

PolynomialQ PolynomialQ::operator+(const PolynomialQ& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i)
        r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        r[i] += o.c_[i];
    return PolynomialQ(std::move(r));
}

PolynomialQ PolynomialQ::operator-() const {
    std::vector<mpq_class> r = c_;
    for (auto& q : r)
        q = -q;
    return PolynomialQ(std::move(r));
}

PolynomialQ PolynomialQ::operator-(const PolynomialQ& o) const {
    return *this + (-o);
}

PolynomialQ PolynomialQ::operator*(const PolynomialQ& o) const {
    if (c_.empty() || o.c_.empty())
        return PolynomialQ();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return PolynomialQ(std::move(r));
}

PolynomialQ PolynomialQ::pow(unsigned long e) const {
    PolynomialQ r = constant(1);
    for (unsigned long i = 0; i < e; ++i)
        r = r * (*this);
    return r;
}

mpz_class BinomPoly::eval(long n, const mpz_class& p) const {
    mpz_class acc = 0;
    for (const auto& [k, poly] : terms) {
        mpz_class b = binomial(n, k);
        if (b == 0)
            continue;
        acc += b * poly.eval_z(p);
    }
    return acc;
}

std::string BinomPoly::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i)
            os << " + ";
        os << "binom(n," << terms[i].first << ")*(" << terms[i].second.str() << ")";
    }
    return os.str();
}

} // namespace subring
