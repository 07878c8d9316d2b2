#include "subring/hnf.hpp"

#include <sstream>
#include <stdexcept>

namespace subring {

HNFMatrix::HNFMatrix(std::vector<std::vector<int64_t>> rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ < 1)
        throw std::invalid_argument("HNFMatrix: dimension must be >= 1");
    a_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int i = 1; i <= n_; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != n_)
            throw std::invalid_argument("HNFMatrix: row " + std::to_string(i) + " has wrong length");
        for (int j = 1; j <= n_; ++j)
            a_[idx(i, j)] = rows[i - 1][j - 1];
    }
    for (int i = 1; i <= n_; ++i) {
        if (at(i, i) < 1)
            throw std::invalid_argument("HNFMatrix: diagonal entry a(" + std::to_string(i) + "," +
                                        std::to_string(i) + ") must be >= 1");
        for (int j = 1; j < i; ++j)
            if (at(i, j) != 0)
                throw std::invalid_argument("HNFMatrix: entry a(" + std::to_string(i) + "," +
                                            std::to_string(j) + ") below the diagonal must be 0");
        for (int j = i + 1; j <= n_; ++j)
            if (at(i, j) < 0 || at(i, j) >= at(i, i))
                throw std::invalid_argument("HNFMatrix: entry a(" + std::to_string(i) + "," +
                                            std::to_string(j) + ") must satisfy 0 <= a(i,j) < a(i,i)");
    }
}

HNFMatrix HNFMatrix::identity(int n) {
    std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        rows[i][i] = 1;
    return HNFMatrix(std::move(rows));
}

mpz_class HNFMatrix::determinant() const {
    mpz_class d = 1;
    for (int i = 1; i <= n_; ++i)
        d *= at(i, i);
    return d;
}

std::vector<int64_t> HNFMatrix::column(int j) const {
    std::vector<int64_t> v(n_);
    for (int i = 1; i <= n_; ++i)
        v[i - 1] = at(i, j);
    return v;
}

bool in_column_span(const HNFMatrix& A, const IntVector& w) {
    const int n = A.n();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("in_column_span: vector length " + std::to_string(w.size()) +
                                    " does not match dimension " + std::to_string(n));
    // Solve A x = w from the last row up; fail at the first non-divisible step.
    std::vector<mpz_class> x(n);
    mpz_class acc;
    for (int r = n; r >= 1; --r) {
        acc = w[r - 1];
        for (int k = r + 1; k <= n; ++k) {
            if (A.at(r, k) != 0)
                acc -= A.at(r, k) * x[k - 1];
        }
        if (acc % A.at(r, r) != 0)
            return false;
        x[r - 1] = acc / A.at(r, r);
    }
    return true;
}

IntVector hadamard(const IntVector& u, const IntVector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("hadamard: length mismatch");
    IntVector w(u.size());
    for (size_t i = 0; i < u.size(); ++i)
        w[i] = u[i] * v[i];
    return w;
}

bool is_subring_matrix(const HNFMatrix& A) {
    const int n = A.n();
    std::vector<IntVector> cols(n);
    for (int j = 1; j <= n; ++j) {
        auto c = A.column(j);
        cols[j - 1].assign(c.begin(), c.end());
    }
    IntVector ones(n, 1);
    if (!in_column_span(A, ones))
        return false;
    // Composite is symmetric, i <= j suffices.
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (!in_column_span(A, hadamard(cols[i - 1], cols[j - 1])))
                return false;
    return true;
}

bool is_irreducible_form(const HNFMatrix& A, int64_t p) {
    const int n = A.n();
    if (n < 2 || p < 2)
        return false;
    if (A.at(n, n) != 1)
        return false;
    for (int i = 1; i < n; ++i) {
        // diagonal must be p^{a_i} with a_i >= 1
        int64_t d = A.at(i, i);
        if (d < p || d % p != 0)
            return false;
        while (d % p == 0)
            d /= p;
        if (d != 1)
            return false;
        if (A.at(i, n) != 1)
            return false;
    }
    for (int j = 2; j < n; ++j)
        for (int i = 1; i < j; ++i)
            if (A.at(i, j) % p != 0)
                return false;
    return true;
}

HNFMatrix IrreducibleCandidate::materialize() const {
    const int m = alpha.length();
    const int n = m + 1;
    if (static_cast<int>(offdiag.size()) != m * (m - 1) / 2)
        throw std::invalid_argument("IrreducibleCandidate: wrong number of off-diagonal digits");
    std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(n, 0));
    for (int i = 1; i <= m; ++i) {
        rows[i - 1][i - 1] = pow_i64_checked(p, alpha.parts[i - 1]);
        rows[i - 1][n - 1] = 1;
    }
    rows[n - 1][n - 1] = 1;
    size_t pos = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            rows[i - 1][j - 1] = p * offdiag[pos++];
    return HNFMatrix(std::move(rows));
}

} // namespace subring
