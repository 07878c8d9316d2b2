#pragma once
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "subring/composition.hpp"
#include "subring/util.hpp"

namespace subring {

// Upper triangular integer matrix in Hermite normal form: positive diagonal,
// off-diagonal entries of row i reduced modulo the diagonal entry a(i,i).
// Indices are 1-based throughout, matching the usual matrix conventions.
class HNFMatrix {
public:
    // rows: full n x n entries, row-major. Validates HNF; throws
    // std::invalid_argument naming the offending 1-based position.
    explicit HNFMatrix(std::vector<std::vector<int64_t>> rows);

    static HNFMatrix identity(int n);

    int n() const { return n_; }
    int64_t at(int i, int j) const { return a_[idx(i, j)]; }

    mpz_class determinant() const;

    // Column j as a length-n vector.
    std::vector<int64_t> column(int j) const;

private:
    int n_;
    std::vector<int64_t> a_;
    size_t idx(int i, int j) const { return static_cast<size_t>(i - 1) * n_ + (j - 1); }
};

using IntVector = std::vector<mpz_class>;

// True iff A x = w has an integer solution x; back-substitution from the last
// row, O(n^2). Throws std::invalid_argument on dimension mismatch.
bool in_column_span(const HNFMatrix& A, const IntVector& w);

// Componentwise product u o v.
IntVector hadamard(const IntVector& u, const IntVector& v);

// Liu's subring-matrix predicate: the all-ones vector and every composite
// v_i o v_j of columns lie in the column span.
bool is_subring_matrix(const HNFMatrix& A);

// True iff A has the irreducible shape: diagonal (p^a1, ..., p^a_{n-1}, 1)
// with all a_i >= 1, every off-diagonal entry in columns 2..n-1 divisible by
// p, and the last column all ones.
bool is_irreducible_form(const HNFMatrix& A, int64_t p);

// Row-echelon data for one irreducible candidate: diagonal exponents alpha,
// prime p, and the reduced off-diagonal digits b(i,j) (matrix entry p*b(i,j))
// for 1 <= i < j <= n-1, stored row by row.
struct IrreducibleCandidate {
    int64_t p;
    Composition alpha;
    std::vector<int64_t> offdiag;

    HNFMatrix materialize() const;
};

} // namespace subring
