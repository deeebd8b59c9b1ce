#ifndef BIDYN_MATRIX_HPP
#define BIDYN_MATRIX_HPP

#include <string>
#include <vector>

#include "bidyn/numeric.hpp"

namespace bidyn {

/// dense integer matrix with an optional ordered basis tag
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;
    std::vector<std::string> basis;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    friend IntMat operator*(const IntMat& x, const IntMat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("matrix product: dimension mismatch");
        IntMat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (sgn(x.at(i, k)) == 0) continue;
                for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        r.basis = x.basis.empty() ? y.basis : x.basis;
        return r;
    }

    friend IntMat operator+(const IntMat& x, const IntMat& y) {
        if (x.rows != y.rows || x.cols != y.cols)
            throw std::invalid_argument("matrix sum: dimension mismatch");
        IntMat r = x;
        for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
        return r;
    }

    IntMat transposed() const {
        IntMat r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if ((int)v.size() != cols) throw std::invalid_argument("matrix apply: dimension mismatch");
        std::vector<Int> r(rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    bool equal_entries(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    IntMat permuted(const std::vector<int>& perm) const {
        // conjugate by the permutation: new[i][j] = old[perm[i]][perm[j]]
        IntMat r(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(i, j) = at(perm[i], perm[j]);
        return r;
    }
};

/// characteristic polynomial det(x I - M), monic, by the division-free
/// Berkowitz method; coefficient i multiplies x^i
std::vector<Int> charpoly(const IntMat& m);

/// exact rank over Q
int rank_rational(std::vector<std::vector<Rat>> m);

/// evaluate a polynomial at the matrix (Cayley-Hamilton checks)
IntMat eval_poly_matrix(const std::vector<Int>& coeffs, const IntMat& m);

struct JordanProfile {
    std::vector<int> ranks;  // rank of (M - lambda I)^k for k = 1..n
    int largest_block = 0;
};

/// rank profile of powers of (M - lambda I); block sizes from nullity jumps
JordanProfile jordan_profile(const IntMat& m, const Rat& lambda);

/// det via Bareiss fraction-free elimination
Int det(const IntMat& m);

/// exact inverse of a unimodular-ish integer matrix; throws when the inverse
/// is not integral
IntMat inverse_integer(const IntMat& m);

} // namespace bidyn

#endif
