#include "bidyn/matrix.hpp"

namespace bidyn {

std::vector<Int> charpoly(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("charpoly: non-square matrix");
    int n = m.rows;
    // Berkowitz: iteratively build the coefficient vector via Toeplitz products
    std::vector<Int> poly{Int(1)};  // char poly of the empty matrix
    for (int k = 1; k <= n; ++k) {
        // principal k x k leading submatrix data
        // r = row (a_k1 ... a_k,k-1), c = column (a_1k ... a_k-1,k), pivot a_kk
        // powers: r * A_{k-1}^j * c
        int s = k - 1;
        std::vector<Int> toep(k + 1);
        toep[0] = 1;
        toep[1] = -m.at(s, s);
        if (s > 0) {
            // v_j = r A^{j} c for j = 0..k-2
            std::vector<Int> col(s), cur(s);
            for (int i = 0; i < s; ++i) col[i] = m.at(i, s);
            cur = col;
            for (int j = 0; j <= k - 2; ++j) {
                Int v = 0;
                for (int i = 0; i < s; ++i) v += m.at(s, i) * cur[i];
                toep[j + 2] = -v;
                if (j < k - 2) {
                    std::vector<Int> nxt(s);
                    for (int i = 0; i < s; ++i)
                        for (int t = 0; t < s; ++t) nxt[i] += m.at(i, t) * cur[t];
                    cur = std::move(nxt);
                }
            }
        }
        // multiply: newpoly = toeplitz(toep) * poly
        std::vector<Int> np(k + 1);
        for (int i = 0; i <= k; ++i) {
            Int acc = 0;
            for (int j = 0; j <= std::min<int>(i, (int)poly.size() - 1); ++j)
                acc += toep[i - j] * poly[j];
            np[i] = acc;
        }
        poly = std::move(np);
    }
    // poly[i] is the coefficient of x^{n-i}; reorder to ascending powers
    std::vector<Int> out(n + 1);
    for (int i = 0; i <= n; ++i) out[n - i] = poly[i];
    if (sgn(out[n]) < 0)
        for (auto& c : out) c = -c;
    return out;
}

int rank_rational(std::vector<std::vector<Rat>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(m[r][col]) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rat inv = Rat(1) / m[rank][col];
        for (int r = rank + 1; r < rows; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            Rat f = m[r][col] * inv;
            for (int c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

IntMat eval_poly_matrix(const std::vector<Int>& coeffs, const IntMat& m) {
    int n = m.rows;
    IntMat acc(n, n);
    IntMat pw = IntMat::identity(n);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) != 0)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) acc.at(r, c) += coeffs[i] * pw.at(r, c);
        if (i + 1 < coeffs.size()) pw = pw * m;
    }
    return acc;
}

JordanProfile jordan_profile(const IntMat& m, const Rat& lambda) {
    if (m.rows != m.cols) throw std::invalid_argument("jordan_profile: non-square");
    int n = m.rows;
    // B = M - lambda I over Q
    std::vector<std::vector<Rat>> B(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            B[i][j] = Rat(m.at(i, j));
            if (i == j) B[i][j] -= lambda;
        }
    JordanProfile prof;
    std::vector<std::vector<Rat>> pw = B;
    std::vector<int> nullity{0};
    for (int k = 1; k <= n; ++k) {
        int r = rank_rational(pw);
        prof.ranks.push_back(r);
        nullity.push_back(n - r);
        // next power
        if (k < n) {
            std::vector<std::vector<Rat>> nx(n, std::vector<Rat>(n));
            for (int i = 0; i < n; ++i)
                for (int t = 0; t < n; ++t) {
                    if (sgn(pw[i][t]) == 0) continue;
                    for (int j = 0; j < n; ++j) nx[i][j] += pw[i][t] * B[t][j];
                }
            pw = std::move(nx);
        }
    }
    prof.largest_block = 0;
    for (int k = 1; k <= n; ++k)
        if (nullity[k] > nullity[k - 1]) prof.largest_block = k;
    return prof;
}

Int det(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: non-square");
    int n = m.rows;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    Rat d(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (sgn(a[r][col]) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            d = -d;
        }
        d *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (sgn(a[r][col]) == 0) continue;
            Rat f = a[r][col] * inv;
            for (int c2 = col; c2 < n; ++c2) a[r][c2] -= f * a[col][c2];
        }
    }
    if (denominator(d) != 1) throw std::logic_error("det: non-integer result");
    return numerator(d);
}

IntMat inverse_integer(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: non-square");
    int n = m.rows;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (sgn(a[r][col]) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("inverse: singular matrix");
        std::swap(a[pivot], a[col]);
        Rat inv = Rat(1) / a[col][col];
        for (int c2 = 0; c2 < 2 * n; ++c2) a[col][c2] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rat f = a[r][col];
            for (int c2 = 0; c2 < 2 * n; ++c2) a[r][c2] -= f * a[col][c2];
        }
    }
    IntMat out(n, n);
    out.basis = m.basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = a[i][n + j];
            if (denominator(v) != 1) throw std::domain_error("inverse: not integral");
            out.at(i, j) = numerator(v);
        }
    return out;
}

} // namespace bidyn
