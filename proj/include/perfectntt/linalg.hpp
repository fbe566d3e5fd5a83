#pragma once

// Elimination-based linear algebra over GF(p): RREF, kernels, determinant, inverse,
// characteristic polynomial and multiplicative order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace perfectntt {

class singular_matrix : public field_error {
public:
    explicit singular_matrix(const std::string& what) : field_error(what + ": matrix is singular (det = 0)") {}
    std::uint32_t determinant() const { return 0; }
};

struct RrefResult {
    FieldMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero entry at or below
/// the current row, so the output is deterministic.
inline RrefResult rref(const FieldMatrix& a) {
    const auto& m = a.modulus();
    const auto rows = a.rows(), cols = a.cols();
    std::vector<std::vector<std::uint32_t>> w(rows);
    for (std::size_t i = 0; i < rows; ++i) w[i].assign(a.row_span(i).begin(), a.row_span(i).end());

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && w[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(w[r], w[piv]);
        const auto scale = m.inv(w[r][c]);
        for (auto& x : w[r]) x = m.mul(x, scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            const auto f = w[i][c];
            for (std::size_t j = c; j < cols; ++j) w[i][j] = m.sub(w[i][j], m.mul(f, w[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }

    FieldMatrix reduced(m, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) reduced.set(i, j, w[i][j]);
    return {std::move(reduced), r, std::move(pivots)};
}

inline std::size_t rank(const FieldMatrix& a) { return rref(a).rank; }

/// Nonzero rows of the RREF: a canonical basis of the row space. Two matrices span the same
/// row space iff their canonical bases are equal.
inline FieldMatrix canonical_row_basis(const FieldMatrix& a) {
    auto r = rref(a);
    return r.reduced.block(0, 0, r.rank, a.cols());
}

inline bool same_row_space(const FieldMatrix& a, const FieldMatrix& b) {
    return a.cols() == b.cols() && canonical_row_basis(a) == canonical_row_basis(b);
}

/// Right null space {v : a v = 0}, one basis vector per row, in canonical (RREF) form.
inline FieldMatrix kernel_basis(const FieldMatrix& a) {
    const auto& m = a.modulus();
    const auto cols = a.cols();
    auto r = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : r.pivot_columns) is_pivot[c] = true;

    FieldMatrix basis(m, cols - r.rank, cols);
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        basis.set(k, f, 1);
        for (std::size_t i = 0; i < r.rank; ++i) basis.set(k, r.pivot_columns[i], m.neg(r.reduced(i, f)));
        ++k;
    }
    return canonical_row_basis(basis);
}

inline FieldElement determinant(const FieldMatrix& a) {
    if (!a.is_square()) throw dimension_error("determinant of a non-square matrix");
    const auto& m = a.modulus();
    const auto n = a.rows();
    std::vector<std::vector<std::uint32_t>> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i].assign(a.row_span(i).begin(), a.row_span(i).end());

    std::uint32_t det = 1 % m.value();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w[piv][c] == 0) ++piv;
        if (piv == n) return FieldElement::zero(m);
        if (piv != c) {
            std::swap(w[c], w[piv]);
            det = m.neg(det);
        }
        det = m.mul(det, w[c][c]);
        const auto inv = m.inv(w[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (w[i][c] == 0) continue;
            const auto f = m.mul(w[i][c], inv);
            for (std::size_t j = c; j < n; ++j) w[i][j] = m.sub(w[i][j], m.mul(f, w[c][j]));
        }
    }
    return {det, m};
}

/// Gauss-Jordan on [a | I].
inline FieldMatrix inverse(const FieldMatrix& a) {
    if (!a.is_square()) throw dimension_error("inverse of a non-square matrix");
    const auto n = a.rows();
    FieldMatrix aug(a.modulus(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a(i, j));
        aug.set(i, n + i, 1);
    }
    auto r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivot_columns[n - 1] != n - 1)) throw singular_matrix("inverse");
    return r.reduced.block(0, n, n, n);
}

inline FieldMatrix mat_pow(const FieldMatrix& a, std::uint64_t e) {
    if (!a.is_square()) throw dimension_error("power of a non-square matrix");
    auto result = FieldMatrix::identity(a.modulus(), a.rows());
    auto base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

/// det(xI - a) by Berkowitz's algorithm. Only ring operations are used, so nothing is
/// divided and the result is exact in any characteristic.
inline FieldPoly char_poly(const FieldMatrix& a) {
    if (!a.is_square()) throw dimension_error("characteristic polynomial of a non-square matrix");
    const auto& m = a.modulus();
    const auto n = a.rows();
    if (n == 0) return FieldPoly(m, {1});

    // c holds the coefficients of the leading r x r principal minor's polynomial, highest degree first.
    std::vector<std::uint32_t> c{1, m.neg(a(0, 0))};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S
        // with R = a[r][0..r), S = a[0..r)[r], M = a[0..r)[0..r).
        std::vector<std::uint32_t> q(r + 2);
        q[0] = 1;
        q[1] = m.neg(a(r, r));
        std::vector<std::uint32_t> s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            std::uint64_t dot = 0;
            for (std::size_t j = 0; j < r; ++j) dot = (dot + std::uint64_t{a(r, j)} * s[j]) % m.value();
            q[k + 2] = m.neg(static_cast<std::uint32_t>(dot));
            if (k + 1 == r) break;
            std::vector<std::uint32_t> next(r, 0);
            for (std::size_t i = 0; i < r; ++i) {
                std::uint64_t acc = 0;
                for (std::size_t j = 0; j < r; ++j) acc = (acc + std::uint64_t{a(i, j)} * s[j]) % m.value();
                next[i] = static_cast<std::uint32_t>(acc);
            }
            s = std::move(next);
        }
        std::vector<std::uint32_t> next_c(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                next_c[i] = m.add(next_c[i], m.mul(q[i - j], c[j]));
        c = std::move(next_c);
    }

    std::vector<std::int64_t> ascending(c.rbegin(), c.rend());
    return FieldPoly(m, ascending);
}

/// Evaluates p(a) = sum_k p_k a^k by Horner's rule on matrices.
inline FieldMatrix poly_eval_matrix(const FieldPoly& p, const FieldMatrix& a) {
    require_same(p.modulus(), a.modulus());
    if (!a.is_square()) throw dimension_error("matrix polynomial needs a square matrix");
    const auto n = a.rows();
    FieldMatrix acc(a.modulus(), n, n);
    const auto id = FieldMatrix::identity(a.modulus(), n);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * a + FieldElement(p.coeff(k), a.modulus()) * id;
    return acc;
}

inline constexpr std::uint64_t default_order_cap = 1'000'000;

/// Smallest e >= 1 with a^e = I, or nullopt if none is found up to `cap`.
inline std::optional<std::uint64_t> multiplicative_order(const FieldMatrix& a, std::uint64_t cap = default_order_cap) {
    if (!a.is_square()) throw dimension_error("order of a non-square matrix");
    if (determinant(a).is_zero()) throw singular_matrix("multiplicative order");
    const auto id = FieldMatrix::identity(a.modulus(), a.rows());
    auto power = a;
    for (std::uint64_t e = 1; e <= cap; ++e) {
        if (power == id) return e;
        power = power * a;
    }
    return std::nullopt;
}

} // namespace perfectntt
