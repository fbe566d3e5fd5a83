#pragma once

// Independent reference computations used only by the tests. Nothing here calls the
// elimination, Berkowitz or polynomial-division code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Mat = std::vector<std::vector<Int>>;
using Poly = std::vector<Int>;  // ascending coefficients

inline Int mod(Int x, Int p) { return ((x % p) + p) % p; }

/// Inverse by scanning all residues.
inline Int inverse_by_scan(Int a, Int p) {
    for (Int x = 1; x < p; ++x)
        if (mod(a * x, p) == 1) return x;
    return 0;
}

inline Int pow_by_repeated_mul(Int a, Int e, Int p) {
    Int r = 1 % p;
    for (Int i = 0; i < e; ++i) r = mod(r * a, p);
    return r;
}

/// Leibniz expansion over all permutations.
inline Int det_leibniz(const Mat& a, Int p) {
    const auto n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Int total = 0;
    do {
        Int term = 1;
        for (std::size_t i = 0; i < n; ++i) term = mod(term * a[i][perm[i]], p);
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        total = mod(total + (inversions % 2 ? -term : term), p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, Int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
    return trim(r);
}

/// Schoolbook product, then exponents folded mod N.
inline Poly cyclic_mul(const Poly& a, const Poly& b, std::size_t n, Int p) {
    const auto full = poly_mul(a, b, p);
    Poly r(n, 0);
    for (std::size_t k = 0; k < full.size(); ++k) r[k % n] = mod(r[k % n] + full[k], p);
    return trim(r);
}

/// Characteristic polynomial det(xI - A) via reduction to upper Hessenberg form by similarity
/// transforms and the standard Hessenberg recurrence. Uses field division.
inline Poly char_poly_hessenberg(Mat a, Int p) {
    const auto n = a.size();
    for (auto& row : a)
        for (auto& x : row) x = mod(x, p);
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            std::swap(a[piv], a[k + 1]);
            for (auto& row : a) std::swap(row[piv], row[k + 1]);
        }
        const Int inv = inverse_by_scan(a[k + 1][k], p);
        for (std::size_t i = k + 2; i < n; ++i) {
            const Int f = mod(a[i][k] * inv, p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) a[i][j] = mod(a[i][j] - f * a[k + 1][j], p);
            for (std::size_t j = 0; j < n; ++j) a[j][k + 1] = mod(a[j][k + 1] + f * a[j][i], p);
        }
    }
    // c[m] = char poly of leading m x m block
    std::vector<Poly> c(n + 1);
    c[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        const std::size_t i = m - 1;
        Poly x_minus = {mod(-a[i][i], p), 1};
        Poly acc = poly_mul(x_minus, c[m - 1], p);
        Int prod = 1;
        for (std::size_t j = i; j-- > 0;) {
            prod = mod(prod * a[j + 1][j], p);
            const Int coef = mod(-a[j][i] * prod, p);
            Poly term = c[j];
            for (auto& t : term) t = mod(t * coef, p);
            acc.resize(std::max(acc.size(), term.size()), 0);
            for (std::size_t t = 0; t < term.size(); ++t) acc[t] = mod(acc[t] + term[t], p);
        }
        c[m] = trim(acc);
    }
    return c[n];
}

/// Is the polynomial irreducible? Exhaustive search for a root-free factorization by trying
/// every monic polynomial of degree 1..deg/2 via long division.
inline bool irreducible_exhaustive(const Poly& g, Int p) {
    const auto deg = g.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        Int count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (Int idx = 0; idx < count; ++idx) {
            Poly f(d + 1, 0);
            f[d] = 1;
            Int x = idx;
            for (std::size_t i = 0; i < d; ++i, x /= p) f[i] = x % p;
            Poly r = g;
            for (std::size_t k = r.size(); k-- > d;) {
                const Int c = r[k];
                if (c == 0) continue;
                for (std::size_t j = 0; j <= d; ++j) r[k - d + j] = mod(r[k - d + j] - c * f[j], p);
            }
            if (trim(r).empty()) return false;
        }
    }
    return true;
}

inline Mat random_matrix(std::size_t rows, std::size_t cols, Int p, std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> d(0, p - 1);
    Mat a(rows, std::vector<Int>(cols));
    for (auto& r : a)
        for (auto& x : r) x = d(rng);
    return a;
}

} // namespace oracle
