#pragma once

// Perfect linear block codes over GF(p): Hamming parity-check matrices, cyclic parity
// polynomials and the fixed Golay data.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace perfectntt {

class unsupported_parameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CodeSpec {
    std::string label;
    PrimeModulus modulus;
    std::size_t length;     // N
    std::size_t dimension;  // k
    std::size_t distance;   // d
    FieldMatrix parity_check;  // (N - k) x N
    std::optional<FieldPoly> parity_poly;

    std::size_t redundancy() const { return length - dimension; }
};

// Exact unsigned integer helpers for counting identities. Overflow throws.
namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

} // namespace detail

inline std::uint64_t ipow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = detail::checked_mul(r, base);
    return r;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = detail::checked_mul(r, n - k + i) / i;
    return r;
}

/// Number of words within Hamming distance t of a fixed word: sum_{i<=t} (p-1)^i C(N, i).
inline std::uint64_t hamming_ball_volume(std::uint64_t p, std::uint64_t n, std::uint64_t t) {
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i <= t && i <= n; ++i)
        total = detail::checked_add(total, detail::checked_mul(ipow(p - 1, i), binomial(n, i)));
    return total;
}

/// N = (p^m - 1) / (p - 1)
inline std::size_t hamming_length(std::uint32_t p, std::size_t m) {
    return static_cast<std::size_t>((ipow(p, m) - 1) / (p - 1));
}

/// Parity-check matrix whose columns are the projective points of GF(p)^m, each written with
/// its first nonzero coordinate equal to 1, in lexicographic order (top row most significant).
inline CodeSpec hamming_parity_check(std::uint32_t p, std::size_t m) {
    const PrimeModulus mod(p);
    if (m < 2) throw std::invalid_argument("Hamming codes need m >= 2");
    const auto n = hamming_length(p, m);
    FieldMatrix h(mod, m, n);
    const auto total = ipow(p, m);
    std::size_t col = 0;
    std::vector<std::uint32_t> digits(m);
    for (std::uint64_t code = 1; code < total; ++code) {
        auto x = code;
        for (std::size_t i = m; i-- > 0;) {
            digits[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        std::size_t lead = 0;
        while (digits[lead] == 0) ++lead;
        if (digits[lead] != 1) continue;
        for (std::size_t i = 0; i < m; ++i) h.set(i, col, digits[i]);
        ++col;
    }
    return {"hamming(" + std::to_string(n) + "," + std::to_string(n - m) + ",3)@GF(" + std::to_string(p) + ")",
            mod, n, n - m, 3, std::move(h), std::nullopt};
}

/// The systematic binary Hamming(7,4,3) parity-check matrix used by the standard HamNT example.
/// Stored verbatim (it is not in reduced row echelon form despite being described that way).
inline CodeSpec hamming74_reference() {
    const PrimeModulus mod(2);
    FieldMatrix h(mod, {{1, 1, 0, 1, 1, 0, 0},
                        {1, 1, 1, 0, 0, 1, 0},
                        {1, 0, 1, 1, 0, 0, 1}});
    return {"hamming74", mod, 7, 4, 3, std::move(h), std::nullopt};
}

/// Parity-check rows of a cyclic code: the first N - k cyclic shifts of the reversed
/// coefficient row of h(x).
inline FieldMatrix cyclic_parity_check(const FieldPoly& h, std::size_t n) {
    const auto k = static_cast<std::size_t>(h.degree());
    const auto row = reversed_coefficient_row(h, n);
    std::vector<FieldVector> rows;
    for (std::size_t i = 0; i < n - k; ++i) rows.push_back(row.rotated(i));
    return FieldMatrix::from_row_vectors(h.modulus(), n, rows);
}

namespace detail {

// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `index`,
// x^(deg-1) most significant.
inline FieldPoly monic_from_index(PrimeModulus m, std::size_t deg, std::uint64_t index) {
    std::vector<std::int64_t> c(deg + 1, 0);
    c[deg] = 1;
    for (std::size_t i = 0; i < deg; ++i) {
        c[i] = static_cast<std::int64_t>(index % m.value());
        index /= m.value();
    }
    return FieldPoly(m, c);
}

inline bool is_irreducible(const FieldPoly& g) {
    const auto& m = g.modulus();
    const auto deg = static_cast<std::size_t>(g.degree());
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        const auto count = ipow(m.value(), d);
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (poly_mod(g, monic_from_index(m, d, idx)).is_zero()) return false;
    }
    return true;
}

/// Smallest e >= 1 with x^e = 1 mod g, searched up to `limit`; 0 if none.
inline std::size_t order_of_x(const FieldPoly& g, std::size_t limit) {
    const auto& m = g.modulus();
    const FieldPoly one(m, {1});
    const FieldPoly x(m, {0, 1});
    auto power = poly_mod(x, g);
    for (std::size_t e = 1; e <= limit; ++e) {
        if (power == one) return e;
        power = poly_mod(power * x, g);
    }
    return 0;
}

// Columns pairwise linearly independent <=> minimum distance >= 3.
inline bool columns_pairwise_independent(const FieldMatrix& h) {
    for (std::size_t a = 0; a < h.cols(); ++a)
        for (std::size_t b = a + 1; b < h.cols(); ++b) {
            FieldMatrix pair(h.modulus(), h.rows(), 2);
            for (std::size_t i = 0; i < h.rows(); ++i) {
                pair.set(i, 0, h(i, a));
                pair.set(i, 1, h(i, b));
            }
            if (rank(pair) < 2) return false;
        }
    return true;
}

} // namespace detail

/// h(x) = (x^N - 1) / g(x), where g is the first monic irreducible degree-m polynomial of
/// order N when candidates are ranked by their coefficient list read from x^(m-1) down to x^0.
inline FieldPoly cyclic_hamming_parity_poly(std::uint32_t p, std::size_t m) {
    const PrimeModulus mod(p);
    if (m < 2) throw std::invalid_argument("Hamming codes need m >= 2");
    const auto n = hamming_length(p, m);
    if (n % p == 0) throw unsupported_parameters("no cyclic Hamming code: gcd(N, p) != 1");
    const auto xn1 = FieldPoly::x_pow_minus_one(mod, n);
    const auto count = ipow(p, m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto g = detail::monic_from_index(mod, m, idx);
        if (g.coeff(0) == 0 || !detail::is_irreducible(g)) continue;
        if (detail::order_of_x(g, n) != n) continue;
        auto div = poly_divide(xn1, g);
        if (!div.remainder.is_zero()) continue;
        // order-N roots give a Hamming code only when no two check columns are proportional
        if (!detail::columns_pairwise_independent(cyclic_parity_check(div.quotient, n)))
            throw unsupported_parameters("no cyclic Hamming code for p=" + std::to_string(p) +
                                         ", m=" + std::to_string(m) + " (gcd(m, p-1) != 1)");
        return div.quotient;
    }
    throw unsupported_parameters("no primitive divisor of x^N - 1 of degree " + std::to_string(m));
}

inline CodeSpec cyclic_hamming_spec(std::uint32_t p, std::size_t m) {
    auto h = cyclic_hamming_parity_poly(p, m);
    const auto n = hamming_length(p, m);
    return {"cyclic-hamming(" + std::to_string(n) + "," + std::to_string(n - m) + ",3)@GF(" + std::to_string(p) + ")",
            PrimeModulus(p), n, n - m, 3, cyclic_parity_check(h, n), h};
}

enum class GolayVariant { binary, ternary, ternary_systematic, extended_ternary };

inline CodeSpec golay_spec(GolayVariant variant) {
    switch (variant) {
    case GolayVariant::binary: {
        const PrimeModulus mod(2);
        // x^12+x^11+x^10+x^9+x^8+x^5+x^2+1
        FieldPoly h(mod, {1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1});
        return {"golay(23,12,7)@GF(2)", mod, 23, 12, 7, cyclic_parity_check(h, 23), h};
    }
    case GolayVariant::ternary: {
        const PrimeModulus mod(3);
        // x^6+2x^5+2x^4+2x^3+x^2+1
        FieldPoly h(mod, {1, 0, 1, 2, 2, 2, 1});
        return {"golay(11,6,5)@GF(3)", mod, 11, 6, 5, cyclic_parity_check(h, 11), h};
    }
    case GolayVariant::ternary_systematic: {
        const PrimeModulus mod(3);
        FieldMatrix h(mod, {{1, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0},
                            {1, 1, 2, 1, 0, 2, 0, 1, 0, 0, 0},
                            {1, 2, 1, 0, 1, 2, 0, 0, 1, 0, 0},
                            {1, 2, 0, 1, 2, 1, 0, 0, 0, 1, 0},
                            {1, 0, 2, 2, 1, 1, 0, 0, 0, 0, 1}});
        return {"golay-systematic(11,6,5)@GF(3)", mod, 11, 6, 5, std::move(h), std::nullopt};
    }
    case GolayVariant::extended_ternary: {
        const PrimeModulus mod(3);
        // Verbatim as printed. This H is not self-orthogonal (row 5) and its kernel has minimum
        // distance 5, e.g. (0,0,0,1,0,1,2,0,0,2,0,2); the printed transform is built from it, so d
        // records the measured value.
        FieldMatrix h(mod, {{0, -1, -1, -1, -1, -1, 1, 0, 0, 0, 0, 0},
                            {-1, 0, -1, 1, 1, -1, 0, 1, 0, 0, 0, 0},
                            {-1, -1, 0, -1, 1, 1, 0, 0, 1, 0, 0, 0},
                            {-1, 1, -1, 0, -1, 1, 0, 0, 0, 1, 0, 0},
                            {-1, 1, 1, -1, 0, 1, 0, 0, 0, 0, 1, 0},
                            {-1, -1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 1}});
        return {"extended-golay(12,6,5)@GF(3)", mod, 12, 6, 5, std::move(h), std::nullopt};
    }
    }
    throw std::invalid_argument("unknown Golay variant");
}

/// k x N generator matrix (canonical RREF basis of ker H).
inline FieldMatrix generator_from_parity(const CodeSpec& spec) {
    if (rank(spec.parity_check) != spec.redundancy())
        throw std::invalid_argument("parity-check matrix of " + spec.label + " has rank != N - k");
    return kernel_basis(spec.parity_check);
}

/// Calls f(codeword) for each of the p^k codewords spanned by the rows of g.
template <typename F>
void for_each_codeword(const FieldMatrix& g, F&& f) {
    const auto& m = g.modulus();
    const auto k = g.rows();
    const auto total = ipow(m.value(), k);
    std::vector<std::uint32_t> coef(k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto x = idx;
        for (std::size_t i = 0; i < k; ++i) {
            coef[i] = static_cast<std::uint32_t>(x % m.value());
            x /= m.value();
        }
        FieldVector c(m, g.cols());
        for (std::size_t j = 0; j < g.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < k; ++i) acc += std::uint64_t{coef[i]} * g(i, j);
            c.set(j, static_cast<std::int64_t>(acc % m.value()));
        }
        f(c);
    }
}

/// Minimum nonzero weight over all codewords; N + 1 if the code is {0}.
inline std::size_t minimum_distance(const FieldMatrix& generator) {
    std::size_t best = generator.cols() + 1;
    for_each_codeword(generator, [&](const FieldVector& c) {
        std::size_t w = 0;
        for (auto x : c.values()) w += x != 0;
        if (w > 0) best = std::min(best, w);
    });
    return best;
}

/// Shortens a code on coordinate `col`: parity-check with that column deleted, k reduced by one.
inline CodeSpec shortened(const CodeSpec& spec, std::size_t col) {
    auto h = spec.parity_check.without_column(col);
    return {spec.label + "-shortened", spec.modulus, spec.length - 1, spec.dimension - 1, spec.distance,
            std::move(h), std::nullopt};
}

} // namespace perfectntt
