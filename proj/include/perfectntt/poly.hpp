#pragma once

// Polynomials over GF(p), the cyclic ring GF(p)[x]/(x^N - 1), and circulant matrices.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"
#include "matrix.hpp"

namespace perfectntt {

/// Dense polynomial, coefficient i belongs to x^i. Always kept normalized (no trailing zeros).
class FieldPoly {
public:
    explicit FieldPoly(PrimeModulus m) : modulus_(m) {}

    FieldPoly(PrimeModulus m, const std::vector<std::int64_t>& ascending) : modulus_(m) {
        coeffs_.reserve(ascending.size());
        for (auto c : ascending) coeffs_.push_back(m.reduce(c));
        normalize();
    }
    FieldPoly(PrimeModulus m, std::initializer_list<std::int64_t> ascending)
        : FieldPoly(m, std::vector<std::int64_t>(ascending)) {}

    static FieldPoly monomial(PrimeModulus m, std::size_t degree, std::int64_t coeff = 1) {
        FieldPoly r(m);
        r.coeffs_.assign(degree + 1, 0);
        r.coeffs_[degree] = m.reduce(coeff);
        r.normalize();
        return r;
    }

    /// x^n - 1
    static FieldPoly x_pow_minus_one(PrimeModulus m, std::size_t n) {
        auto r = monomial(m, n);
        r.coeffs_[0] = m.sub(r.coeffs_[0], 1);
        r.normalize();
        return r;
    }

    static FieldPoly from_vector(const FieldVector& v) {
        FieldPoly r(v.modulus());
        r.coeffs_.assign(v.values().begin(), v.values().end());
        r.normalize();
        return r;
    }

    const PrimeModulus& modulus() const { return modulus_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint32_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    /// Number of nonzero coefficients.
    std::size_t weight() const {
        std::size_t w = 0;
        for (auto c : coeffs_) w += c != 0;
        return w;
    }

    /// Coefficients as a length-n vector, ascending degree.
    FieldVector to_vector(std::size_t n) const {
        if (static_cast<int>(n) <= degree()) throw dimension_error("polynomial does not fit in vector");
        FieldVector v(modulus_, n);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v.set(i, coeffs_[i]);
        return v;
    }

    friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
        require_same(a.modulus_, b.modulus_);
        FieldPoly r(a.modulus_);
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.modulus_.add(a.coeff(i), b.coeff(i));
        r.normalize();
        return r;
    }
    friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
        require_same(a.modulus_, b.modulus_);
        FieldPoly r(a.modulus_);
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.modulus_.sub(a.coeff(i), b.coeff(i));
        r.normalize();
        return r;
    }
    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
        require_same(a.modulus_, b.modulus_);
        FieldPoly r(a.modulus_);
        if (a.is_zero() || b.is_zero()) return r;
        const auto& m = a.modulus_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] = m.add(r.coeffs_[i + j], m.mul(a.coeffs_[i], b.coeffs_[j]));
        r.normalize();
        return r;
    }
    friend FieldPoly operator*(const FieldElement& s, const FieldPoly& a) {
        return FieldPoly(a.modulus_, {static_cast<std::int64_t>(s.value())}) * a;
    }

    friend bool operator==(const FieldPoly&, const FieldPoly&) = default;

    /// Descending degree, e.g. "x^4+x^2+x+1", "2x^5+1", "0".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const auto c = coeffs_[k];
            if (c == 0) continue;
            if (!out.empty()) out += '+';
            if (c != 1 || k == 0) out += std::to_string(c);
            if (k >= 1) out += 'x';
            if (k >= 2) out += '^' + std::to_string(k);
        }
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    PrimeModulus modulus_;
    std::vector<std::uint32_t> coeffs_;
};

/// The ring GF(p)[x] / (x^N - 1).
struct CyclicRing {
    std::size_t length;
    PrimeModulus modulus;

    CyclicRing(std::size_t n, PrimeModulus m) : length(n), modulus(m) {
        if (n == 0) throw std::invalid_argument("cyclic ring length must be at least 1");
    }
};

struct PolyDivision {
    FieldPoly quotient;
    FieldPoly remainder;
};

inline PolyDivision poly_divide(const FieldPoly& a, const FieldPoly& b) {
    require_same(a.modulus(), b.modulus());
    if (b.is_zero()) throw field_error("polynomial division by zero");
    const auto& m = a.modulus();
    std::vector<std::int64_t> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const auto lead_inv = m.inv(b.leading());
    std::vector<std::int64_t> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
    for (int k = a.degree(); k >= db; --k) {
        const auto c = m.mul(m.reduce(rem[static_cast<std::size_t>(k)]), lead_inv);
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(k - db + j)];
            slot = m.sub(m.reduce(slot), m.mul(c, b.coeff(static_cast<std::size_t>(j))));
        }
    }
    if (static_cast<int>(rem.size()) > db) rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return {FieldPoly(m, quot), FieldPoly(m, rem)};
}

inline FieldPoly poly_mod(const FieldPoly& a, const FieldPoly& b) { return poly_divide(a, b).remainder; }

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline FieldPoly poly_gcd(FieldPoly a, FieldPoly b) {
    while (!b.is_zero()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return FieldElement(a.modulus().inv(a.leading()), a.modulus()) * a;
}

/// a * b reduced mod x^N - 1. Exponents fold as k -> k mod N.
inline FieldPoly poly_mul_cyclic(const FieldPoly& a, const FieldPoly& b, const CyclicRing& ring) {
    require_same(a.modulus(), ring.modulus);
    require_same(b.modulus(), ring.modulus);
    const auto n = ring.length;
    if (a.degree() >= static_cast<int>(n) || b.degree() >= static_cast<int>(n))
        throw dimension_error("cyclic product operands must have degree < N");
    const auto& m = ring.modulus;
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            auto& slot = out[(i + j) % n];
            slot = m.add(static_cast<std::uint32_t>(slot), m.mul(a.coeff(i), b.coeff(j)));
        }
    }
    return FieldPoly(m, out);
}

/// Horner evaluation.
inline FieldElement poly_eval(const FieldPoly& a, const FieldElement& x0) {
    require_same(a.modulus(), x0.modulus());
    const auto& m = a.modulus();
    std::uint32_t acc = 0;
    for (std::size_t k = a.coeffs().size(); k-- > 0;) acc = m.add(m.mul(acc, x0.value()), a.coeff(k));
    return {acc, m};
}

/// Row i is `row` cyclically shifted right by i: entry (i, j) = row[(j - i) mod N].
inline FieldMatrix circulant_from_first_row(const FieldVector& row) {
    const auto n = row.size();
    if (n == 0) throw dimension_error("circulant needs a row of length >= 1");
    FieldMatrix c(row.modulus(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.set(i, j, row[(j + n - i) % n]);
    return c;
}

/// Length-n row vector holding the coefficients of `h` in descending order, starting at index 0
/// and zero-filled on the right: index j carries the coefficient of x^(deg h - j).
/// This is the layout of the printed parity-check and circulant rows.
inline FieldVector reversed_coefficient_row(const FieldPoly& h, std::size_t n) {
    if (h.is_zero()) return FieldVector(h.modulus(), n);
    const auto d = static_cast<std::size_t>(h.degree());
    if (d >= n) throw dimension_error("polynomial degree must be < N");
    FieldVector v(h.modulus(), n);
    for (std::size_t j = 0; j <= d; ++j) v.set(j, h.coeff(d - j));
    return v;
}

} // namespace perfectntt
