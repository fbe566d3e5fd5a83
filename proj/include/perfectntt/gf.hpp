#pragma once

// Prime-field arithmetic GF(p). Residues are stored canonically in [0, p).

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace perfectntt {

class field_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class modulus_mismatch : public field_error {
public:
    modulus_mismatch(std::uint32_t a, std::uint32_t b)
        : field_error("modulus mismatch: GF(" + std::to_string(a) + ") vs GF(" + std::to_string(b) + ")") {}
};

class no_inverse : public field_error {
public:
    explicit no_inverse(std::uint32_t p) : field_error("zero has no inverse in GF(" + std::to_string(p) + ")") {}
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Characteristic of a prime field. Primality is checked on construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw field_error(std::to_string(p) + " is not prime");
        // products of two residues must fit in 64 bits
        if (p > (1u << 31)) throw field_error("modulus too large");
    }

    std::uint32_t value() const { return p_; }

    std::uint32_t reduce(std::int64_t x) const {
        const auto p = static_cast<std::int64_t>(p_);
        auto r = x % p;
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    }

    // extended Euclid on (a, p)
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw no_inverse(p_);
        std::int64_t r0 = p_, r1 = a % p_;
        std::int64_t s0 = 0, s1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        return reduce(s0);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t result = 1 % p_;
        std::uint32_t base = a % p_;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint32_t p_;
};

inline void require_same(const PrimeModulus& a, const PrimeModulus& b) {
    if (a != b) throw modulus_mismatch(a.value(), b.value());
}

class FieldElement {
public:
    FieldElement(std::int64_t value, PrimeModulus modulus) : value_(modulus.reduce(value)), modulus_(modulus) {}

    static FieldElement zero(PrimeModulus m) { return {0, m}; }
    static FieldElement one(PrimeModulus m) { return {1, m}; }

    std::uint32_t value() const { return value_; }
    const PrimeModulus& modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement inverse() const { return raw(modulus_.inv(value_), modulus_); }
    FieldElement pow(std::uint64_t e) const { return raw(modulus_.pow(value_, e), modulus_); }
    FieldElement operator-() const { return raw(modulus_.neg(value_), modulus_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same(a.modulus_, b.modulus_);
        return raw(a.modulus_.add(a.value_, b.value_), a.modulus_);
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same(a.modulus_, b.modulus_);
        return raw(a.modulus_.sub(a.value_, b.value_), a.modulus_);
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same(a.modulus_, b.modulus_);
        return raw(a.modulus_.mul(a.value_, b.value_), a.modulus_);
    }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value_; }

private:
    static FieldElement raw(std::uint32_t v, PrimeModulus m) {
        FieldElement e(0, m);
        e.value_ = v;
        return e;
    }

    std::uint32_t value_;
    PrimeModulus modulus_;
};

enum class FieldOp { add, sub, mul };

inline FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
    switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    }
    throw field_error("unknown field operation");
}

inline FieldElement field_inv(const FieldElement& a) { return a.inverse(); }

inline FieldElement field_pow(const FieldElement& a, std::uint64_t e) { return a.pow(e); }

} // namespace perfectntt
