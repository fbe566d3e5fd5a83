#pragma once

// Randomized checks of the transform properties: linearity, time shift, frequency shift,
// constant sequence and impulse response.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "transforms.hpp"

namespace perfectntt {

struct PropertyCheck {
    explicit PropertyCheck(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    bool applicable = true;
    std::size_t cases = 0;
    std::string detail;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    /// Common row sum s of T; a constant input r maps to the constant r*s.
    std::optional<std::uint32_t> row_sum;
    /// weight(h(x)) mod p, the alternative constant-sequence figure; reported, not checked.
    std::optional<std::uint32_t> parity_weight;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.applicable && !c.passed) return false;
        return true;
    }
};

inline FieldVector random_vector(PrimeModulus m, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, m.value() - 1);
    FieldVector v(m, n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, dist(rng));
    return v;
}

/// Runs every property on `trials` seeded random inputs. Shift properties are checked for all
/// shifts m in [0, N) and only apply to circulant transforms.
inline PropertyReport verify_properties(const TransformSpec& t, std::size_t trials, std::uint64_t seed) {
    const auto& m = t.modulus();
    const auto n = t.length();
    const bool circulant = t.matrix().is_circulant();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> scalar(0, m.value() - 1);
    PropertyReport rep;

    PropertyCheck linear("linearity");
    for (std::size_t i = 0; i < trials; ++i) {
        const auto v = random_vector(m, n, rng);
        const auto w = random_vector(m, n, rng);
        const FieldElement a(scalar(rng), m), b(scalar(rng), m);
        const auto lhs = apply(t, a * v + b * w);
        const auto rhs = a * apply(t, v) + b * apply(t, w);
        ++linear.cases;
        if (lhs != rhs) {
            linear.passed = false;
            linear.detail = "failed on trial " + std::to_string(i);
            break;
        }
    }
    rep.checks.push_back(linear);

    PropertyCheck time_shift("time_shift"), freq_shift("frequency_shift");
    time_shift.applicable = freq_shift.applicable = circulant;
    if (circulant) {
        for (std::size_t i = 0; i < trials && (time_shift.passed || freq_shift.passed); ++i) {
            const auto v = random_vector(m, n, rng);
            const auto spectrum = apply(t, v);
            const auto back = apply_inverse(t, v);
            for (std::size_t s = 0; s < n; ++s) {
                ++time_shift.cases;
                ++freq_shift.cases;
                if (time_shift.passed && apply(t, v.rotated(s)) != spectrum.rotated(s)) {
                    time_shift.passed = false;
                    time_shift.detail = "failed at shift " + std::to_string(s);
                }
                // a shifted spectrum comes from the equally shifted input
                if (freq_shift.passed && apply_inverse(t, v.rotated(s)) != back.rotated(s)) {
                    freq_shift.passed = false;
                    freq_shift.detail = "failed at shift " + std::to_string(s);
                }
            }
        }
    } else {
        time_shift.detail = freq_shift.detail = "not circulant";
    }
    rep.checks.push_back(time_shift);
    rep.checks.push_back(freq_shift);

    PropertyCheck constant("constant_sequence");
    constant.applicable = circulant;
    if (circulant) {
        std::uint32_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s = m.add(s, t.matrix()(0, j));
        rep.row_sum = s;
        if (t.source().parity_poly) rep.parity_weight = m.reduce(static_cast<std::int64_t>(t.source().parity_poly->weight()));
        for (std::uint32_t r = 0; r < m.value(); ++r) {
            ++constant.cases;
            const auto out = apply(t, FieldVector::constant(m, n, r));
            if (out != FieldVector::constant(m, n, m.mul(r, s))) {
                constant.passed = false;
                constant.detail = "failed for r=" + std::to_string(r);
            }
        }
        if (constant.passed) {
            std::ostringstream os;
            os << "row_sum=" << s;
            if (rep.parity_weight) os << " weight(h)=" << *rep.parity_weight;
            constant.detail = os.str();
        }
    } else {
        constant.detail = "not circulant";
    }
    rep.checks.push_back(constant);

    PropertyCheck impulse("impulse");
    impulse.cases = 1;
    if (apply(t, FieldVector::unit(m, n, 0)) != t.matrix().column(0)) {
        impulse.passed = false;
        impulse.detail = "response differs from column 0";
    }
    rep.checks.push_back(impulse);

    return rep;
}

} // namespace perfectntt
