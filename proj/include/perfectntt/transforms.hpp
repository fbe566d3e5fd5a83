#pragma once

// Number-theoretic transforms built from linear block codes.
//
// A parity-check matrix H ((N-k) x N) is inflated to a square H_e by appending k rows, and the
// transform is T = H_e + lambda I. Every codeword c satisfies H_e c = 0, hence T c = lambda c:
// the code sits inside the lambda-eigenspace of T. lambda must make T nonsingular.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "codes.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace perfectntt {

class eigenvalue_unsuitable : public field_error {
public:
    explicit eigenvalue_unsuitable(std::uint32_t lambda)
        : field_error("eigenvalue lambda=" + std::to_string(lambda) + " gives a singular transform (det = 0)"),
          lambda_(lambda) {}
    std::uint32_t lambda() const { return lambda_; }

private:
    std::uint32_t lambda_;
};

enum class TransformForm { standard_nullrow, standard_combo, cyclic, appendix_systematic };

inline std::string to_string(TransformForm f) {
    switch (f) {
    case TransformForm::standard_nullrow: return "standard_nullrow";
    case TransformForm::standard_combo: return "standard_combo";
    case TransformForm::cyclic: return "cyclic";
    case TransformForm::appendix_systematic: return "appendix_systematic";
    }
    return "unknown";
}

inline std::optional<TransformForm> transform_form_from_string(const std::string& s) {
    for (auto f : {TransformForm::standard_nullrow, TransformForm::standard_combo, TransformForm::cyclic,
                   TransformForm::appendix_systematic})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

struct NullRows {};
/// Each appended row is the sum of the two named parity-check rows (0-based).
struct RowCombinations {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
/// Remaining rows are further cyclic shifts of the parity polynomial.
struct CyclicShifts {};

using InflationStrategy = std::variant<NullRows, RowCombinations, CyclicShifts>;

/// The square matrix H_e obtained by appending k rows to H.
inline FieldMatrix inflate(const CodeSpec& spec, const InflationStrategy& strategy) {
    const auto& h = spec.parity_check;
    const auto n = spec.length;
    const auto k = spec.dimension;
    if (h.rows() + k != n || h.cols() != n) throw dimension_error("parity-check shape does not match (N, k)");

    if (std::holds_alternative<NullRows>(strategy)) return FieldMatrix::stack(h, FieldMatrix(spec.modulus, k, n));

    if (const auto* combos = std::get_if<RowCombinations>(&strategy)) {
        if (combos->pairs.size() != k)
            throw std::invalid_argument("row_combinations needs exactly k = " + std::to_string(k) + " pairs");
        std::vector<FieldVector> extra;
        for (auto [a, b] : combos->pairs) {
            if (a >= h.rows() || b >= h.rows()) throw std::invalid_argument("row_combinations index out of range");
            extra.push_back(h.row(a) + h.row(b));
        }
        return FieldMatrix::stack(h, FieldMatrix::from_row_vectors(spec.modulus, n, extra));
    }

    if (!spec.parity_poly) throw std::invalid_argument("cyclic inflation needs a parity polynomial");
    return circulant_from_first_row(reversed_coefficient_row(*spec.parity_poly, n));
}

class TransformSpec {
public:
    /// Validates det(T) != 0 and computes the inverse eagerly.
    TransformSpec(FieldMatrix t, FieldMatrix inflated, FieldElement lambda, TransformForm form, CodeSpec source)
        : matrix_(std::move(t)), inflated_(std::move(inflated)), inverse_(matrix_.modulus(), 0, 0),
          lambda_(lambda), form_(form), source_(std::move(source)) {
        if (!matrix_.is_square()) throw dimension_error("transform matrix must be square");
        determinant_ = perfectntt::determinant(matrix_).value();
        if (determinant_ == 0) throw eigenvalue_unsuitable(lambda_.value());
        inverse_ = perfectntt::inverse(matrix_);
    }

    const FieldMatrix& matrix() const { return matrix_; }
    const FieldMatrix& inverse_matrix() const { return inverse_; }
    const FieldMatrix& inflated() const { return inflated_; }
    const PrimeModulus& modulus() const { return matrix_.modulus(); }
    std::size_t length() const { return matrix_.rows(); }
    const FieldElement& lambda() const { return lambda_; }
    TransformForm form() const { return form_; }
    const CodeSpec& source() const { return source_; }
    FieldElement determinant() const { return {determinant_, modulus()}; }

private:
    FieldMatrix matrix_;
    FieldMatrix inflated_;
    FieldMatrix inverse_;
    FieldElement lambda_;
    TransformForm form_;
    CodeSpec source_;
    std::uint32_t determinant_ = 0;
};

inline FieldMatrix add_lambda_identity(const FieldMatrix& m, const FieldElement& lambda) {
    return m + lambda * FieldMatrix::identity(m.modulus(), m.rows());
}

/// Row i of a circulant transform is x^i [h(x) + lambda]: the reversed coefficient row of h
/// with lambda added on the diagonal position 0.
inline TransformSpec build_cyclic(const CodeSpec& spec, const FieldElement& lambda) {
    require_same(spec.modulus, lambda.modulus());
    if (!spec.parity_poly) throw std::invalid_argument(spec.label + " has no parity polynomial");
    const auto n = spec.length;
    auto row = reversed_coefficient_row(*spec.parity_poly, n);
    const auto h_e = circulant_from_first_row(row);
    row.set(0, row[0] + lambda.value());
    return {circulant_from_first_row(row), h_e, lambda, TransformForm::cyclic, spec};
}

inline TransformSpec build_standard(const CodeSpec& spec, const FieldElement& lambda, const InflationStrategy& strategy) {
    require_same(spec.modulus, lambda.modulus());
    if (std::holds_alternative<CyclicShifts>(strategy)) return build_cyclic(spec, lambda);
    auto h_e = inflate(spec, strategy);
    const auto form = std::holds_alternative<NullRows>(strategy) ? TransformForm::standard_nullrow
                                                                  : TransformForm::standard_combo;
    auto t = add_lambda_identity(h_e, lambda);
    return {std::move(t), std::move(h_e), lambda, form, spec};
}

/// Row combinations l1+l2, l1+l3, l1+l4, l1+l5, l1+l6, l2+l3 (1-based) used for the extended
/// ternary Golay transform.
inline RowCombinations extended_golay_combinations() {
    return {{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}}};
}

inline TransformSpec build_extended_golay(const FieldElement& lambda) {
    return build_standard(golay_spec(GolayVariant::extended_ternary), lambda, extended_golay_combinations());
}

/// Systematic code with H = [-P^T | I], P of shape k x (N - k).
inline CodeSpec systematic_code(const FieldMatrix& p_block, std::string label = "systematic") {
    const auto& m = p_block.modulus();
    const auto k = p_block.rows();
    const auto r = p_block.cols();
    FieldMatrix h(m, r, k + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) h.set(i, j, m.neg(p_block(j, i)));
        h.set(i, k + i, 1);
    }
    return {std::move(label), m, k + r, k, 0, std::move(h), std::nullopt};
}

/// P block of a parity-check matrix already in the form [A | I]: P = -A^T.
inline FieldMatrix systematic_p_block(const CodeSpec& spec) {
    const auto& h = spec.parity_check;
    const auto r = spec.redundancy();
    const auto k = spec.dimension;
    if (h.block(0, k, r, r) != FieldMatrix::identity(spec.modulus, r))
        throw std::invalid_argument(spec.label + " is not in systematic form [-P^T | I]");
    const auto neg_one = FieldElement(-1, spec.modulus);
    return neg_one * h.block(0, 0, r, k).transposed();
}

/// Block form
///     [ lambda I - P^T | I        ]
///     [ 0              | lambda I ]
/// where each lambda I block is the part of lambda I_N it overlaps, so the diagonal of the
/// full matrix is lambda throughout.
inline TransformSpec build_appendix_systematic(const FieldMatrix& p_block, const FieldElement& lambda) {
    require_same(p_block.modulus(), lambda.modulus());
    const auto& m = p_block.modulus();
    if (lambda.is_zero()) throw eigenvalue_unsuitable(0);
    const auto k = p_block.rows();
    const auto r = p_block.cols();
    const auto n = k + r;
    const auto l = lambda.value();
    const auto diag = [&](std::size_t i, std::size_t j) -> std::uint32_t { return i == j ? l : 0; };

    FieldMatrix t(m, n, n);
    // top-left (N-k) x k
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) t.set(i, j, m.sub(diag(i, j), p_block(j, i)));
    // top-right (N-k) x (N-k)
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) t.set(i, k + j, m.add(i == j ? 1 : 0, diag(i, k + j)));
    // bottom k rows
    for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.set(i, j, diag(i, j));

    auto source = systematic_code(p_block);
    auto h_e = FieldMatrix::stack(source.parity_check, FieldMatrix(m, k, n));
    return {std::move(t), std::move(h_e), lambda, TransformForm::appendix_systematic, std::move(source)};
}

/// Rebuilds a TransformSpec from a bare matrix (e.g. one read from a file). The source code is
/// recovered as ker(T - lambda I); its distance is left as 0 (unknown).
inline TransformSpec transform_from_matrix(const FieldMatrix& t, const FieldElement& lambda, TransformForm form,
                                           std::string label = "loaded") {
    require_same(t.modulus(), lambda.modulus());
    if (!t.is_square()) throw dimension_error("transform matrix must be square");
    auto h_e = add_lambda_identity(t, -lambda);
    auto h = canonical_row_basis(h_e);
    const auto n = t.rows();
    CodeSpec source{std::move(label), t.modulus(), n, n - h.rows(), 0, std::move(h), std::nullopt};
    return {t, std::move(h_e), lambda, form, std::move(source)};
}

struct EigenCandidate {
    std::uint32_t lambda;
    std::uint32_t det;
    bool valid() const { return det != 0; }
};

/// det(H_e + lambda I) for every lambda in GF(p), including 0.
inline std::vector<EigenCandidate> eigen_candidates(const CodeSpec& spec, const InflationStrategy& strategy) {
    const auto h_e = inflate(spec, strategy);
    std::vector<EigenCandidate> out;
    for (std::uint32_t l = 0; l < spec.modulus.value(); ++l) {
        const auto t = add_lambda_identity(h_e, FieldElement(l, spec.modulus));
        out.push_back({l, determinant(t).value()});
    }
    return out;
}

/// Canonical basis of ker(T - lambda I).
inline FieldMatrix eigenspace(const TransformSpec& t, const FieldElement& lambda) {
    const auto neg = -lambda;
    return kernel_basis(add_lambda_identity(t.matrix(), neg));
}

struct PerfectnessReport {
    bool perfect = false;
    std::optional<std::size_t> radius;  // witnessing t
    std::size_t dimension = 0;          // dim of the lambda-eigenspace
};

/// Perfect iff some integer t >= 1 makes the Hamming-ball volume equal p^(N - dim V) exactly.
inline PerfectnessReport is_perfect_transform(const TransformSpec& t) {
    PerfectnessReport rep;
    rep.dimension = eigenspace(t, t.lambda()).rows();
    const auto n = t.length();
    const std::uint64_t p = t.modulus().value();
    const auto target = ipow(p, n - rep.dimension);
    for (std::size_t radius = 1; radius <= n; ++radius) {
        const auto vol = hamming_ball_volume(p, n, radius);
        if (vol == target) {
            rep.perfect = true;
            rep.radius = radius;
            break;
        }
        if (vol > target) break;
    }
    return rep;
}

inline FieldVector apply(const TransformSpec& t, const FieldVector& v) {
    if (v.size() != t.length()) throw dimension_error("vector length " + std::to_string(v.size()) +
                                                      " does not match transform length " +
                                                      std::to_string(t.length()));
    return t.matrix() * v;
}

inline FieldVector apply_inverse(const TransformSpec& t, const FieldVector& v) {
    if (v.size() != t.length()) throw dimension_error("vector length " + std::to_string(v.size()) +
                                                      " does not match transform length " +
                                                      std::to_string(t.length()));
    return t.inverse_matrix() * v;
}

/// Circulant transforms as cyclic convolution: V(x) = c(x) v(x) mod x^N - 1, where c(x) holds
/// the first column of T.
inline FieldVector apply_cyclic(const TransformSpec& t, const FieldVector& v) {
    if (!t.matrix().is_circulant()) throw std::invalid_argument("apply_cyclic needs a circulant transform");
    if (v.size() != t.length()) throw dimension_error("vector length does not match transform length");
    const CyclicRing ring(t.length(), t.modulus());
    const auto column = FieldPoly::from_vector(t.matrix().column(0));
    return poly_mul_cyclic(column, FieldPoly::from_vector(v), ring).to_vector(t.length());
}

} // namespace perfectntt
