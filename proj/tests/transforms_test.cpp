#include <gtest/gtest.h>

#include <random>

#include <perfectntt/perfectntt.hpp>

#include "oracles.hpp"

using namespace perfectntt;

namespace {

const PrimeModulus gf2(2);
const PrimeModulus gf3(3);

FieldElement one(PrimeModulus m) { return FieldElement::one(m); }

TransformSpec standard_hamming() { return build_standard(hamming74_reference(), one(gf2), NullRows{}); }
TransformSpec ternary_hamming() { return build_standard(hamming_parity_check(3, 3), one(gf3), NullRows{}); }
TransformSpec cyclic_hamming() { return build_cyclic(cyclic_hamming_spec(2, 3), one(gf2)); }
TransformSpec binary_golay() { return build_cyclic(golay_spec(GolayVariant::binary), one(gf2)); }
TransformSpec ternary_golay() { return build_cyclic(golay_spec(GolayVariant::ternary), one(gf3)); }
TransformSpec systematic_golay() {
    return build_standard(golay_spec(GolayVariant::ternary_systematic), one(gf3), NullRows{});
}

std::vector<TransformSpec> golden() {
    return {standard_hamming(), ternary_hamming(),  cyclic_hamming(),
            binary_golay(),     ternary_golay(),    systematic_golay(),
            build_extended_golay(one(gf3))};
}

} // namespace

TEST(BuildStandard, PrintedMatrices) {
    EXPECT_EQ(standard_hamming().matrix(), reference::standard_hamming_transform());
    EXPECT_EQ(ternary_hamming().matrix(), reference::ternary_hamming_transform());
    EXPECT_EQ(systematic_golay().matrix(), reference::ternary_golay_systematic_transform());
    EXPECT_EQ(standard_hamming().form(), TransformForm::standard_nullrow);
}

TEST(BuildStandard, InflatedPlusLambdaIdentity) {
    for (const auto& t : golden())
        EXPECT_EQ(t.matrix(), add_lambda_identity(t.inflated(), t.lambda())) << t.source().label;
}

TEST(BuildStandard, SingularLambdaNamesLambda) {
    try {
        build_standard(hamming74_reference(), FieldElement(0, gf2), NullRows{});
        FAIL() << "expected eigenvalue_unsuitable";
    } catch (const eigenvalue_unsuitable& e) {
        EXPECT_EQ(e.lambda(), 0u);
    }
}

TEST(BuildStandard, RowCombinationValidation) {
    const auto spec = golay_spec(GolayVariant::extended_ternary);
    EXPECT_THROW(build_standard(spec, one(gf3), RowCombinations{{{0, 1}}}), std::invalid_argument);
    EXPECT_THROW(build_standard(spec, one(gf3), RowCombinations{{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}}}),
                 std::invalid_argument);
    EXPECT_THROW(build_standard(spec, FieldElement(1, gf2), NullRows{}), modulus_mismatch);
}

TEST(BuildCyclic, PrintedMatrices) {
    EXPECT_EQ(cyclic_hamming().inflated(), reference::cyclic_hamming_inflated());
    EXPECT_EQ(cyclic_hamming().matrix(), reference::cyclic_hamming_transform());
    EXPECT_EQ(binary_golay().matrix(), reference::binary_golay_transform());
    EXPECT_EQ(ternary_golay().matrix(), reference::ternary_golay_circulant());
    EXPECT_EQ(build_standard(cyclic_hamming_spec(2, 3), one(gf2), CyclicShifts{}).matrix(),
              reference::cyclic_hamming_transform());
}

TEST(BuildCyclic, ZeroLambdaIsSingular) {
    EXPECT_THROW(build_cyclic(golay_spec(GolayVariant::ternary), FieldElement(0, gf3)), eigenvalue_unsuitable);
    EXPECT_THROW(build_cyclic(hamming74_reference(), one(gf2)), std::invalid_argument);
}

TEST(BuildExtendedGolay, PrintedMatrixAndInverse) {
    const auto t = build_extended_golay(one(gf3));
    EXPECT_EQ(t.matrix(), reference::extended_golay_transform());
    EXPECT_EQ(t.inverse_matrix(), reference::extended_golay_inverse());
    EXPECT_EQ(t.determinant().value(), 2u);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) EXPECT_LT(t.matrix()(i, j), 3u);
}

TEST(Determinants, PrintedValues) {
    EXPECT_EQ(binary_golay().determinant().value(), 1u);
    EXPECT_EQ(systematic_golay().determinant().value(), 2u);
    EXPECT_EQ(build_extended_golay(one(gf3)).determinant().value(), 2u);
}

TEST(Determinants, MatchLeibnizOracleOnSmallTransforms) {
    for (const auto& t : {standard_hamming(), cyclic_hamming(), ternary_golay()}) {
        oracle::Mat a;
        for (std::size_t i = 0; i < t.length(); ++i) {
            a.emplace_back();
            for (std::size_t j = 0; j < t.length(); ++j) a.back().push_back(t.matrix()(i, j));
        }
        if (t.length() <= 9) {
            EXPECT_EQ(oracle::det_leibniz(a, t.modulus().value()), t.determinant().value());
        }
    }
}

TEST(AppendixSystematic, AgreesWithNullRowInflation) {
    const auto spec = golay_spec(GolayVariant::ternary_systematic);
    const auto p = systematic_p_block(spec);
    EXPECT_EQ(p.rows(), 6u);
    EXPECT_EQ(p.cols(), 5u);
    EXPECT_EQ(systematic_code(p).parity_check, spec.parity_check);
    for (std::uint32_t l = 1; l < 3; ++l) {
        const FieldElement lambda(l, gf3);
        EXPECT_EQ(build_appendix_systematic(p, lambda).matrix(), build_standard(spec, lambda, NullRows{}).matrix());
    }
    EXPECT_EQ(build_appendix_systematic(p, one(gf3)).form(), TransformForm::appendix_systematic);
}

TEST(AppendixSystematic, ZeroBlockGivesLambdaPowerDeterminant) {
    const PrimeModulus gf5(5);
    const FieldMatrix zero(gf5, 3, 2);
    const FieldElement lambda(3, gf5);
    const auto t = build_appendix_systematic(zero, lambda);
    EXPECT_EQ(t.determinant(), lambda.pow(5));
    // lambda I everywhere plus the identity block in the top-right corner
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            std::uint32_t expected = i == j ? 3 : 0;
            if (i < 2 && j == 3 + i) expected += 1;
            EXPECT_EQ(t.matrix()(i, j), expected);
        }
}

TEST(AppendixSystematic, ZeroLambdaRejected) {
    const auto p = systematic_p_block(golay_spec(GolayVariant::ternary_systematic));
    EXPECT_THROW(build_appendix_systematic(p, FieldElement(0, gf3)), eigenvalue_unsuitable);
    EXPECT_THROW(systematic_p_block(hamming_parity_check(3, 3)), std::invalid_argument);
}

TEST(EigenCandidates, Examples) {
    const auto ham = eigen_candidates(hamming74_reference(), NullRows{});
    ASSERT_EQ(ham.size(), 2u);
    EXPECT_FALSE(ham[0].valid());
    EXPECT_TRUE(ham[1].valid());

    const auto gol = eigen_candidates(golay_spec(GolayVariant::ternary_systematic), NullRows{});
    ASSERT_EQ(gol.size(), 3u);
    EXPECT_EQ(gol[0].det, 0u);
    EXPECT_EQ(gol[1].lambda, 1u);
    EXPECT_EQ(gol[1].det, 2u);

    for (const auto& spec : {hamming_parity_check(3, 3), hamming_parity_check(5, 2)})
        EXPECT_EQ(eigen_candidates(spec, NullRows{})[0].det, 0u) << spec.label;
}

TEST(Eigenspace, Examples) {
    const auto ham = eigenspace(standard_hamming(), one(gf2));
    EXPECT_EQ(ham.rows(), 4u);
    EXPECT_TRUE(same_row_space(ham, reference::hamming74_generator()));
    EXPECT_EQ(eigenspace(systematic_golay(), one(gf3)).rows(), 6u);

    const auto id = transform_from_matrix(FieldMatrix::identity(gf3, 5), one(gf3), TransformForm::standard_nullrow);
    EXPECT_EQ(eigenspace(id, one(gf3)).rows(), 5u);
    EXPECT_EQ(eigenspace(id, FieldElement(2, gf3)).rows(), 0u);
}

TEST(Eigenspace, EqualsSourceCodeForGoldenTransforms) {
    for (const auto& t : golden())
        EXPECT_EQ(eigenspace(t, t.lambda()), kernel_basis(t.source().parity_check)) << t.source().label;
}

TEST(Perfectness, Witnesses) {
    const auto check = [](const TransformSpec& t, std::size_t radius, std::size_t dim) {
        const auto rep = is_perfect_transform(t);
        EXPECT_TRUE(rep.perfect) << t.source().label;
        ASSERT_TRUE(rep.radius) << t.source().label;
        EXPECT_EQ(*rep.radius, radius) << t.source().label;
        EXPECT_EQ(rep.dimension, dim) << t.source().label;
    };
    check(standard_hamming(), 1, 4);
    check(cyclic_hamming(), 1, 4);
    check(ternary_hamming(), 1, 10);
    check(binary_golay(), 3, 12);
    check(ternary_golay(), 2, 6);
    check(systematic_golay(), 2, 6);
}

TEST(Perfectness, NonPerfectControls) {
    const auto control = build_standard(shortened(hamming74_reference(), 0), one(gf2), NullRows{});
    const auto rep = is_perfect_transform(control);
    EXPECT_EQ(rep.dimension, 3u);
    // exhaustive radius search: volumes 1, 7, 22, ... never hit 2^3
    bool hit = false;
    for (std::uint64_t t = 1; t <= 6; ++t) hit |= hamming_ball_volume(2, 6, t) == 8;
    EXPECT_FALSE(hit);
    EXPECT_FALSE(rep.perfect);
    EXPECT_FALSE(rep.radius);

    EXPECT_FALSE(is_perfect_transform(build_extended_golay(one(gf3))).perfect);
}

TEST(Apply, CodewordsAreFixed) {
    for (const auto& t : golden()) {
        const auto g = generator_from_parity(t.source());
        std::size_t words = 0;
        for_each_codeword(g, [&](const FieldVector& c) {
            if (++words > 1000) return;
            EXPECT_EQ(apply(t, c), c) << t.source().label;
        });
    }
}

TEST(Apply, Examples) {
    const auto t = cyclic_hamming();
    EXPECT_EQ(apply(t, FieldVector(gf2, 7)), FieldVector(gf2, 7));
    EXPECT_EQ(apply(t, FieldVector::unit(gf2, 7, 0)), FieldVector(gf2, {0, 0, 0, 1, 1, 1, 0}));
    EXPECT_THROW(apply(t, FieldVector(gf2, 6)), dimension_error);
    EXPECT_THROW(apply_inverse(t, FieldVector(gf2, 8)), dimension_error);
}

TEST(Apply, CyclicRouteAgreesWithMatrixProduct) {
    std::mt19937_64 rng(7);
    for (const auto& t : {cyclic_hamming(), ternary_golay(), binary_golay(), build_cyclic(cyclic_hamming_spec(3, 3), one(gf3))}) {
        for (int i = 0; i < 200; ++i) {
            const auto v = random_vector(t.modulus(), t.length(), rng);
            EXPECT_EQ(apply_cyclic(t, v), mat_vec(t.matrix(), v));
        }
    }
    EXPECT_THROW(apply_cyclic(standard_hamming(), FieldVector(gf2, 7)), std::invalid_argument);
}

TEST(Apply, RoundTrip) {
    std::mt19937_64 rng(11);
    for (const auto& t : golden()) {
        EXPECT_EQ(t.matrix() * t.inverse_matrix(), FieldMatrix::identity(t.modulus(), t.length()));
        for (int i = 0; i < 200; ++i) {
            const auto v = random_vector(t.modulus(), t.length(), rng);
            EXPECT_EQ(apply_inverse(t, apply(t, v)), v);
        }
    }
}

TEST(CirculantClosure, InverseOfCyclicTransformIsCirculant) {
    for (const auto& t : golden()) {
        if (t.form() != TransformForm::cyclic) continue;
        EXPECT_TRUE(t.matrix().is_circulant());
        const auto& inv = t.inverse_matrix();
        for (std::size_t i = 0; i < t.length(); ++i)
            for (std::size_t j = 0; j < t.length(); ++j)
                EXPECT_EQ(inv(i, j), inv(0, (j + t.length() - i) % t.length()));
    }
}

TEST(ShiftCommutation, AllShifts) {
    std::mt19937_64 rng(3);
    for (const auto& t : {cyclic_hamming(), ternary_golay(), binary_golay()}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto v = random_vector(t.modulus(), t.length(), rng);
            const auto out = apply(t, v);
            for (std::size_t m = 0; m < t.length(); ++m) EXPECT_EQ(apply(t, v.rotated(m)), out.rotated(m));
        }
    }
}

TEST(MultiplicativeOrder, TernaryGolayCirculant) {
    const auto t = ternary_golay();
    EXPECT_EQ(multiplicative_order(t.matrix()), std::optional<std::uint64_t>(242));
    EXPECT_EQ(mat_pow(t.matrix(), 242), FieldMatrix::identity(gf3, 11));
}

TEST(TransformFromMatrix, RecoversEigenspace) {
    const auto t = transform_from_matrix(reference::standard_hamming_transform(), one(gf2), TransformForm::standard_nullrow);
    EXPECT_EQ(t.source().dimension, 4u);
    EXPECT_EQ(eigenspace(t, one(gf2)), kernel_basis(hamming74_reference().parity_check));
    EXPECT_THROW(transform_from_matrix(FieldMatrix(gf2, 2, 2), one(gf2), TransformForm::cyclic).matrix(),
                 eigenvalue_unsuitable);
}

TEST(TransformForm, StringRoundTrip) {
    for (auto f : {TransformForm::standard_nullrow, TransformForm::standard_combo, TransformForm::cyclic,
                   TransformForm::appendix_systematic})
        EXPECT_EQ(transform_form_from_string(to_string(f)), f);
    EXPECT_FALSE(transform_form_from_string("fourier"));
}
