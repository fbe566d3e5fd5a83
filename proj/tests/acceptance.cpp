// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <perfectntt/perfectntt.hpp>

#include "oracles.hpp"

using namespace perfectntt;

namespace {

const PrimeModulus gf2(2);
const PrimeModulus gf3(3);
constexpr std::size_t trials = 1000;
constexpr std::uint64_t seed = 20240101;

// Collects failed sub-checks for one criterion.
struct Criterion {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

struct Golden {
    std::string name;
    TransformSpec t;
};

FieldElement one(PrimeModulus m) { return FieldElement::one(m); }

std::vector<Golden> golden() {
    return {
        {"standard-hamming", build_standard(hamming74_reference(), one(gf2), NullRows{})},
        {"ternary-hamming", build_standard(hamming_parity_check(3, 3), one(gf3), NullRows{})},
        {"cyclic-hamming", build_cyclic(cyclic_hamming_spec(2, 3), one(gf2))},
        {"binary-golay", build_cyclic(golay_spec(GolayVariant::binary), one(gf2))},
        {"ternary-golay", build_cyclic(golay_spec(GolayVariant::ternary), one(gf3))},
        {"systematic-golay", build_standard(golay_spec(GolayVariant::ternary_systematic), one(gf3), NullRows{})},
        {"extended-golay", build_extended_golay(one(gf3))},
    };
}

const TransformSpec& find(const std::vector<Golden>& g, const std::string& name) {
    for (const auto& x : g)
        if (x.name == name) return x.t;
    throw std::out_of_range(name);
}

void golden_matrices(Criterion& c, const std::vector<Golden>& g) {
    c.expect(find(g, "standard-hamming").matrix() == reference::standard_hamming_transform(), "standard Hamming 7x7");
    c.expect(find(g, "ternary-hamming").matrix() == reference::ternary_hamming_transform(), "ternary Hamming 13x13");
    c.expect(find(g, "cyclic-hamming").matrix() == reference::cyclic_hamming_transform(), "cyclic Hamming 7x7");
    c.expect(find(g, "binary-golay").matrix() == reference::binary_golay_transform(), "binary Golay 23x23");
    c.expect(find(g, "ternary-golay").matrix() == reference::ternary_golay_circulant(), "ternary Golay circulant 11x11");
    c.expect(find(g, "systematic-golay").matrix() == reference::ternary_golay_systematic_transform(),
             "ternary systematic Golay 11x11");
    c.expect(find(g, "extended-golay").matrix() == reference::extended_golay_transform(), "extended Golay 12x12");
    c.expect(find(g, "extended-golay").inverse_matrix() == reference::extended_golay_inverse(), "extended Golay inverse");
}

void determinants(Criterion& c, const std::vector<Golden>& g) {
    c.expect(find(g, "binary-golay").determinant().value() == 1, "det binary Golay = 1");
    c.expect(find(g, "systematic-golay").determinant().value() == 2, "det systematic Golay = 2");
    c.expect(find(g, "extended-golay").determinant().value() == 2, "det extended Golay = 2");
}

void ternary_cyclic_golay(Criterion& c, const std::vector<Golden>& g) {
    const auto& t = find(g, "ternary-golay");
    const auto order = multiplicative_order(t.matrix());
    c.expect(order && *order == 242, "multiplicative order 242");
    // (2+x)^6 (1+x+x^2+x^3+2x^4+x^5), expanded by schoolbook products
    oracle::Poly expected{1};
    for (int i = 0; i < 6; ++i) expected = oracle::poly_mul(expected, {2, 1}, 3);
    expected = oracle::poly_mul(expected, {1, 1, 1, 1, 2, 1}, 3);
    c.expect(char_poly(t.matrix()) == FieldPoly(gf3, expected), "characteristic polynomial");
    const auto eig = eigenspace(t, one(gf3));
    c.expect(eig.rows() == 6, "eigenspace dimension 6");
    std::size_t fixed = 0;
    for_each_codeword(eig, [&](const FieldVector& v) { fixed += apply(t, v) == v; });
    c.expect(fixed == 729, "729 eigenvectors");
}

void ternary_systematic_golay(Criterion& c, const std::vector<Golden>& g) {
    const auto& t = find(g, "systematic-golay");
    const FieldPoly expected(gf3, {1, 0, 0, 2, 2, 1, 2, 2, 1, 1, 2, 1});
    c.expect(char_poly(t.matrix()) == expected, "characteristic polynomial");
    c.expect(eigenspace(t, one(gf3)).rows() == 6, "eigenspace dimension 6");
}

void perfectness(Criterion& c, const std::vector<Golden>& g) {
    const auto witness = [&](const std::string& name, std::size_t radius, std::size_t dim) {
        const auto r = is_perfect_transform(find(g, name));
        c.expect(r.perfect && r.radius == radius && r.dimension == dim,
                 name + " expected (true, t=" + std::to_string(radius) + ", dim=" + std::to_string(dim) + ")");
    };
    witness("standard-hamming", 1, 4);
    witness("cyclic-hamming", 1, 4);
    witness("ternary-hamming", 1, 10);
    witness("binary-golay", 3, 12);
    witness("ternary-golay", 2, 6);
    witness("systematic-golay", 2, 6);
    c.expect(7 - 3 == 4 && hamming_ball_volume(2, 7, 1) == 8, "1+7 = 2^3");
    c.expect(hamming_ball_volume(2, 23, 3) == 2048, "1+23+253+1771 = 2^11");
    c.expect(hamming_ball_volume(3, 11, 2) == 243, "1+22+220 = 3^5");
    const auto control = build_standard(shortened(hamming74_reference(), 0), one(gf2), NullRows{});
    c.expect(!is_perfect_transform(control).perfect, "shortened (6,3) control is not perfect");
}

void eigenspace_is_code(Criterion& c, const std::vector<Golden>& g) {
    for (const auto& [name, t] : g)
        c.expect(eigenspace(t, one(t.modulus())) == kernel_basis(t.source().parity_check), name);
    c.expect(same_row_space(eigenspace(find(g, "standard-hamming"), one(gf2)), reference::hamming74_generator()),
             "standard Hamming eigenspace = printed G");
}

void codeword_invariance(Criterion& c, const std::vector<Golden>& g) {
    const auto exhaustive = [&](const std::string& name, std::size_t expected_words) {
        const auto& t = find(g, name);
        std::size_t words = 0, fixed = 0;
        for_each_codeword(generator_from_parity(t.source()), [&](const FieldVector& cw) {
            ++words;
            fixed += apply(t, cw) == cw;
        });
        c.expect(words == expected_words && fixed == words,
                 name + ": " + std::to_string(fixed) + "/" + std::to_string(words) + " fixed");
    };
    exhaustive("standard-hamming", 16);
    exhaustive("cyclic-hamming", 16);
    exhaustive("ternary-golay", 729);
    exhaustive("systematic-golay", 729);
    exhaustive("binary-golay", 4096);
}

void property_suite(Criterion& c, const std::vector<Golden>& g) {
    for (const auto* name : {"cyclic-hamming", "ternary-golay", "binary-golay"}) {
        const auto& t = find(g, name);
        const auto rep = verify_properties(t, trials, seed);
        for (const auto& pc : rep.checks) {
            c.expect(pc.applicable && pc.passed, std::string(name) + " " + pc.name + " " + pc.detail);
            if (pc.name == "linearity") c.expect(pc.cases >= trials, std::string(name) + " linearity cases");
            if (pc.name == "time_shift" || pc.name == "frequency_shift")
                c.expect(pc.cases == trials * t.length(), std::string(name) + " " + pc.name + " covers all shifts");
        }
        // independent restatement of the impulse and constant-sequence contracts
        c.expect(apply(t, FieldVector::unit(t.modulus(), t.length(), 0)) == t.matrix().column(0),
                 std::string(name) + " impulse = column 0");
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < t.length(); ++j) s += t.matrix()(0, j);
        for (std::uint32_t r = 0; r < t.modulus().value(); ++r)
            c.expect(apply(t, FieldVector::constant(t.modulus(), t.length(), r)) ==
                         FieldVector::constant(t.modulus(), t.length(), static_cast<std::int64_t>((r * s) % t.modulus().value())),
                     std::string(name) + " constant r=" + std::to_string(r));
    }
}

void round_trip(Criterion& c, const std::vector<Golden>& g) {
    std::mt19937_64 rng(seed);
    for (const auto& [name, t] : g) {
        std::size_t ok = 0;
        for (std::size_t i = 0; i < trials; ++i) {
            const auto v = random_vector(t.modulus(), t.length(), rng);
            ok += apply_inverse(t, apply(t, v)) == v;
        }
        c.expect(ok == trials, name + " round trip " + std::to_string(ok) + "/" + std::to_string(trials));
        if (t.form() == TransformForm::cyclic) c.expect(t.inverse_matrix().is_circulant(), name + " inverse circulant");
    }
}

void appendix_formula(Criterion& c, const std::vector<Golden>&) {
    const auto spec = golay_spec(GolayVariant::ternary_systematic);
    const auto p = systematic_p_block(spec);
    c.expect(build_appendix_systematic(p, one(gf3)).matrix() == build_standard(spec, one(gf3), NullRows{}).matrix(),
             "appendix = null-row inflation at lambda=1");
    c.expect(build_appendix_systematic(p, FieldElement(2, gf3)).matrix() ==
                 build_standard(spec, FieldElement(2, gf3), NullRows{}).matrix(),
             "appendix = null-row inflation at lambda=2");
    bool rejected = false;
    try {
        build_appendix_systematic(p, FieldElement(0, gf3));
    } catch (const eigenvalue_unsuitable&) {
        rejected = true;
    }
    c.expect(rejected, "lambda=0 rejected");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&, const std::vector<Golden>&)>>> criteria = {
        {"golden_matrices", golden_matrices},
        {"determinants", determinants},
        {"ternary_cyclic_golay", ternary_cyclic_golay},
        {"ternary_systematic_golay", ternary_systematic_golay},
        {"perfectness_witnesses", perfectness},
        {"eigenspace_equals_code", eigenspace_is_code},
        {"codeword_invariance", codeword_invariance},
        {"property_suite", property_suite},
        {"round_trip", round_trip},
        {"appendix_formula", appendix_formula},
    };

    std::vector<Golden> g;
    try {
        g = golden();
    } catch (const std::exception& e) {
        std::cout << "FAIL building golden transforms: " << e.what() << '\n';
        return 1;
    }

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            criteria[i].second(c, g);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        failed += !ok;
        std::cout << "criterion " << i + 1 << ' ' << criteria[i].first << ' ' << (ok ? "PASS" : "FAIL") << " ("
                  << c.checks << " checks)";
        for (const auto& f : c.failures) std::cout << "\n    failed: " << f;
        std::cout << '\n';
    }
    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << '\n';
    return failed == 0 ? 0 : 1;
}
