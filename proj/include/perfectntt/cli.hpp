#pragma once

// Command-line front end: gen, apply, invert, eigen, verify, info.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "codes.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "properties.hpp"
#include "reference.hpp"
#include "transforms.hpp"

namespace perfectntt::cli {

struct CliConfig {
    std::string subcommand;
    std::string code = "hamming";  // hamming | hamming74 | golay | extended-golay
    std::uint32_t p = 2;
    std::size_t m = 3;
    std::string form;  // standard | combo | cyclic | appendix; empty = default for the code
    std::string combos;  // "1+2,1+3,..." (1-based), for form=combo
    std::uint32_t lambda = 1;
    std::string matrix_path;  // load the transform from a file instead of building it
    std::string output_path;
    bool json = false;
    std::string vector;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
};

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline RowCombinations parse_combos(const std::string& text) {
    RowCombinations out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto plus = item.find('+');
        if (plus == std::string::npos) throw usage_error("combination \"" + item + "\" must look like i+j");
        const auto a = std::stoul(item.substr(0, plus));
        const auto b = std::stoul(item.substr(plus + 1));
        if (a == 0 || b == 0) throw usage_error("row combinations are 1-based");
        out.pairs.emplace_back(a - 1, b - 1);
    }
    return out;
}

inline std::string default_form(const CliConfig& c) {
    if (!c.form.empty()) return c.form;
    if (c.code == "extended-golay") return "combo";
    if (c.code == "golay" && c.p == 2) return "cyclic";
    return "standard";
}

inline CodeSpec select_code(const CliConfig& c) {
    const auto form = default_form(c);
    if (c.code == "hamming") return form == "cyclic" ? cyclic_hamming_spec(c.p, c.m) : hamming_parity_check(c.p, c.m);
    if (c.code == "hamming74") {
        if (c.p != 2) throw usage_error("hamming74 is binary (--p 2)");
        return hamming74_reference();
    }
    if (c.code == "golay") {
        if (c.p == 2) return golay_spec(GolayVariant::binary);
        if (c.p == 3) return golay_spec(form == "cyclic" ? GolayVariant::ternary : GolayVariant::ternary_systematic);
        throw usage_error("Golay codes exist over GF(2) and GF(3) only");
    }
    if (c.code == "extended-golay") {
        if (c.p != 3) throw usage_error("extended-golay is ternary (--p 3)");
        return golay_spec(GolayVariant::extended_ternary);
    }
    throw usage_error("unknown --code " + c.code);
}

inline std::optional<TransformForm> form_in_header(const MatrixDocument& doc) {
    const auto it = doc.fields.find("form");
    return it == doc.fields.end() ? std::nullopt : transform_form_from_string(it->second);
}

} // namespace detail

inline TransformSpec make_transform(const CliConfig& c) {
    if (!c.matrix_path.empty()) {
        const auto doc = parse_matrix_document(detail::read_file(c.matrix_path));
        const auto& mod = doc.matrix.modulus();
        std::uint32_t lambda = c.lambda;
        if (const auto it = doc.fields.find("lambda"); it != doc.fields.end()) lambda = static_cast<std::uint32_t>(std::stoul(it->second));
        const auto form = detail::form_in_header(doc).value_or(TransformForm::standard_nullrow);
        std::string label = "loaded";
        if (const auto it = doc.fields.find("code"); it != doc.fields.end()) label = it->second;
        return transform_from_matrix(doc.matrix, FieldElement(lambda, mod), form, label);
    }
    const auto spec = detail::select_code(c);
    const FieldElement lambda(c.lambda, spec.modulus);
    const auto form = detail::default_form(c);
    if (form == "standard") return build_standard(spec, lambda, NullRows{});
    if (form == "cyclic") return build_cyclic(spec, lambda);
    if (form == "combo") {
        if (!c.combos.empty()) return build_standard(spec, lambda, detail::parse_combos(c.combos));
        if (c.code == "extended-golay") return build_extended_golay(lambda);
        throw usage_error("--form combo needs --combos");
    }
    if (form == "appendix") return build_appendix_systematic(systematic_p_block(spec), lambda);
    throw usage_error("unknown --form " + form);
}

/// H_e for the selected code and form, without requiring H_e + lambda I to be invertible.
inline FieldMatrix make_inflated(const CliConfig& c) {
    if (!c.matrix_path.empty()) {
        const auto t = parse_matrix_document(detail::read_file(c.matrix_path));
        std::uint32_t lambda = c.lambda;
        if (const auto it = t.fields.find("lambda"); it != t.fields.end()) lambda = static_cast<std::uint32_t>(std::stoul(it->second));
        if (!t.matrix.is_square()) throw dimension_error("transform matrix must be square");
        return add_lambda_identity(t.matrix, -FieldElement(lambda, t.matrix.modulus()));
    }
    const auto spec = detail::select_code(c);
    const auto form = detail::default_form(c);
    if (form == "standard") return inflate(spec, NullRows{});
    if (form == "cyclic") return inflate(spec, CyclicShifts{});
    if (form == "combo") {
        if (!c.combos.empty()) return inflate(spec, detail::parse_combos(c.combos));
        if (c.code == "extended-golay") return inflate(spec, extended_golay_combinations());
        throw usage_error("--form combo needs --combos");
    }
    if (form == "appendix") return inflate(systematic_code(systematic_p_block(spec)), NullRows{});
    throw usage_error("unknown --form " + form);
}

/// Golden values reported by `verify` for the printed transforms.
struct ReferenceValues {
    std::optional<FieldMatrix> matrix;
    std::optional<FieldMatrix> inverse;
    std::optional<std::uint32_t> det;
    std::optional<std::uint64_t> order;
    std::optional<FieldPoly> char_poly;
};

inline ReferenceValues reference_for(const CliConfig& c, const TransformSpec& t) {
    ReferenceValues r;
    if (!c.matrix_path.empty() || c.lambda != 1) return r;
    const auto form = t.form();
    const PrimeModulus gf3(3);
    if (c.code == "hamming74" && form == TransformForm::standard_nullrow) r.matrix = reference::standard_hamming_transform();
    if (c.code == "hamming" && c.p == 3 && c.m == 3 && form == TransformForm::standard_nullrow)
        r.matrix = reference::ternary_hamming_transform();
    if (c.code == "hamming" && c.p == 2 && c.m == 3 && form == TransformForm::cyclic)
        r.matrix = reference::cyclic_hamming_transform();
    if (c.code == "golay" && c.p == 2 && form == TransformForm::cyclic) {
        r.matrix = reference::binary_golay_transform();
        r.det = 1;
    }
    if (c.code == "golay" && c.p == 3 && form == TransformForm::cyclic) {
        r.matrix = reference::ternary_golay_circulant();
        r.order = 242;
        // (2+x)^6 (1+x+x^2+x^3+2x^4+x^5)
        FieldPoly lin(gf3, {2, 1});
        auto cp = FieldPoly(gf3, {1, 1, 1, 1, 2, 1});
        for (int i = 0; i < 6; ++i) cp = cp * lin;
        r.char_poly = cp;
    }
    if (c.code == "golay" && c.p == 3 && (form == TransformForm::standard_nullrow || form == TransformForm::appendix_systematic)) {
        r.matrix = reference::ternary_golay_systematic_transform();
        r.det = 2;
        r.char_poly = FieldPoly(gf3, {1, 0, 0, 2, 2, 1, 2, 2, 1, 1, 2, 1});
    }
    if (c.code == "extended-golay" && form == TransformForm::standard_combo && c.combos.empty()) {
        r.matrix = reference::extended_golay_transform();
        r.inverse = reference::extended_golay_inverse();
        r.det = 2;
    }
    return r;
}

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void check(const std::string& name, bool ok, const std::string& expected, const std::string& got) {
        out_ << "CHECK " << name << ' ' << (ok ? "PASS" : "FAIL") << " expected=" << expected << " got=" << got << '\n';
        all_ &= ok;
    }
    void note(const std::string& text) { out_ << "NOTE " << text << '\n'; }
    bool all_passed() const { return all_; }

private:
    std::ostream& out_;
    bool all_ = true;
};

inline std::string perfect_text(const PerfectnessReport& r) {
    if (!r.perfect) return "perfect=false,dim=" + std::to_string(r.dimension);
    return "perfect=true,t=" + std::to_string(*r.radius) + ",dim=" + std::to_string(r.dimension);
}

inline int run_verify(const CliConfig& c, const TransformSpec& t, std::ostream& out) {
    Report rep(out);
    const auto& mod = t.modulus();
    const auto n = t.length();
    const auto ref = reference_for(c, t);
    out << transform_header(t) << '\n';

    const auto det = t.determinant().value();
    rep.check("determinant", det != 0, "det≠0", "det=" + std::to_string(det));
    if (ref.det) rep.check("determinant_value", det == *ref.det, "det=" + std::to_string(*ref.det), "det=" + std::to_string(det));
    if (ref.matrix) rep.check("golden_matrix", t.matrix() == *ref.matrix, "printed", t.matrix() == *ref.matrix ? "identical" : "differs");
    if (ref.inverse)
        rep.check("golden_inverse", t.inverse_matrix() == *ref.inverse, "printed",
                  t.inverse_matrix() == *ref.inverse ? "identical" : "differs");
    if (ref.order) {
        const auto order = multiplicative_order(t.matrix());
        const auto got = order ? "order=" + std::to_string(*order) : std::string("order>cap");
        rep.check("multiplicative_order", order == ref.order, "order=" + std::to_string(*ref.order), got);
    }
    if (ref.char_poly) {
        const auto cp = char_poly(t.matrix());
        rep.check("characteristic_polynomial", cp == *ref.char_poly, ref.char_poly->to_string(), cp.to_string());
    }

    const auto eig = eigenspace(t, t.lambda());
    const auto code_basis = kernel_basis(t.source().parity_check);
    rep.check("eigenspace_equals_code", eig == code_basis, "ker(H)", eig == code_basis ? "ker(H)" : "differs");
    rep.check("eigenspace_dimension", eig.rows() == t.source().dimension, "dim=" + std::to_string(t.source().dimension),
              "dim=" + std::to_string(eig.rows()));

    const auto perfect = is_perfect_transform(t);
    if (t.source().distance > 0) {
        PerfectnessReport want;
        want.dimension = t.source().dimension;
        const auto radius = (t.source().distance - 1) / 2;
        want.perfect = hamming_ball_volume(mod.value(), n, radius) == ipow(mod.value(), n - want.dimension) && radius >= 1;
        if (want.perfect) want.radius = radius;
        rep.check("perfect", perfect.perfect == want.perfect && perfect.radius == want.radius, perfect_text(want),
                  perfect_text(perfect));
    } else {
        rep.note(perfect_text(perfect));
    }

    // codewords are fixed points scaled by lambda
    const auto& generator = code_basis;
    bool invariant = true;
    std::size_t words = 0;
    if (ipow(mod.value(), generator.rows()) <= (1u << 16) || generator.rows() == 0) {
        for_each_codeword(generator, [&](const FieldVector& cw) {
            ++words;
            invariant &= apply(t, cw) == t.lambda() * cw;
        });
    } else {
        std::mt19937_64 rng(c.seed);
        for (std::size_t i = 0; i < c.trials; ++i, ++words) {
            FieldVector cw(mod, n);
            for (std::size_t r = 0; r < generator.rows(); ++r)
                cw = cw + FieldElement(static_cast<std::int64_t>(rng() % mod.value()), mod) * generator.row(r);
            invariant &= apply(t, cw) == t.lambda() * cw;
        }
    }
    rep.check("codeword_invariance", invariant, "T*c=lambda*c", std::to_string(words) + " codewords" + (invariant ? "" : " (violated)"));

    std::mt19937_64 rng(c.seed);
    bool round_trip = true;
    for (std::size_t i = 0; i < c.trials; ++i) {
        const auto v = random_vector(mod, n, rng);
        round_trip &= apply_inverse(t, apply(t, v)) == v;
    }
    rep.check("round_trip", round_trip, "v", std::to_string(c.trials) + " vectors" + (round_trip ? "" : " (mismatch)"));

    if (t.form() == TransformForm::cyclic) {
        rep.check("circulant", t.matrix().is_circulant(), "circulant", t.matrix().is_circulant() ? "circulant" : "not circulant");
        rep.check("inverse_circulant", t.inverse_matrix().is_circulant(), "circulant",
                  t.inverse_matrix().is_circulant() ? "circulant" : "not circulant");
    }

    const auto props = verify_properties(t, c.trials, c.seed);
    for (const auto& pc : props.checks) {
        if (!pc.applicable) continue;
        rep.check(pc.name, pc.passed, "holds", std::to_string(pc.cases) + " cases" + (pc.detail.empty() ? "" : "," + pc.detail));
    }
    if (props.row_sum && props.parity_weight)
        rep.note("constant_sequence row_sum=" + std::to_string(*props.row_sum) +
                 " r*weight(h)=" + std::to_string(*props.parity_weight) + "*r (weight formula ignores lambda)");

    out << (rep.all_passed() ? "RESULT PASS" : "RESULT FAIL") << '\n';
    return rep.all_passed() ? 0 : 1;
}

inline int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.subcommand == "eigen") {
            // candidates are reported even when the selected lambda is singular
            const auto h_e = make_inflated(c);
            const auto& mod = h_e.modulus();
            out << "lambda det valid\n";
            for (std::uint32_t l = 0; l < mod.value(); ++l) {
                const auto d = determinant(add_lambda_identity(h_e, FieldElement(l, mod))).value();
                out << l << ' ' << d << ' ' << (d != 0 ? "yes" : "no") << '\n';
            }
            // ker(T - lambda I) = ker(H_e)
            const auto basis = kernel_basis(h_e);
            out << "eigenspace lambda=" << mod.reduce(c.lambda) << " dim=" << basis.rows() << '\n' << basis;
            return 0;
        }
        const auto t = make_transform(c);
        const auto& mod = t.modulus();

        if (c.subcommand == "gen") {
            std::ostringstream text;
            if (c.json) {
                nlohmann::json j = nlohmann::json::parse(to_json(t.matrix()));
                j["form"] = to_string(t.form());
                j["lambda"] = t.lambda().value();
                j["code"] = t.source().label;
                text << j.dump() << '\n';
            } else {
                write_transform(text, t);
            }
            if (c.output_path.empty()) {
                out << text.str();
            } else {
                std::ofstream f(c.output_path);
                if (!f) throw usage_error("cannot write " + c.output_path);
                f << text.str();
            }
            return 0;
        }
        if (c.subcommand == "apply" || c.subcommand == "invert") {
            if (c.vector.empty()) throw usage_error("--vector is required");
            const auto v = parse_vector(c.vector, mod);
            out << (c.subcommand == "apply" ? apply(t, v) : apply_inverse(t, v)) << '\n';
            return 0;
        }
        if (c.subcommand == "info") {
            const auto& s = t.source();
            out << code_header(s) << '\n';
            out << "h(x)=" << (s.parity_poly ? s.parity_poly->to_string() : "none") << '\n';
            out << transform_header(t) << " det=" << t.determinant().value() << '\n';
            const auto pr = is_perfect_transform(t);
            out << perfect_text(pr) << '\n';
            if (pr.perfect)
                out << "sphere_packing " << t.length() << "-log_" << mod.value() << "("
                    << hamming_ball_volume(mod.value(), t.length(), *pr.radius) << ")=" << pr.dimension << '\n';
            return 0;
        }
        if (c.subcommand == "verify") return run_verify(c, t, out);
        throw usage_error("unknown subcommand " + c.subcommand);
    } catch (const eigenvalue_unsuitable& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

/// Parses argv into a config. Returns the exit code when parsing ends the program
/// (help, bad arguments); nullopt when the config is ready to run.
inline std::optional<int> parse(int argc, const char* const* argv, CliConfig& cfg, std::ostream& out, std::ostream& err) {
    CLI::App app{"Number-theoretic transforms from perfect codes over GF(p)", "perfectntt"};
    app.require_subcommand(1);

    const auto add_selection = [&](CLI::App* sub) {
        sub->add_option("--code", cfg.code, "hamming | hamming74 | golay | extended-golay")
            ->check(CLI::IsMember({"hamming", "hamming74", "golay", "extended-golay"}));
        sub->add_option("--p", cfg.p, "field characteristic");
        sub->add_option("--m", cfg.m, "Hamming redundancy m (N = (p^m-1)/(p-1))");
        sub->add_option("--form", cfg.form, "standard | combo | cyclic | appendix")
            ->check(CLI::IsMember({"standard", "combo", "cyclic", "appendix"}));
        sub->add_option("--combos", cfg.combos, "row combinations for --form combo, e.g. 1+2,1+3");
        sub->add_option("--lambda", cfg.lambda, "eigenvalue");
        sub->add_option("--matrix", cfg.matrix_path, "read the transform from a matrix file")->check(CLI::ExistingFile);
    };

    auto* gen = app.add_subcommand("gen", "write the transform matrix");
    add_selection(gen);
    gen->add_option("-o,--out", cfg.output_path, "output file (default: stdout)");
    gen->add_flag("--json", cfg.json, "emit JSON instead of the text format");

    for (const auto& [name, help] : {std::pair{"apply", "forward transform of --vector"},
                                     std::pair{"invert", "inverse transform of --vector"}}) {
        auto* sub = app.add_subcommand(name, help);
        add_selection(sub);
        sub->add_option("--vector", cfg.vector, "comma-separated residues, index 0 first")->required();
    }

    add_selection(app.add_subcommand("eigen", "eigenvalue candidates and eigenspace basis"));
    add_selection(app.add_subcommand("info", "code parameters, h(x) and perfectness witness"));

    auto* verify = app.add_subcommand("verify", "golden and property checks");
    add_selection(verify);
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--trials", cfg.trials, "random vectors per property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code != 0) err << '\n' << app.help();
        return code;
    }
    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
    return std::nullopt;
}

} // namespace perfectntt::cli
