// Command-line front end: validation, classification/decomposition,
// distance and alpha computation, seeded ratio scans, reflexivity checks,
// model-space verification and example emission.
//
// Exit codes: 0 success, 1 domain/validation failure, 2 I/O or parse
// failure. Every command's output is a pure function of its input files,
// flags and seed.

#include "skewsym/conjugation.hpp"
#include "skewsym/duality.hpp"
#include "skewsym/io.hpp"
#include "skewsym/models.hpp"
#include "skewsym/numerics.hpp"
#include "skewsym/random.hpp"
#include "skewsym/scan.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace skewsym;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        write_text_file(out_path, content);
    }
}

int cmd_validate(const std::string& conj_path, double tol) {
    const Json j = load_json_file(conj_path);
    if (!j.is_object() || !j.contains("kernel")) {
        throw ParseError("conjugation must be an object with a 'kernel' field");
    }
    const ComplexMatrix kernel = matrix_from_json(j["kernel"]);
    if (kernel.rows() != kernel.cols()) {
        std::cout << "valid=false reason=kernel_not_square\n";
        return 1;
    }
    const KernelResiduals r = kernel_residuals(kernel);
    std::cout << "symmetry_residual=" << format_float(r.symmetry) << '\n';
    std::cout << "unitarity_residual=" << format_float(r.unitarity) << '\n';
    const bool ok = r.symmetry <= tol && r.unitarity <= tol;
    std::cout << "valid=" << (ok ? "true" : "false") << '\n';
    return ok ? 0 : 1;
}

int cmd_classify(const std::string& conj_path, const std::string& op_path, double tol,
                 const std::string& out_path) {
    const Conjugation c = conjugation_from_json(load_json_file(conj_path));
    const ComplexMatrix t = matrix_from_json(load_json_file(op_path));
    const SymmetryReport rep = symmetry_class(c, t, tol);
    const SplitParts parts = split_parts(c, t);
    Json doc{{"classification", symmetry_report_to_json(rep)},
             {"symmetric_part", matrix_to_json(parts.symmetric_part)},
             {"skew_part", matrix_to_json(parts.skew_part)}};
    emit(out_path, doc.dump(2));
    return 0;
}

int cmd_distance(const std::string& conj_path, const std::string& op_path, int k,
                 const std::string& method_name, std::uint64_t seed,
                 const std::string& out_path) {
    const Conjugation c = conjugation_from_json(load_json_file(conj_path));
    const ComplexMatrix t = matrix_from_json(load_json_file(op_path));
    const AlphaMethod method =
        method_name == "sampled" ? AlphaMethod::kSampled : AlphaMethod::kClosedForm;
    Json doc{{"distance", distance_report_to_json(distance_to_skew(c, t))}};
    if (k == 0 || k == 1) {
        doc["alpha1"] = alpha_report_to_json(alpha(c, t, 1, method, seed));
    }
    if (k == 0 || k == 2) {
        doc["alpha2"] = alpha_report_to_json(alpha(c, t, 2, method, seed));
    }
    emit(out_path, doc.dump(2));
    return 0;
}

int cmd_scan(const RunConfig& config) {
    const std::vector<ScanRecord> records = ratio_scan(config);
    const std::string rendered = config.format == OutputFormat::kTabular
                                     ? scan_to_csv(records)
                                     : scan_to_json(records);
    emit(config.out, rendered);
    return 0;
}

int cmd_reflexivity(const std::string& subspace_path, const std::string& builtin, int k,
                    int trials, std::uint64_t seed, const std::string& out_path) {
    Json doc;
    if (!builtin.empty()) {
        if (builtin.rfind("skew:", 0) == 0) {
            const int n = std::stoi(builtin.substr(5));
            if (n < 1) throw InvalidArgument("builtin skew:<n> needs n >= 1");
            const Conjugation c = random_conjugation(n, mix_seed(seed, 0xC0117));
            const SubspaceBasis basis = structured_basis(c, StructuredKind::kSkew);
            const ReflexivityReport rep = reflexivity_check(basis, k, c, trials, seed);
            doc = reflexivity_report_to_json(rep);
        } else if (builtin == "example:nonreflexive") {
            const ExampleBundle bundle = nonreflexive_example();
            SubspaceBasis algebra;
            algebra.rows = 2;
            algebra.cols = 2;
            algebra.elements = bundle.families.at("algebra");
            const ReflexivityReport rep =
                reflexivity_check(algebra, k, std::nullopt, trials, seed);
            doc = reflexivity_report_to_json(rep);
            doc["note"] = bundle.note;
        } else {
            throw InvalidArgument("unknown builtin '" + builtin +
                                  "' (expected skew:<n> or example:nonreflexive)");
        }
    } else {
        const SubspaceBasis raw = basis_from_json(load_json_file(subspace_path));
        const SubspaceBasis basis = orthonormalize(raw.elements);
        const ReflexivityReport rep = reflexivity_check(basis, k, std::nullopt, trials, seed);
        doc = reflexivity_report_to_json(rep);
    }
    emit(out_path, doc.dump(2));
    return 0;
}

int cmd_model_verify(int k, int trials, std::uint64_t seed, const std::string& out_path) {
    const ModelSpaceZk ms = model_space(k);
    const SubspaceBasis skew = structured_basis(ms.conjugation, StructuredKind::kSkew);

    double max_antisym = 0.0;
    double max_equal_index = 0.0;
    double max_antidiag = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        ComplexMatrix a = ComplexMatrix::Zero(k, k);
        for (const ComplexMatrix& e : skew.elements) a += rng.complex_gaussian() * e;
        const double scale = std::max(operator_norm(a), 1e-300);

        max_antidiag = std::max(max_antidiag, antidiagonal_check(ms, a) / scale);
        for (int lam_idx = 0; lam_idx <= 20; ++lam_idx) {
            Complex lambda(0.0, 0.0);
            if (lam_idx > 0) {
                const double radius = 0.95 * std::sqrt(rng.uniform());
                const double angle = 2.0 * M_PI * rng.uniform();
                lambda = radius * Complex(std::cos(angle), std::sin(angle));
            }
            for (int n = 0; n < k; ++n) {
                for (int m = 0; m < k; ++m) {
                    const ModelPairingResiduals res =
                        model_identities_check(ms, a, lambda, n, m);
                    max_antisym = std::max(max_antisym, res.antisymmetry / scale);
                    max_equal_index = std::max(max_equal_index, res.equal_index / scale);
                }
            }
        }
    }
    Json doc{{"k", k},
             {"trials", trials},
             {"max_antisymmetry_residual", max_antisym},
             {"max_equal_index_residual", max_equal_index},
             {"max_antidiagonal_residual", max_antidiag}};
    emit(out_path, doc.dump(2));
    return 0;
}

int cmd_examples(const std::string& which, const std::string& out_path) {
    Json doc;
    if (which == "c3:1" || which == "c3:2") {
        doc = example_bundle_to_json(c3_example(which.back() == '1' ? 1 : 2));
    } else if (which == "nonreflexive") {
        doc = example_bundle_to_json(nonreflexive_example());
    } else if (which.rfind("model:", 0) == 0) {
        const int k = std::stoi(which.substr(6));
        const ModelSpaceZk ms = model_space(k);
        const KernelVector at_zero = kernel_vector(ms, Complex(0.0, 0.0));
        doc = Json{{"k", ms.k},
                   {"conjugation", conjugation_to_json(ms.conjugation)},
                   {"shift", matrix_to_json(ms.shift)},
                   {"kernel_at_zero", vector_to_json(at_zero.vector)},
                   {"kernel_tilde_at_zero", vector_to_json(at_zero.tilde)}};
    } else {
        throw InvalidArgument("unknown example '" + which +
                              "' (expected c3:1, c3:2, nonreflexive or model:<k>)");
    }
    emit(out_path, doc.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for conjugation-symmetric and skew-symmetric operators"};
    app.require_subcommand(1);

    std::string conj_path, op_path, out_path, subspace_path, builtin, which;
    std::string method = "closed-form";
    std::string format = "tabular";
    double tol = kDefaultTol;
    double validate_tol = kConstructionTol;
    std::uint64_t seed = 0;
    int k = 0;
    int trials = 50;
    RunConfig scan_config;

    CLI::App* validate = app.add_subcommand("validate", "Validate a conjugation kernel file");
    validate->add_option("--conjugation", conj_path, "conjugation JSON file")->required();
    validate->add_option("--tol", validate_tol, "absolute validation tolerance");

    CLI::App* classify =
        app.add_subcommand("classify", "Classify an operator and split it into parts");
    classify->add_option("--conjugation", conj_path)->required();
    classify->add_option("--operator", op_path)->required();
    classify->add_option("--tol", tol, "relative classification tolerance");
    classify->add_option("--out", out_path);

    CLI::App* distance =
        app.add_subcommand("distance", "Distance to the skew class and alpha quantities");
    distance->add_option("--conjugation", conj_path)->required();
    distance->add_option("--operator", op_path)->required();
    distance->add_option("--k", k, "restrict to one alpha (1 or 2; default both)")
        ->check(CLI::IsMember({0, 1, 2}));
    distance->add_option("--method", method)->check(CLI::IsMember({"closed-form", "sampled"}));
    distance->add_option("--seed", seed);
    distance->add_option("--out", out_path);

    CLI::App* scan = app.add_subcommand("scan", "Seeded randomized hyperreflexivity ratio scan");
    scan->add_option("--dim", scan_config.dim, "operator dimension")->required();
    scan->add_option("--trials", scan_config.trials, "number of trials")->required();
    scan->add_option("--seed", scan_config.seed);
    scan->add_option("--tol", scan_config.tol);
    scan->add_option("--threads", scan_config.threads)->check(CLI::PositiveNumber);
    scan->add_option("--out", scan_config.out);
    scan->add_option("--format", format)->check(CLI::IsMember({"tabular", "structured"}));

    CLI::App* reflexivity = app.add_subcommand("reflexivity", "Rank-k density check of a preannihilator");
    reflexivity->add_option("--subspace", subspace_path, "subspace basis JSON file");
    reflexivity->add_option("--builtin", builtin, "skew:<n> or example:nonreflexive");
    reflexivity->add_option("--k", k)->check(CLI::IsMember({1, 2}));
    reflexivity->add_option("--trials", trials);
    reflexivity->add_option("--seed", seed);
    reflexivity->add_option("--out", out_path);

    CLI::App* model_verify =
        app.add_subcommand("model-verify", "Kernel-vector identity residuals on the model space");
    int model_k = 2;
    int model_trials = 20;
    model_verify->add_option("--k", model_k, "model space dimension")->required();
    model_verify->add_option("--trials", model_trials);
    model_verify->add_option("--seed", seed);
    model_verify->add_option("--out", out_path);

    CLI::App* examples = app.add_subcommand("examples", "Emit a named example bundle");
    examples
        ->add_option("--which", which, "c3:1, c3:2, nonreflexive or model:<k>")
        ->required();
    examples->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(conj_path, validate_tol);
        if (classify->parsed()) return cmd_classify(conj_path, op_path, tol, out_path);
        if (distance->parsed())
            return cmd_distance(conj_path, op_path, k, method, seed, out_path);
        if (scan->parsed()) {
            scan_config.format =
                format == "structured" ? OutputFormat::kStructured : OutputFormat::kTabular;
            return cmd_scan(scan_config);
        }
        if (reflexivity->parsed()) {
            if (subspace_path.empty() == builtin.empty()) {
                throw InvalidArgument("reflexivity needs exactly one of --subspace / --builtin");
            }
            const int kk = (k == 0) ? 1 : k;
            return cmd_reflexivity(subspace_path, builtin, kk, trials, seed, out_path);
        }
        if (model_verify->parsed())
            return cmd_model_verify(model_k, model_trials, seed, out_path);
        if (examples->parsed()) return cmd_examples(which, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
