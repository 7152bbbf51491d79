#include "skewsym/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace skewsym {

namespace {

double finite_number(const Json& j, const char* what) {
    if (!j.is_number()) {
        throw ParseError(std::string("expected a number for ") + what);
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError(std::string("non-finite value for ") + what);
    }
    return v;
}

Complex entry_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("matrix entry must be a [re, im] pair");
    }
    return {finite_number(j[0], "entry real part"), finite_number(j[1], "entry imaginary part")};
}

Json entry_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Index count_field(const Json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer()) {
        throw ParseError(std::string("missing integer field '") + name + "'");
    }
    const auto v = j[name].get<long long>();
    if (v < 0) throw ParseError(std::string("field '") + name + "' must be nonnegative");
    return static_cast<Index>(v);
}

}  // namespace

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json data = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back(entry_to_json(m(i, j)));
        }
        data.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("matrix must be an object");
    const Index rows = count_field(j, "rows");
    const Index cols = count_field(j, "cols");
    if (!j.contains("data") || !j["data"].is_array() ||
        static_cast<Index>(j["data"].size()) != rows) {
        throw ParseError("matrix data must be an array with 'rows' rows");
    }
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const Json& row = j["data"][static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            throw ParseError("matrix row has wrong length");
        }
        for (Index k = 0; k < cols; ++k) {
            m(i, k) = entry_from_json(row[static_cast<std::size_t>(k)]);
        }
    }
    return m;
}

Json vector_to_json(const ComplexVector& v) {
    Json data = Json::array();
    for (Index i = 0; i < v.size(); ++i) data.push_back(entry_to_json(v(i)));
    return Json{{"dim", v.size()}, {"data", std::move(data)}};
}

ComplexVector vector_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("vector must be an object");
    const Index dim = count_field(j, "dim");
    if (!j.contains("data") || !j["data"].is_array() ||
        static_cast<Index>(j["data"].size()) != dim) {
        throw ParseError("vector data must be an array with 'dim' entries");
    }
    ComplexVector v(dim);
    for (Index i = 0; i < dim; ++i) {
        v(i) = entry_from_json(j["data"][static_cast<std::size_t>(i)]);
    }
    return v;
}

Json conjugation_to_json(const Conjugation& c) {
    return Json{{"dim", c.dim()}, {"kernel", matrix_to_json(c.kernel())}};
}

Conjugation conjugation_from_json(const Json& j, double tol) {
    if (!j.is_object() || !j.contains("kernel")) {
        throw ParseError("conjugation must be an object with a 'kernel' field");
    }
    const Index dim = count_field(j, "dim");
    ComplexMatrix kernel = matrix_from_json(j["kernel"]);
    if (kernel.rows() != dim) {
        throw ParseError("conjugation 'dim' does not match kernel size");
    }
    return Conjugation(std::move(kernel), tol);
}

Json basis_to_json(const SubspaceBasis& basis) {
    Json elems = Json::array();
    for (const ComplexMatrix& m : basis.elements) elems.push_back(matrix_to_json(m));
    return Json{{"rows", basis.rows}, {"cols", basis.cols}, {"elements", std::move(elems)}};
}

SubspaceBasis basis_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
        throw ParseError("basis must be an object with an 'elements' array");
    }
    SubspaceBasis basis;
    basis.rows = count_field(j, "rows");
    basis.cols = count_field(j, "cols");
    for (const Json& e : j["elements"]) {
        ComplexMatrix m = matrix_from_json(e);
        if (m.rows() != basis.rows || m.cols() != basis.cols) {
            throw ParseError("basis element shape mismatch");
        }
        basis.elements.push_back(std::move(m));
    }
    return basis;
}

namespace {

const char* class_name(OperatorClass c) {
    switch (c) {
        case OperatorClass::kSymmetric: return "symmetric";
        case OperatorClass::kSkew: return "skew";
        case OperatorClass::kZero: return "zero";
        default: return "neither";
    }
}

Json candidate_to_json(const RankOneCandidate& cand) {
    return Json{{"coefficients", vector_to_json(cand.coefficients)},
                {"matrix", matrix_to_json(cand.matrix)},
                {"ratio", cand.ratio}};
}

}  // namespace

Json symmetry_report_to_json(const SymmetryReport& rep) {
    return Json{{"label", class_name(rep.label)},
                {"symmetric_residual", rep.symmetric_residual},
                {"skew_residual", rep.skew_residual}};
}

Json alpha_report_to_json(const AlphaReport& rep) {
    Json j{{"k", rep.k},
           {"value", rep.value},
           {"method", rep.method == AlphaMethod::kClosedForm ? "closed_form" : "sampled"}};
    if (rep.k == 1) {
        j["witness"] = vector_to_json(rep.witness_h);
    } else {
        j["witness"] = Json{{"h", vector_to_json(rep.witness_h)},
                            {"g", vector_to_json(rep.witness_g)}};
    }
    return j;
}

Json distance_report_to_json(const DistanceReport& rep) {
    return Json{{"dist", rep.dist},
                {"nearest", matrix_to_json(rep.nearest)},
                {"certificate_gap", rep.certificate_gap}};
}

Json reflexivity_report_to_json(const ReflexivityReport& rep) {
    Json evidence = Json::array();
    for (const RankOneCandidate& cand : rep.evidence) {
        evidence.push_back(candidate_to_json(cand));
    }
    return Json{{"k", rep.k},
                {"preannihilator_dim", rep.preannihilator_dim},
                {"rank_k_span_dim", rep.rank_k_span_dim},
                {"verdict", rep.verdict == ReflexivityVerdict::kReflexive
                                ? "reflexive"
                                : "not_certified"},
                {"evidence", std::move(evidence)}};
}

Json example_bundle_to_json(const ExampleBundle& bundle) {
    Json families = Json::object();
    for (const auto& [name, mats] : bundle.families) {
        Json arr = Json::array();
        for (const ComplexMatrix& m : mats) arr.push_back(matrix_to_json(m));
        families[name] = std::move(arr);
    }
    Json references = Json::object();
    for (const auto& [name, m] : bundle.references) {
        references[name] = matrix_to_json(m);
    }
    Json evidence = Json::array();
    for (const RankOneCandidate& cand : bundle.evidence) {
        evidence.push_back(candidate_to_json(cand));
    }
    Json j{{"conjugation", conjugation_to_json(bundle.conjugation)},
           {"families", std::move(families)},
           {"references", std::move(references)},
           {"evidence", std::move(evidence)}};
    if (!bundle.note.empty()) j["note"] = bundle.note;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + path);
    out << content;
    if (!out.good()) throw IoError("failed writing output file: " + path);
}

}  // namespace skewsym
