#pragma once

#include "skewsym/conjugation.hpp"
#include "skewsym/duality.hpp"
#include "skewsym/models.hpp"
#include "skewsym/numerics.hpp"
#include "skewsym/types.hpp"

#include <json.hpp>

#include <string>

// Shared file format: matrices are {"rows", "cols", "data"} with data a
// row-major nested array of [re, im] pairs; vectors are {"dim", "data"};
// conjugations are {"dim", "kernel"}. Parsers reject non-finite numbers and
// inconsistent shapes with ParseError. All floats print with 17 significant
// digits.

namespace skewsym {

using Json = nlohmann::json;

std::string format_float(double v);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

Json conjugation_to_json(const Conjugation& c);
/// Parses and validates; validation failures surface as the usual
/// construction errors, not ParseError.
Conjugation conjugation_from_json(const Json& j, double tol = kConstructionTol);

Json basis_to_json(const SubspaceBasis& basis);
SubspaceBasis basis_from_json(const Json& j);

Json symmetry_report_to_json(const SymmetryReport& rep);
Json alpha_report_to_json(const AlphaReport& rep);
Json distance_report_to_json(const DistanceReport& rep);
Json reflexivity_report_to_json(const ReflexivityReport& rep);
Json example_bundle_to_json(const ExampleBundle& bundle);

/// Reads a whole file and parses it as JSON; throws ParseError on missing
/// files or malformed content.
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace skewsym
