#pragma once

// JSON encodings of scalars, vectors, matrices, series and check reports.
//
// Scalars are read in any of three forms:
//   {"e1":[re,im],"e2":[re,im]}   idempotent components
//   {"w":[a,b,c,d]}               a + b i + c j + d k
//   {"h":[b1,b2]}                 b1 + k b2
// and written in idempotent form (or cartesian on request). Numbers are
// written with 17 significant digits.

#include <string>
#include <vector>

#include <json.hpp>

#include "hyplab/dmodule.hpp"
#include "hyplab/dop.hpp"
#include "hyplab/hyperscalar.hpp"
#include "hyplab/theoremlab.hpp"

namespace hyplab {

using Json = nlohmann::ordered_json;

enum class ScalarFormat { Idempotent, Cartesian };

ScalarFormat parse_scalar_format(const std::string& name);

Bicomplex scalar_from_json(const Json& j);
BCVector vector_from_json(const Json& j);
/// Row-major {"rows","cols","e1","e2"} or the cartesian {"w": [[[a,b,c,d],...],...]}.
BCMatrix matrix_from_json(const Json& j);
/// A JSON array of matrices, or {"family": [...]}.
std::vector<BCMatrix> family_from_json(const Json& j);
/// An array of vectors, or {"kind":"geometric","ratio":<scalar>,"seed_vector":<vector>}.
TermSource series_from_json(const Json& j);

Json to_json(const Bicomplex& z, ScalarFormat fmt = ScalarFormat::Idempotent);
Json to_json(const Hyperbolic& h, ScalarFormat fmt = ScalarFormat::Idempotent);
Json to_json(const BCVector& v);
Json to_json(const BCMatrix& t);

Json to_json(const OperatorNormReport& r, ScalarFormat fmt);
Json to_json(const SolveReport& r, ScalarFormat fmt);
Json to_json(const SurjectivityReport& r);
Json to_json(const SeriesReport& r, ScalarFormat fmt);
Json to_json(const ContinuityReport& r, ScalarFormat fmt);
Json to_json(const SubadditivityReport& r, ScalarFormat fmt);
Json to_json(const BallScalingReport& r, ScalarFormat fmt);
Json to_json(const ZabreikoTrace& r, ScalarFormat fmt);
Json to_json(const UBPReport& r, ScalarFormat fmt);
Json to_json(const OpenMappingReport& r, ScalarFormat fmt);

/// Deterministic text: insertion-ordered keys, two-space indentation, arrays
/// of scalars on one line, doubles at 17 significant digits.
std::string dump_canonical(const Json& j);

}  // namespace hyplab
