// Copyright 2026 The dirikit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON and CSV forms of the library's values.
//
//   function  {"coeffs": [[re, im], ...], "exact": bool}
//   measure   {"atoms": [{"angle": a, "mass": c}, ...], "lebesgue": c}
//   tuple     [measure, ...]
//   spec      {"radial": n, "angular": n, "clip": x, "levels": n}
//   result    {"value": x, "method": "...", "error": x, "order": n}
//
// A certificate is a result plus alpha, g, lhs, rhs and residual. Gram
// sections are CSV with a header of degrees and entries written "re+imj".

#ifndef DIRIKIT_JSON_IO_HPP_
#define DIRIKIT_JSON_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dirikit/analytic_function.hpp"
#include "dirikit/circle_measure.hpp"
#include "dirikit/dirichlet.hpp"
#include "dirikit/disc_quadrature.hpp"
#include "dirikit/operator_lab.hpp"

namespace dirikit::io {

using Json = nlohmann::ordered_json;

/// Malformed or unreadable input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(Complex z);
Json to_json(const AnalyticFunction& f);
Json to_json(const CircleMeasure& mu);
Json to_json(const MeasureTuple& tuple);
Json to_json(const QuadratureSpec& spec);
Json to_json(const DirichletResult& r);
Json to_json(const DouglasCertificate& c, int order);
Json to_json(const DefectSequence& d);

Complex complex_from_json(const Json& j);
AnalyticFunction function_from_json(const Json& j);
CircleMeasure measure_from_json(const Json& j);
MeasureTuple tuple_from_json(const Json& j);
QuadratureSpec spec_from_json(const Json& j);

/// "re+imj" with round-trip precision, e.g. "1+0j", "0.5-2j".
std::string format_complex(Complex z);
std::string gram_to_csv(const GramSection& g);

/// Parses `arg` as JSON when it starts with '{' or '[', otherwise reads the
/// file it names. Throws InputError.
Json load_json_argument(std::string_view arg);

/// Compact dump followed by a newline.
std::string dump(const Json& j);

}  // namespace dirikit::io

#endif  // DIRIKIT_JSON_IO_HPP_
