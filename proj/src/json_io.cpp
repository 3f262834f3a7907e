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


#include "dirikit/json_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dirikit::io {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InputError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw InputError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const AnalyticFunction& f) {
  Json coeffs = Json::array();
  for (const Complex& c : f.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", std::move(coeffs)}, {"exact", f.exact()}};
}

Json to_json(const CircleMeasure& mu) {
  Json atoms = Json::array();
  for (const Atom& a : mu.atoms()) {
    atoms.push_back(Json{{"angle", a.angle}, {"mass", a.mass}});
  }
  return Json{{"atoms", std::move(atoms)}, {"lebesgue", mu.lebesgue_mass()}};
}

Json to_json(const MeasureTuple& tuple) {
  Json out = Json::array();
  for (const CircleMeasure& mu : tuple.entries()) out.push_back(to_json(mu));
  return out;
}

Json to_json(const QuadratureSpec& spec) {
  return Json{{"radial", spec.radial},
              {"angular", spec.angular},
              {"clip", spec.clip},
              {"levels", spec.levels}};
}

Json to_json(const DirichletResult& r) {
  return Json{{"value", r.value},
              {"method", to_string(r.method)},
              {"error", r.error_estimate},
              {"order", r.order}};
}

Json to_json(const DouglasCertificate& c, int order) {
  Json out = to_json(DirichletResult{c.lhs, Method::kQuadrature, c.lhs_error, order});
  out["alpha"] = to_json(c.alpha);
  out["g"] = to_json(c.g);
  out["lhs"] = c.lhs;
  out["rhs"] = c.rhs;
  out["residual"] = c.residual;
  out["reconstruction_residual"] = c.reconstruction_residual;
  return out;
}

Json to_json(const DefectSequence& d) {
  Json diffs = Json::object();
  for (std::size_t p = 0; p < d.differences.size(); ++p) {
    diffs[std::to_string(p + 1)] = d.differences[p];
  }
  return Json{{"beta", d.beta}, {"differences", std::move(diffs)}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError("complex numbers are written [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

AnalyticFunction function_from_json(const Json& j) {
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw InputError("'coeffs' must be an array");
  std::vector<Complex> c;
  c.reserve(coeffs.size());
  for (const Json& x : coeffs) c.push_back(complex_from_json(x));
  bool exact = true;
  if (j.contains("exact")) {
    if (!j["exact"].is_boolean()) throw InputError("'exact' must be a boolean");
    exact = j["exact"].get<bool>();
  }
  return AnalyticFunction(std::move(c), exact);
}

CircleMeasure measure_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("a measure must be a JSON object");
  std::vector<Atom> atoms;
  if (j.contains("atoms")) {
    if (!j["atoms"].is_array()) throw InputError("'atoms' must be an array");
    for (const Json& a : j["atoms"]) {
      atoms.push_back({number(field(a, "angle"), "angle"),
                       number(field(a, "mass"), "mass")});
    }
  }
  const double c = j.contains("lebesgue") ? number(j["lebesgue"], "lebesgue") : 0.0;
  try {
    return CircleMeasure(std::move(atoms), c);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

MeasureTuple tuple_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("a tuple must be a non-empty array of measures");
  }
  std::vector<CircleMeasure> entries;
  for (const Json& m : j) entries.push_back(measure_from_json(m));
  return MeasureTuple(std::move(entries));
}

QuadratureSpec spec_from_json(const Json& j) {
  QuadratureSpec s;
  if (!j.is_object()) throw InputError("a quadrature spec must be an object");
  if (j.contains("radial")) s.radial = integer(j["radial"], "radial");
  if (j.contains("angular")) s.angular = integer(j["angular"], "angular");
  if (j.contains("clip")) s.clip = number(j["clip"], "clip");
  if (j.contains("levels")) s.levels = integer(j["levels"], "levels");
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return s;
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  const double im = z.imag();
  if (std::signbit(im)) {
    out += "-" + format_double(-im);
  } else {
    out += "+" + format_double(im);
  }
  return out + "j";
}

std::string gram_to_csv(const GramSection& g) {
  std::ostringstream out;
  const auto size = g.matrix.rows();
  for (Eigen::Index k = 0; k < size; ++k) out << (k ? "," : "") << k;
  out << '\n';
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index k = 0; k < size; ++k) {
      out << (k ? "," : "") << format_complex(g.matrix(j, k));
    }
    out << '\n';
  }
  return out.str();
}

Json load_json_argument(std::string_view arg) {
  std::size_t i = 0;
  while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
  std::string text;
  if (i < arg.size() && (arg[i] == '{' || arg[i] == '[')) {
    text = std::string(arg);
  } else {
    std::ifstream in{std::string(arg)};
    if (!in) throw InputError("cannot read '" + std::string(arg) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace dirikit::io
