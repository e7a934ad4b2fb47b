#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "instanton/adhm.hpp"
#include "instanton/matrix.hpp"
#include "instanton/rational.hpp"

namespace instanton {

using Json = nlohmann::ordered_json;

// Malformed JSON text (not valid JSON at all).
struct JsonParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Valid JSON with the wrong shape; the message names the offending field.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonParseError(e.what());
  }
}

// Integers that fit a JSON number are written bare; everything else uses the
// "p/q" string form.
inline Json rational_to_json(const Rational& v) {
  if (is_integer(v)) {
    const Int num = rat_num(v);
    if (num >= Int(std::numeric_limits<std::int64_t>::min()) &&
        num <= Int(std::numeric_limits<std::int64_t>::max()))
      return Json(num.convert_to<std::int64_t>());
  }
  return Json(format_rational(v));
}

inline Rational json_to_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Rational(Int(j.get<std::uint64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }
  throw SchemaError(path + ": expected an integer or a \"p/q\" string");
}

inline Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMatrix json_to_matrix(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path + ": expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw SchemaError(path + "[0]: expected a nonempty row array");
  const std::size_t cols = j[0].size();
  RatMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw SchemaError(row_path + ": expected a row array");
    if (j[i].size() != cols)
      throw SchemaError(row_path + ": expected " + std::to_string(cols) + " entries, got " +
                        std::to_string(j[i].size()));
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<int>(i), static_cast<int>(k)) =
          json_to_rational(j[i][k], row_path + "[" + std::to_string(k) + "]");
  }
  return m;
}

namespace detail {
inline int json_to_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw SchemaError(path + ": expected an integer");
  const std::int64_t v = j.get<std::int64_t>();
  if (v < 1 || v > 1000) throw SchemaError(path + ": expected a count between 1 and 1000");
  return static_cast<int>(v);
}
}  // namespace detail

inline Json adhm_to_json(const AdhmDatum& x) {
  Json j = Json::object();
  j["c"] = x.c;
  j["r"] = x.r;
  j["A0"] = matrix_to_json(x.A0);
  j["A1"] = matrix_to_json(x.A1);
  j["B0"] = matrix_to_json(x.B0);
  j["B1"] = matrix_to_json(x.B1);
  j["I0"] = matrix_to_json(x.I0);
  j["I1"] = matrix_to_json(x.I1);
  j["J0"] = matrix_to_json(x.J0);
  j["J1"] = matrix_to_json(x.J1);
  return j;
}

inline AdhmDatum adhm_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("top level: expected an object");
  static const char* const fields[] = {"c", "r", "A0", "A1", "B0", "B1", "I0", "I1", "J0", "J1"};
  for (const char* f : fields)
    if (!j.contains(f)) throw SchemaError(std::string(f) + ": missing field");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* f : fields) known = known || key == f;
    if (!known) throw SchemaError(key + ": unknown field");
  }

  AdhmDatum x;
  x.c = detail::json_to_count(j["c"], "c");
  x.r = detail::json_to_count(j["r"], "r");
  x.A0 = json_to_matrix(j["A0"], "A0");
  x.A1 = json_to_matrix(j["A1"], "A1");
  x.B0 = json_to_matrix(j["B0"], "B0");
  x.B1 = json_to_matrix(j["B1"], "B1");
  x.I0 = json_to_matrix(j["I0"], "I0");
  x.I1 = json_to_matrix(j["I1"], "I1");
  x.J0 = json_to_matrix(j["J0"], "J0");
  x.J1 = json_to_matrix(j["J1"], "J1");

  const auto errors = x.dimension_errors();
  if (!errors.empty()) {
    std::string joined;
    for (const auto& e : errors) {
      if (!joined.empty()) joined += "; ";
      joined += e;
    }
    throw SchemaError(joined);
  }
  return x;
}

}  // namespace instanton
