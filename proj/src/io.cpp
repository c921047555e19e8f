#include "troploc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace troploc::io {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number())
    throw ParseError(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + " is not finite");
  return v;
}

std::vector<double> number_array(const json& j, const std::string& key) {
  if (!j.is_array()) throw ParseError(key + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number_at(j[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

void append_vector(std::string& out, const std::vector<double>& v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_number(v[i]);
  }
  out += ']';
}

void append_trop_vector(std::string& out, const TropVector& v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].is_bottom() ? "\"-inf\"" : format_number(v[i].value());
  }
  out += ']';
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // fold -0 into 0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

LocationInstance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");

  LocationInstance inst;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw ParseError("dimension must be an integer");
  const auto dim = j["dimension"].get<long long>();
  if (dim < 1) throw ParseError("dimension must be at least 1");
  inst.dimension = static_cast<std::size_t>(dim);

  if (!j.contains("points") || !j["points"].is_array())
    throw ParseError("points must be an array of point arrays");
  for (std::size_t i = 0; i < j["points"].size(); ++i)
    inst.points.push_back(
        number_array(j["points"][i], "points[" + std::to_string(i) + "]"));

  if (j.contains("weights")) inst.weights = number_array(j["weights"], "weights");
  if (j.contains("caps")) inst.caps = number_array(j["caps"], "caps");

  inst.validate();
  return inst;
}

LocationInstance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

TropMatrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty())
    throw ParseError("matrix must be a nonempty array of rows");

  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be nonempty arrays");
  TropMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    const std::string where = "row " + std::to_string(i);
    if (!row.is_array() || row.size() != cols)
      throw ParseError(where + " has unexpected length");
    for (std::size_t k = 0; k < cols; ++k) {
      const json& cell = row[k];
      if (cell.is_string()) {
        if (cell.get<std::string>() != "-inf")
          throw ParseError(where + ": only \"-inf\" is accepted as a string");
        a(i, k) = TropScalar::bottom();
      } else {
        a(i, k) = TropScalar(
            number_at(cell, where + ", column " + std::to_string(k)));
      }
    }
  }
  return a;
}

TropMatrix load_matrix(const std::string& path) {
  return parse_matrix(read_file(path));
}

std::string solution_json(const LocationSolution& sol,
                          const std::vector<SegmentSample>* samples) {
  std::string out = "{\n";
  out += "  \"optimum\": " + format_number(sol.lambda) + ",\n";
  out += "  \"status\": \"" + std::string(to_string(sol.status)) + "\",\n";
  out += "  \"endpoint_low\": ";
  append_vector(out, sol.lo);
  out += ",\n  \"endpoint_high\": ";
  append_vector(out, sol.hi);
  if (sol.lambda_combined) {
    out += ",\n  \"lambda_combined\": " + format_number(*sol.lambda_combined);
  }
  if (samples) {
    out += ",\n  \"samples\": [\n";
    for (std::size_t k = 0; k < samples->size(); ++k) {
      const SegmentSample& s = (*samples)[k];
      out += "    {\"alpha\": " + format_number(s.alpha) + ", \"point\": ";
      append_vector(out, s.point);
      out += ", \"objective\": " + format_number(s.objective) + "}";
      if (k + 1 < samples->size()) out += ',';
      out += '\n';
    }
    out += "  ]";
  }
  out += "\n}\n";
  return out;
}

std::string spectral_json(const SpectralResult& result, bool include_cross) {
  std::string out = "{\n";
  out += "  \"lambda\": " + format_number(result.lambda.value()) + ",\n";
  out += "  \"basis\": [";
  for (std::size_t j = 0; j < result.basis.cols(); ++j) {
    if (j) out += ", ";
    append_trop_vector(out, result.basis.column(j));
  }
  out += ']';
  if (include_cross) {
    out += ",\n  \"cross\": [";
    for (std::size_t i = 0; i < result.cross.rows(); ++i) {
      if (i) out += ", ";
      append_trop_vector(out, result.cross.row(i));
    }
    out += ']';
  }
  out += "\n}\n";
  return out;
}

std::string samples_csv(const std::vector<SegmentSample>& samples,
                        bool header) {
  std::string out;
  if (header) {
    out += "alpha";
    const std::size_t n = samples.empty() ? 0 : samples.front().point.size();
    for (std::size_t i = 0; i < n; ++i)
      out += ",x" + std::to_string(i + 1);
    out += ",objective\n";
  }
  for (const SegmentSample& s : samples) {
    out += format_number(s.alpha);
    for (double c : s.point) out += "," + format_number(c);
    out += "," + format_number(s.objective) + "\n";
  }
  return out;
}

}  // namespace troploc::io
