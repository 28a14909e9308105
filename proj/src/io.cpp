#include "fps/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace fps {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

double require_finite_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw SchemaError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(what + " must be finite");
  return v;
}

int require_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw SchemaError(what + " must be an integer");
  return j.get<int>();
}

json complex_to_pair(Complex z) { return json::array({z.real(), z.imag()}); }

Complex pair_to_complex(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) {
    throw SchemaError(what + " must be a [re, im] pair");
  }
  return {require_finite_number(j[0], what + "[0]"),
          require_finite_number(j[1], what + "[1]")};
}

const json& require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw SchemaError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

}  // namespace

std::string series_to_json(const Series& f) {
  json doc;
  doc["order"] = f.order();
  json coeffs = json::array();
  for (int n = 0; n <= f.order(); ++n) coeffs.push_back(complex_to_pair(f[n]));
  doc["coeffs"] = std::move(coeffs);
  return doc.dump(2);
}

Series series_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const int order = require_int(require_field(doc, "order"), "\"order\"");
  if (order < 0) throw SchemaError("\"order\" must be >= 0");
  const json& coeffs = require_field(doc, "coeffs");
  if (!coeffs.is_array()) throw SchemaError("\"coeffs\" must be an array");
  if (coeffs.size() != static_cast<std::size_t>(order) + 1) {
    throw SchemaError("\"coeffs\" must hold order + 1 = " +
                      std::to_string(order + 1) + " entries, got " +
                      std::to_string(coeffs.size()));
  }
  std::vector<Complex> out;
  out.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    out.push_back(pair_to_complex(coeffs[n], "coeffs[" + std::to_string(n) + "]"));
  }
  return Series(std::move(out));
}

std::string multiseries_to_json(const MultiSeries& f) {
  json doc;
  doc["q"] = f.vars();
  doc["order"] = f.order();
  json coeffs = json::array();
  std::vector<int> index(static_cast<std::size_t>(f.vars()), 0);
  std::size_t rank = 0;
  do {
    json entry;
    entry["index"] = index;
    entry["re"] = f.at_rank(rank).real();
    entry["im"] = f.at_rank(rank).imag();
    coeffs.push_back(std::move(entry));
    ++rank;
  } while (next_multi_index(index, f.order()));
  doc["coeffs"] = std::move(coeffs);
  return doc.dump(2);
}

MultiSeries multiseries_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const int q = require_int(require_field(doc, "q"), "\"q\"");
  const int order = require_int(require_field(doc, "order"), "\"order\"");
  if (q < 1) throw SchemaError("\"q\" must be >= 1");
  if (order < 0) throw SchemaError("\"order\" must be >= 0");
  const json& coeffs = require_field(doc, "coeffs");
  if (!coeffs.is_array()) throw SchemaError("\"coeffs\" must be an array");
  const std::size_t expected = multi_index_count(q, order);
  if (coeffs.size() != expected) {
    throw SchemaError(
        "\"coeffs\" must list every index of degree <= order exactly once (" +
        std::to_string(expected) + " entries), got " +
        std::to_string(coeffs.size()));
  }
  std::vector<Complex> values(expected);
  std::vector<char> seen(expected, 0);
  for (const json& entry : coeffs) {
    const json& jindex = require_field(entry, "index");
    if (!jindex.is_array() || jindex.size() != static_cast<std::size_t>(q)) {
      throw SchemaError("\"index\" must be an array of q = " +
                        std::to_string(q) + " coordinates");
    }
    std::vector<int> index;
    index.reserve(q);
    int degree = 0;
    for (const json& coord : jindex) {
      const int v = require_int(coord, "index coordinate");
      if (v < 0) throw SchemaError("index coordinates must be >= 0");
      degree += v;
      index.push_back(v);
    }
    if (degree > order) {
      throw SchemaError("index of degree " + std::to_string(degree) +
                        " exceeds order " + std::to_string(order));
    }
    const std::size_t rank = multi_rank(index);
    if (seen[rank]) throw SchemaError("duplicate index in \"coeffs\"");
    seen[rank] = 1;
    values[rank] = {require_finite_number(require_field(entry, "re"), "\"re\""),
                    require_finite_number(require_field(entry, "im"), "\"im\"")};
  }
  return MultiSeries(q, order, std::move(values));
}

std::string hessenberg_to_json(const HessenbergMatrix& A) {
  json doc;
  doc["n"] = A.size();
  json entries = json::array();
  for (const Complex& z : A.entries()) entries.push_back(complex_to_pair(z));
  doc["entries"] = std::move(entries);
  return doc.dump(2);
}

HessenbergMatrix hessenberg_from_json(const std::string& text) {
  const json doc = parse_document(text);
  const int n = require_int(require_field(doc, "n"), "\"n\"");
  if (n < 1) throw SchemaError("\"n\" must be >= 1");
  const json& entries = require_field(doc, "entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(n) * n) {
    throw SchemaError("\"entries\" must be a row-major array of n*n = " +
                      std::to_string(n * n) + " pairs");
  }
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    values.push_back(
        pair_to_complex(entries[i], "entries[" + std::to_string(i) + "]"));
  }
  try {
    return HessenbergMatrix(n, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

std::string format_significant(double value, int digits) {
  if (digits < 1) digits = 1;
  if (digits > 17) digits = 17;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

std::string series_to_csv(const Series& f, int digits) {
  std::ostringstream out;
  out << "n,re,im\n";
  for (int n = 0; n <= f.order(); ++n) {
    out << n << ',' << format_significant(f[n].real(), digits) << ','
        << format_significant(f[n].imag(), digits) << '\n';
  }
  return out.str();
}

std::string multiseries_to_csv(const MultiSeries& f, int digits) {
  std::ostringstream out;
  for (int i = 1; i <= f.vars(); ++i) out << 'c' << i << ',';
  out << "re,im\n";
  std::vector<int> index(static_cast<std::size_t>(f.vars()), 0);
  std::size_t rank = 0;
  do {
    for (int v : index) out << v << ',';
    out << format_significant(f.at_rank(rank).real(), digits) << ','
        << format_significant(f.at_rank(rank).imag(), digits) << '\n';
    ++rank;
  } while (next_multi_index(index, f.order()));
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fps
