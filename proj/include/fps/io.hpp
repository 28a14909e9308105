// JSON and CSV serialization for the CLI file formats.
#pragma once

#include <stdexcept>
#include <string>

#include "fps/multivar.hpp"
#include "fps/series.hpp"
#include "fps/trudi.hpp"

namespace fps {

/// Malformed input: invalid JSON or a document that violates one of the
/// documented schemas.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Series document: {"order": N, "coeffs": [[re, im], ...]} with N+1
// entries, entry n = coefficient of z^n.
std::string series_to_json(const Series& f);
Series series_from_json(const std::string& text);

// MultiSeries document:
// {"q": q, "order": N, "coeffs": [{"index": [c1..cq], "re": ., "im": .}, ...]}
// with every index of total degree <= N present exactly once.
std::string multiseries_to_json(const MultiSeries& f);
MultiSeries multiseries_from_json(const std::string& text);

// Hessenberg document: {"n": n, "entries": [[re, im] x n*n]} row-major;
// entries above the superdiagonal must be zero.
std::string hessenberg_to_json(const HessenbergMatrix& A);
HessenbergMatrix hessenberg_from_json(const std::string& text);

// CSV renderings ("n,re,im" / "c1,..,cq,re,im") with the given number of
// significant digits.
std::string series_to_csv(const Series& f, int digits);
std::string multiseries_to_csv(const MultiSeries& f, int digits);

/// %.{digits}g formatting used by all CSV output.
std::string format_significant(double value, int digits);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fps
