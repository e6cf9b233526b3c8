#pragma once

// Matrix wire formats.
//
// CSV: n lines of n comma-separated rationals; labels are implicitly 1..n.
// JSON: {"labels": [1, 2, ...], "matrix": [["0", "3/2", ...], ...]} with
// every entry a string in the same rational syntax. Serialization is
// deterministic: same matrix, same bytes.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "distreal/errors.hpp"
#include "distreal/matrix.hpp"

namespace distreal {

enum class MatrixFormat { csv, json };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline LabeledMatrix raw_from_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<Rational> row;
    std::size_t cpos = 0;
    int col = 0;
    while (true) {
      std::size_t comma = line.find(',', cpos);
      std::string_view cell = trim(line.substr(cpos, comma == std::string_view::npos ? std::string_view::npos : comma - cpos));
      ++col;
      auto r = Rational::parse(cell);
      if (!r)
        throw ParseError("bad rational '" + std::string(cell) + "'", lineno, col);
      row.push_back(*r);
      if (comma == std::string_view::npos) break;
      cpos = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  const std::size_t n = rows.size();
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    for (auto& v : rows[i]) entries.push_back(std::move(v));
  }
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i + 1);
  return LabeledMatrix(std::move(labels), std::move(entries));
}

inline LabeledMatrix raw_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels") || !j.contains("matrix"))
    throw ParseError("matrix JSON must be an object with 'labels' and 'matrix'");
  if (!j["labels"].is_array() || !j["matrix"].is_array())
    throw ParseError("'labels' and 'matrix' must be arrays");
  std::vector<Label> labels;
  for (const auto& l : j["labels"]) {
    if (!l.is_number_integer()) throw ParseError("labels must be integers");
    labels.push_back(l.get<Label>());
  }
  const std::size_t n = labels.size();
  if (j["matrix"].size() != n)
    throw ParseError("matrix has " + std::to_string(j["matrix"].size()) + " rows, expected " +
                     std::to_string(n));
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j["matrix"][i];
    if (!row.is_array() || row.size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " is not an array of " +
                       std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& cell = row[c];
      if (!cell.is_string())
        throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(c + 1) +
                         ") must be a string rational");
      auto r = Rational::parse(cell.get<std::string>());
      if (!r)
        throw ParseError("bad rational '" + cell.get<std::string>() + "' at (" +
                         std::to_string(i + 1) + "," + std::to_string(c + 1) + ")");
      entries.push_back(*r);
    }
  }
  return LabeledMatrix(std::move(labels), std::move(entries));
}

}  // namespace detail

// Parse without validation; callers that need a metric use parse_matrix.
inline LabeledMatrix parse_labeled_matrix(std::string_view text, MatrixFormat f) {
  return f == MatrixFormat::csv ? detail::raw_from_csv(text) : detail::raw_from_json(text);
}

// Parse + full validation. ParseError for syntax, ValidationError for
// semantics. CSV input assigns labels 1..n.
inline DistanceMatrix parse_matrix(std::string_view text, MatrixFormat f) {
  return DistanceMatrix::validate(parse_labeled_matrix(text, f));
}

// First significant byte '{' or '[' means JSON, anything else CSV.
inline MatrixFormat sniff_matrix_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return (c == '{' || c == '[') ? MatrixFormat::json : MatrixFormat::csv;
  }
  return MatrixFormat::csv;
}

inline std::string serialize_matrix(const LabeledMatrix& m, MatrixFormat f) {
  if (f == MatrixFormat::csv) {
    std::string out;
    for (int i = 0; i < m.n(); ++i) {
      for (int j = 0; j < m.n(); ++j) {
        if (j) out += ",";
        out += m.at(i, j).str();
      }
      out += "\n";
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["labels"] = m.labels;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.n(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int jx = 0; jx < m.n(); ++jx) row.push_back(m.at(i, jx).str());
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump(2) + "\n";
}

inline std::string serialize_matrix(const DistanceMatrix& d, MatrixFormat f) {
  return serialize_matrix(d.data(), f);
}

}  // namespace distreal
