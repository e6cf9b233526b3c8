#pragma once

// Error taxonomy. Expected-outcome results (cycle checks failing, matrices
// being unrealizable) are values, not exceptions; exceptions cover malformed
// input, domain violations, infeasible generator requests and broken internal
// invariants.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace distreal {

// One violated distance-matrix condition. i/j/k are labels (not positions);
// unused slots stay 0.
struct Violation {
  enum Kind {
    BadShape,          // not square / size mismatch / empty
    BadLabel,          // non-positive or duplicate label
    Asymmetric,        // d(i,j) != d(j,i)
    NonzeroDiagonal,   // d(i,i) != 0
    NonpositiveEntry,  // d(i,j) <= 0 for i != j
    TriangleViolated,  // d(i,k) > d(i,j) + d(j,k)
  };
  Kind kind;
  std::int64_t i = 0, j = 0, k = 0;
  std::string detail;
};

inline const char* violation_kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::BadShape: return "bad_shape";
    case Violation::BadLabel: return "bad_label";
    case Violation::Asymmetric: return "asymmetric";
    case Violation::NonzeroDiagonal: return "nonzero_diagonal";
    case Violation::NonpositiveEntry: return "nonpositive_entry";
    case Violation::TriangleViolated: return "triangle_violated";
  }
  return "unknown";
}

// Input failed distance-matrix validation; carries every violation found.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> vs)
      : std::runtime_error(summarize(vs)), violations_(std::move(vs)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& vs) {
    std::string s = "matrix validation failed (" + std::to_string(vs.size()) +
                    " violation" + (vs.size() == 1 ? "" : "s") + ")";
    for (const auto& v : vs) {
      s += "\n  " + std::string(violation_kind_name(v.kind));
      if (!v.detail.empty()) s += ": " + v.detail;
    }
    return s;
  }
  std::vector<Violation> violations_;
};

// Malformed CSV/JSON text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line = 0, int column = 0)
      : std::runtime_error(locate(msg, line, column)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string locate(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return msg + " (line " + std::to_string(line) +
           (column > 0 ? ", column " + std::to_string(column) : "") + ")";
  }
  int line_ = 0, column_ = 0;
};

// An operation was called outside its domain (unknown label, order too
// small/large, alpha beyond the compaction bound, s out of range, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simultaneous compaction produced something that is not a distance matrix
// (negative entry or broken triangle). Surfaced as a diagnostic by the
// pipeline rather than treated as fatal.
class CompactionError : public std::runtime_error {
 public:
  CompactionError(std::string msg, std::int64_t i, std::int64_t j)
      : std::runtime_error(std::move(msg)), i_(i), j_(j) {}
  std::int64_t i() const { return i_; }
  std::int64_t j() const { return j_; }

 private:
  std::int64_t i_, j_;
};

// The generator cannot satisfy the requested shape.
class InfeasibleSpec : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A library invariant broke (e.g. a reconstructed graph failed its own
// shortest-path verification). Always a bug, never an input problem.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace distreal
