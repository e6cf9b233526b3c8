#pragma once

// Labeled symmetric matrices over exact rationals.
//
// LabeledMatrix is raw storage: an ordered list of distinct positive integer
// labels plus an n*n entry block. It makes no metric promises and is what
// intermediate objects (compaction matrices, shortest-path tables) use.
// DistanceMatrix wraps a LabeledMatrix that passed full validation:
// symmetric, zero diagonal, positive off-diagonal, triangle inequality.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "distreal/errors.hpp"
#include "distreal/rational.hpp"

namespace distreal {

using Label = std::int64_t;

struct LabeledMatrix {
  std::vector<Label> labels;  // positional order; all distinct, > 0
  std::vector<Rational> e;    // n*n row-major

  LabeledMatrix() = default;
  LabeledMatrix(std::vector<Label> ls, std::vector<Rational> entries)
      : labels(std::move(ls)), e(std::move(entries)) {}

  static LabeledMatrix zeros(std::vector<Label> ls) {
    std::size_t n = ls.size();
    return LabeledMatrix(std::move(ls), std::vector<Rational>(n * n));
  }

  int n() const { return static_cast<int>(labels.size()); }

  Rational& at(int i, int j) { return e[static_cast<std::size_t>(i) * labels.size() + j]; }
  const Rational& at(int i, int j) const {
    return e[static_cast<std::size_t>(i) * labels.size() + j];
  }

  int index_of(Label l) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<int>(i);
    throw DomainError("unknown label " + std::to_string(l));
  }

  bool has_label(Label l) const {
    return std::find(labels.begin(), labels.end(), l) != labels.end();
  }

  const Rational& d(Label a, Label b) const { return at(index_of(a), index_of(b)); }

  // Principal submatrix on `keep`, in the order given by `keep`.
  LabeledMatrix restrict_to(const std::vector<Label>& keep) const {
    std::vector<int> idx;
    idx.reserve(keep.size());
    for (Label l : keep) idx.push_back(index_of(l));
    LabeledMatrix out = zeros(keep);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        out.at(static_cast<int>(i), static_cast<int>(j)) = at(idx[i], idx[j]);
    return out;
  }

  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
    return a.labels == b.labels && a.e == b.e;
  }
};

class DistanceMatrix {
 public:
  // Full scan; reports every violated condition, not just the first.
  static std::vector<Violation> check(const LabeledMatrix& m) {
    std::vector<Violation> out;
    const std::size_t n = m.labels.size();
    if (n == 0) {
      out.push_back({Violation::BadShape, 0, 0, 0, "matrix has no rows"});
      return out;
    }
    if (m.e.size() != n * n) {
      out.push_back({Violation::BadShape, 0, 0, 0,
                     "entry count " + std::to_string(m.e.size()) + " != n^2 for n = " +
                         std::to_string(n)});
      return out;
    }
    {
      std::map<Label, int> seen;
      for (Label l : m.labels) {
        if (l <= 0)
          out.push_back({Violation::BadLabel, l, 0, 0,
                         "label " + std::to_string(l) + " is not a positive integer"});
        if (++seen[l] == 2)
          out.push_back({Violation::BadLabel, l, 0, 0,
                         "label " + std::to_string(l) + " appears more than once"});
      }
      if (!out.empty()) return out;  // label map unusable; stop here
    }
    const int ni = static_cast<int>(n);
    for (int i = 0; i < ni; ++i) {
      if (!m.at(i, i).is_zero())
        out.push_back({Violation::NonzeroDiagonal, m.labels[i], 0, 0,
                       "d(" + std::to_string(m.labels[i]) + "," + std::to_string(m.labels[i]) +
                           ") = " + m.at(i, i).str()});
      for (int j = i + 1; j < ni; ++j) {
        if (m.at(i, j) != m.at(j, i))
          out.push_back({Violation::Asymmetric, m.labels[i], m.labels[j], 0,
                         "d(" + std::to_string(m.labels[i]) + "," + std::to_string(m.labels[j]) +
                             ") = " + m.at(i, j).str() + " but transpose = " +
                             m.at(j, i).str()});
        if (m.at(i, j).sign() <= 0)
          out.push_back({Violation::NonpositiveEntry, m.labels[i], m.labels[j], 0,
                         "d(" + std::to_string(m.labels[i]) + "," + std::to_string(m.labels[j]) +
                             ") = " + m.at(i, j).str()});
      }
    }
    // Triangle: d(i,k) <= d(i,j) + d(j,k) for every middle j of each triple.
    for (int i = 0; i < ni; ++i)
      for (int k = i + 1; k < ni; ++k)
        for (int j = 0; j < ni; ++j) {
          if (j == i || j == k) continue;
          if (m.at(i, k) > m.at(i, j) + m.at(j, k))
            out.push_back({Violation::TriangleViolated, m.labels[i], m.labels[j], m.labels[k],
                           "d(" + std::to_string(m.labels[i]) + "," +
                               std::to_string(m.labels[k]) + ") = " + m.at(i, k).str() +
                               " > " + m.at(i, j).str() + " + " + m.at(j, k).str() +
                               " via " + std::to_string(m.labels[j])});
        }
    return out;
  }

  // Throws ValidationError listing all violations.
  static DistanceMatrix validate(LabeledMatrix m) {
    auto vs = check(m);
    if (!vs.empty()) throw ValidationError(std::move(vs));
    return DistanceMatrix(std::move(m));
  }

  const LabeledMatrix& data() const { return m_; }
  int n() const { return m_.n(); }
  const std::vector<Label>& labels() const { return m_.labels; }
  const Rational& at(int i, int j) const { return m_.at(i, j); }
  const Rational& d(Label a, Label b) const { return m_.d(a, b); }
  int index_of(Label l) const { return m_.index_of(l); }

  // Submatrices of distance matrices keep all invariants; no re-validation.
  DistanceMatrix restrict_to(const std::vector<Label>& keep) const {
    if (keep.empty()) throw DomainError("restriction to an empty label set");
    return DistanceMatrix(m_.restrict_to(keep));
  }

  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  explicit DistanceMatrix(LabeledMatrix m) : m_(std::move(m)) {}
  LabeledMatrix m_;
};

// Free-function spellings used throughout.
inline DistanceMatrix validate(LabeledMatrix m) { return DistanceMatrix::validate(std::move(m)); }
inline DistanceMatrix restrict(const DistanceMatrix& d, const std::vector<Label>& keep) {
  return d.restrict_to(keep);
}

}  // namespace distreal
