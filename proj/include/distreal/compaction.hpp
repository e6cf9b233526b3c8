#pragma once

// Compaction and reduction of distance matrices.
//
// For each label i, the compaction bound is
//     a_i = (1/2) * min over p != r, both != i, of  d(p,i) + d(i,r) - d(p,r),
// the largest amount that can be peeled off row/column i while the matrix
// stays a distance matrix. Subtracting every bound at once gives the
// compaction matrix  m_ij = d_ij - a_i - a_j  (diagonal stays zero); its
// identical rows collapse into groups, and dropping all but one row of each
// group yields the reduced matrix of the next iteration. ReductionStep records
// the bookkeeping needed to reverse one such iteration: bounds, groups,
// singletons and the relabeling that issues fresh labels.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "distreal/errors.hpp"
#include "distreal/matrix.hpp"

namespace distreal {

struct CompactionVector {
  std::vector<Label> labels;  // same positional order as the matrix
  std::vector<Rational> a;

  const Rational& at(Label l) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return a[i];
    throw DomainError("compaction vector has no label " + std::to_string(l));
  }

  bool is_null() const {
    for (const auto& v : a)
      if (!v.is_zero()) return false;
    return true;
  }
};

// a_i for one label; requires order >= 3.
inline Rational max_single_compaction(const DistanceMatrix& D, Label label) {
  const int n = D.n();
  if (n < 3)
    throw DomainError("compaction bound needs order >= 3, have " + std::to_string(n));
  const int ix = D.index_of(label);
  bool first = true;
  Rational best;
  for (int p = 0; p < n; ++p) {
    if (p == ix) continue;
    for (int r = p + 1; r < n; ++r) {
      if (r == ix) continue;
      Rational cand = D.at(p, ix) + D.at(ix, r) - D.at(p, r);
      if (first || cand < best) {
        best = cand;
        first = false;
      }
    }
  }
  return best / Rational(2);
}

// All bounds, each computed from the ORIGINAL matrix.
inline CompactionVector compaction_vector(const DistanceMatrix& D) {
  CompactionVector out;
  out.labels = D.labels();
  out.a.reserve(out.labels.size());
  for (Label l : out.labels) out.a.push_back(max_single_compaction(D, l));
  return out;
}

// m_ij = d_ij - a_i - a_j. The result must itself satisfy nonnegativity and
// the triangle inequality; a breach throws CompactionError naming the first
// offending pair (callers surface it as a diagnostic).
inline LabeledMatrix compaction_matrix(const DistanceMatrix& D, const CompactionVector& a) {
  if (a.labels != D.labels())
    throw DomainError("compaction vector labels do not match the matrix");
  const int n = D.n();
  LabeledMatrix m = LabeledMatrix::zeros(D.labels());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      m.at(i, j) = D.at(i, j) - a.a[i] - a.a[j];
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.at(i, j).sign() < 0)
        throw CompactionError("simultaneous compaction made entry (" +
                                  std::to_string(m.labels[i]) + "," +
                                  std::to_string(m.labels[j]) + ") negative",
                              m.labels[i], m.labels[j]);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (m.at(i, k) > m.at(i, j) + m.at(j, k))
          throw CompactionError("simultaneous compaction broke the triangle on (" +
                                    std::to_string(m.labels[i]) + "," +
                                    std::to_string(m.labels[k]) + ")",
                                m.labels[i], m.labels[k]);
      }
  return m;
}

// Subtract alpha from row and column of one label. 0 <= alpha <= a_i.
inline DistanceMatrix single_compaction(const DistanceMatrix& D, Label label,
                                        const Rational& alpha) {
  if (alpha.sign() < 0) throw DomainError("compaction amount must be nonnegative");
  if (alpha > max_single_compaction(D, label))
    throw DomainError("compaction amount " + alpha.str() + " exceeds the bound for label " +
                      std::to_string(label));
  LabeledMatrix m = D.data();
  const int ix = m.index_of(label);
  for (int j = 0; j < m.n(); ++j) {
    if (j == ix) continue;
    m.at(ix, j) -= alpha;
    m.at(j, ix) -= alpha;
  }
  return DistanceMatrix::validate(std::move(m));
}

// Maximal classes of identical rows (full-row equality, all positions),
// ordered by first member position; members keep positional order. Singleton
// classes are included.
inline std::vector<std::vector<Label>> group_rows(const LabeledMatrix& m) {
  const int n = m.n();
  std::vector<std::vector<Label>> classes;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<Label> cls{m.labels[i]};
    used[i] = 1;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      bool same = true;
      for (int k = 0; k < n; ++k)
        if (m.at(i, k) != m.at(j, k)) {
          same = false;
          break;
        }
      if (same) {
        cls.push_back(m.labels[j]);
        used[j] = 1;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// One reversible iteration of the pipeline.
struct ReductionStep {
  int t = 0;                                 // iteration number, 0-based
  Label rho = 0;                             // label counter before relabeling
  CompactionVector a;                        // bounds on this iteration's matrix
  std::vector<std::vector<Label>> groups;    // classes of size >= 2, positional order
  std::vector<Label> singletons;             // size-1 classes, positional order
  std::vector<std::pair<Label, Label>> relabel;  // old -> new; group reps first

  int theta() const { return static_cast<int>(groups.size()); }
  int sigma() const { return static_cast<int>(singletons.size()); }
  Label rho_after() const { return rho + theta() + sigma(); }

  Label new_label_of(Label old) const {
    for (const auto& [o, nw] : relabel)
      if (o == old) return nw;
    throw DomainError("label " + std::to_string(old) + " not relabeled in step " +
                      std::to_string(t));
  }
};

// Apply one compaction+reduction. `rho` is the running label counter; fresh
// labels are rho+1 .. rho+theta+sigma, group representatives first (in group
// order), then singletons (in positional order). The reduced matrix keeps the
// survivors' positional order.
inline std::pair<DistanceMatrix, ReductionStep> reduce(const DistanceMatrix& D,
                                                       const CompactionVector& a, Label rho,
                                                       int t) {
  LabeledMatrix m = compaction_matrix(D, a);
  auto classes = group_rows(m);
  ReductionStep step;
  step.t = t;
  step.rho = rho;
  step.a = a;
  for (auto& cls : classes) {
    if (cls.size() >= 2)
      step.groups.push_back(cls);
    else
      step.singletons.push_back(cls[0]);
  }
  const int theta = step.theta();
  for (int k = 0; k < theta; ++k)
    step.relabel.emplace_back(step.groups[k][0], rho + 1 + k);
  for (int k = 0; k < step.sigma(); ++k)
    step.relabel.emplace_back(step.singletons[k], rho + theta + 1 + k);

  // Survivors (group representatives + singletons) in positional order,
  // renamed to their fresh labels.
  std::vector<Label> survivors;
  for (Label l : m.labels) {
    bool survives = false;
    for (const auto& [o, nw] : step.relabel)
      if (o == l) {
        survives = true;
        break;
      }
    if (survives) survivors.push_back(l);
  }
  LabeledMatrix reduced = m.restrict_to(survivors);
  for (auto& l : reduced.labels) l = step.new_label_of(l);
  return {DistanceMatrix::validate(std::move(reduced)), std::move(step)};
}

}  // namespace distreal
