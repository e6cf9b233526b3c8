#pragma once

// Min-plus (tropical) polynomial view of the cycle conditions.
//
// For a cyclic order pi, a label i and a step count s in 2..n-2, the
// polynomial p_{i,s} has three terms:
//   t1 = d(i, pi^s(i))
//   t2 = sum of the s consecutive distances from i forward to pi^s(i)
//   t3 = sum of the n-s consecutive distances from pi^s(i) forward back to i
// Its tropical value is min(t1,t2,t3); it "vanishes" when the minimum is
// attained at least twice. Over a metric, t1 <= t2 and t1 <= t3 always, so
// vanishing of every p_{i,s} is the same condition verify_cycle checks.
//
// The homogenized variant ptilde_{i,s} multiplies (tropically: adds) doubled
// compaction bounds so every term has degree n-1, counting each 2a_j as one
// factor:
//   T1 = t1 (x) 2a_j for all j outside {i, pi^s(i)}       (1 + (n-2) factors)
//   T2 = t2 (x) 2a_j for j strictly inside the (n-s)-arc   (s + (n-s-1))
//   T3 = t3 (x) 2a_j for j strictly inside the s-arc       ((n-s) + (s-1))

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "distreal/compaction.hpp"
#include "distreal/cycle.hpp"
#include "distreal/errors.hpp"
#include "distreal/matrix.hpp"

namespace distreal {

struct TropicalEvaluation {
  std::array<Rational, 3> terms;
  Rational value;        // min of terms
  int multiplicity = 0;  // how many terms attain the min
  bool zero() const { return multiplicity >= 2; }
};

namespace detail {

inline TropicalEvaluation finish(std::array<Rational, 3> terms) {
  TropicalEvaluation ev;
  ev.value = terms[0];
  for (int k = 1; k < 3; ++k)
    if (terms[k] < ev.value) ev.value = terms[k];
  for (int k = 0; k < 3; ++k)
    if (terms[k] == ev.value) ++ev.multiplicity;
  ev.terms = std::move(terms);
  return ev;
}

inline void require_s(int n, int s) {
  if (n < 4) throw DomainError("tropical term needs n >= 4, have " + std::to_string(n));
  if (s < 2 || s > n - 2)
    throw DomainError("step count s = " + std::to_string(s) + " outside 2.." +
                      std::to_string(n - 2));
}

}  // namespace detail

// Formula evaluator; the matrix need not be a metric (the homogeneity tests
// feed shifted values through it).
inline TropicalEvaluation eval_p(const LabeledMatrix& m, const CyclicOrder& order, Label i,
                                 int s) {
  const int n = order.size();
  detail::require_s(n, s);
  int p = -1;
  for (int k = 0; k < n; ++k)
    if (order[k] == i) p = k;
  if (p < 0) throw DomainError("label " + std::to_string(i) + " not on the cycle");
  std::array<Rational, 3> t;
  t[0] = m.d(i, order.at_mod(p + s));
  for (int k = 0; k < s; ++k) t[1] += m.d(order.at_mod(p + k), order.at_mod(p + k + 1));
  for (int k = s; k < n; ++k) t[2] += m.d(order.at_mod(p + k), order.at_mod(p + k + 1));
  return detail::finish(std::move(t));
}

inline TropicalEvaluation eval_p(const DistanceMatrix& D, const CyclicOrder& order, Label i,
                                 int s) {
  return eval_p(D.data(), order, i, s);
}

// All p_{i,s} vanish. Vacuously true for n = 3 (empty s-range).
inline bool is_tropical_cycle_zero(const DistanceMatrix& D, const CyclicOrder& order) {
  const int n = order.size();
  if (n != D.n()) throw DomainError("order size does not match matrix order");
  if (n == 3) return true;
  for (int p = 0; p < n; ++p)
    for (int s = 2; s <= n - 2; ++s)
      if (!eval_p(D, order, order[p], s).zero()) return false;
  return true;
}

// Homogenized terms; `a` supplies one value per label (a genuine compaction
// vector in normal use, arbitrary values in algebraic tests).
inline TropicalEvaluation eval_p_tilde(const LabeledMatrix& m, const CompactionVector& a,
                                       const CyclicOrder& order, Label i, int s) {
  const int n = order.size();
  detail::require_s(n, s);
  int p = -1;
  for (int k = 0; k < n; ++k)
    if (order[k] == i) p = k;
  if (p < 0) throw DomainError("label " + std::to_string(i) + " not on the cycle");
  auto two_a = [&](int pos) {
    const Rational& v = a.at(order.at_mod(pos));
    return v + v;
  };
  std::array<Rational, 3> t;
  t[0] = m.d(i, order.at_mod(p + s));
  for (int k = 1; k < n; ++k)
    if (k != s) t[0] += two_a(p + k);
  for (int k = 0; k < s; ++k) t[1] += m.d(order.at_mod(p + k), order.at_mod(p + k + 1));
  for (int k = s + 1; k < n; ++k) t[1] += two_a(p + k);
  for (int k = s; k < n; ++k) t[2] += m.d(order.at_mod(p + k), order.at_mod(p + k + 1));
  for (int k = 1; k < s; ++k) t[2] += two_a(p + k);
  return detail::finish(std::move(t));
}

inline TropicalEvaluation eval_p_tilde(const DistanceMatrix& D, const CompactionVector& a,
                                       const CyclicOrder& order, Label i, int s) {
  return eval_p_tilde(D.data(), a, order, i, s);
}

}  // namespace distreal
