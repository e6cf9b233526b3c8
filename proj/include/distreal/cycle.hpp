#pragma once

// Cycle realizability of a distance matrix.
//
// A matrix D on labels v_1..v_n is realizable by a single weighted cycle
// exactly when some cyclic order pi satisfies, for every label i and every
// step count s in 2..n-2,
//     d(i, pi^s(i)) = min( sum of the s-edge arc, sum of the (n-s)-edge arc )
// where the candidate edge weights are the consecutive distances along the
// order. s = 1 and s = n-1 need no check: for a metric the two-edge arc
// already dominates by the triangle inequality. verify_cycle decides this for
// one order and produces either a certificate (weights, total, optimality
// flag) or the first violated condition; find_cycle_order builds a greedy
// nearest-neighbor candidate in O(n^2); exhaustive_cycle_search tries every
// cyclic order up to reflection.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distreal/errors.hpp"
#include "distreal/matrix.hpp"

namespace distreal {

// A cyclic arrangement of labels; stored anchored at the smallest label, but
// either orientation. canonical() also fixes the orientation (second element
// smaller than last) so equal cycles compare equal.
class CyclicOrder {
 public:
  static CyclicOrder of(std::vector<Label> seq) {
    if (seq.size() < 3)
      throw DomainError("cyclic order needs at least 3 labels, have " +
                        std::to_string(seq.size()));
    std::vector<Label> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("cyclic order has repeated labels");
    auto anchor = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), anchor, seq.end());
    CyclicOrder o;
    o.seq_ = std::move(seq);
    return o;
  }

  CyclicOrder canonical() const {
    std::vector<Label> s = seq_;
    if (s.size() >= 3 && s[1] > s.back()) std::reverse(s.begin() + 1, s.end());
    CyclicOrder o;
    o.seq_ = std::move(s);
    return o;
  }

  CyclicOrder reversed() const {
    std::vector<Label> s = seq_;
    std::reverse(s.begin() + 1, s.end());
    CyclicOrder o;
    o.seq_ = std::move(s);
    return o;
  }

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<Label>& labels() const { return seq_; }
  Label operator[](int i) const { return seq_[static_cast<std::size_t>(i)]; }
  Label at_mod(int i) const {
    int n = size();
    return seq_[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  // label -> successor map (the permutation whose orbit is this cycle).
  std::map<Label, Label> to_permutation() const {
    std::map<Label, Label> p;
    for (int i = 0; i < size(); ++i) p[seq_[i]] = at_mod(i + 1);
    return p;
  }

  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) {
    return a.seq_ == b.seq_;
  }

 private:
  std::vector<Label> seq_;
};

// True iff `perm` is a bijection on its key set consisting of one single
// orbit covering every key. Throws DomainError if it is not a bijection.
inline bool is_real_permutation(const std::map<Label, Label>& perm) {
  if (perm.empty()) throw DomainError("empty permutation");
  std::map<Label, int> image_count;
  for (const auto& [k, v] : perm) {
    if (!perm.count(v))
      throw DomainError("permutation image " + std::to_string(v) + " is outside the domain");
    ++image_count[v];
  }
  for (const auto& [v, c] : image_count)
    if (c != 1) throw DomainError("permutation is not a bijection at " + std::to_string(v));
  Label start = perm.begin()->first;
  std::size_t steps = 0;
  Label cur = start;
  do {
    cur = perm.at(cur);
    ++steps;
  } while (cur != start && steps <= perm.size());
  return steps == perm.size();
}

struct CycleViolation {
  Label i = 0;        // label whose condition failed
  int s = 0;          // step count
  Label partner = 0;  // the label s predecessor-steps from i
  Rational lhs;       // d(i, partner)
  Rational forward;   // successor-direction arc sum from i to partner
  Rational backward;  // predecessor-direction arc sum from i to partner
};

struct CycleCertificate {
  CyclicOrder order;
  std::vector<Rational> weights;  // weights[k] = d(order[k], order[k+1])
  Rational total;
  bool optimal = false;  // consecutive-triple equality (see below)
};

struct CycleCheck {
  std::optional<CycleCertificate> certificate;
  std::optional<CycleViolation> violation;
  bool ok() const { return certificate.has_value(); }
};

// The cycle with weights d(v_k, v_{k+1}) is the cheapest realization exactly
// when every consecutive triple is tight:
//     d(v_{k-1}, v_k) + d(v_k, v_{k+1}) = d(v_{k-1}, v_{k+1})  for all k.
inline bool check_cycle_optimality(const DistanceMatrix& D, const CyclicOrder& order) {
  const int n = order.size();
  for (int k = 0; k < n; ++k) {
    const Rational& ab = D.d(order.at_mod(k - 1), order[k]);
    const Rational& bc = D.d(order[k], order.at_mod(k + 1));
    const Rational& ac = D.d(order.at_mod(k - 1), order.at_mod(k + 1));
    if (ab + bc != ac) return false;
  }
  return true;
}

inline CycleCheck verify_cycle(const DistanceMatrix& D, const CyclicOrder& order) {
  const int n = D.n();
  if (order.size() != n)
    throw DomainError("cyclic order covers " + std::to_string(order.size()) +
                      " labels, matrix has " + std::to_string(n));
  for (Label l : order.labels())
    if (!D.data().has_label(l))
      throw DomainError("cyclic order label " + std::to_string(l) + " not in matrix");

  // Candidate weights and successor-direction prefix sums.
  std::vector<Rational> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[k] = D.d(order[k], order.at_mod(k + 1));
  std::vector<Rational> pref(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) pref[k + 1] = pref[k] + w[k];
  const Rational& total = pref[n];
  // Successor-direction arc sum from position p to position q.
  auto arc = [&](int p, int q) {
    return q >= p ? pref[q] - pref[p] : total - (pref[p] - pref[q]);
  };

  CycleCheck out;
  for (int p = 0; p < n; ++p) {
    for (int s = 2; s <= n - 2; ++s) {
      const int q = ((p - s) % n + n) % n;  // s predecessor-steps from p
      const Rational& lhs = D.d(order[p], order[q]);
      Rational fwd = arc(p, q);
      Rational bwd = total - fwd;
      if (lhs != min(fwd, bwd)) {
        out.violation = CycleViolation{order[p], s, order[q], lhs, std::move(fwd),
                                       std::move(bwd)};
        return out;
      }
    }
  }
  CycleCertificate cert{order, std::move(w), total, check_cycle_optimality(D, order)};
  out.certificate = std::move(cert);
  return out;
}

// Greedy candidate in O(n^2): anchor at the smallest label; its two nearest
// labels (ties to the smaller label) become the next node and the reserved
// closing node; extend by nearest unvisited; accept only if the closing
// distance is among the last node's two smallest row entries. The result is a
// candidate — callers re-verify with verify_cycle.
inline std::optional<CyclicOrder> find_cycle_order(const DistanceMatrix& D) {
  const int n = D.n();
  if (n < 3) throw DomainError("cycle order needs n >= 3, have " + std::to_string(n));
  const std::vector<Label>& labels = D.labels();
  const Label anchor = *std::min_element(labels.begin(), labels.end());
  const int ai = D.index_of(anchor);

  // Positions sorted by (distance to anchor, label).
  std::vector<int> by_dist;
  for (int i = 0; i < n; ++i)
    if (i != ai) by_dist.push_back(i);
  std::stable_sort(by_dist.begin(), by_dist.end(), [&](int x, int y) {
    if (D.at(ai, x) != D.at(ai, y)) return D.at(ai, x) < D.at(ai, y);
    return labels[x] < labels[y];
  });
  const int next = by_dist[0];     // second node of the walk
  const int closing = by_dist[1];  // reserved last node

  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[ai] = used[next] = used[closing] = 1;
  std::vector<int> walk{ai, next};
  for (int picked = 0; picked < n - 3; ++picked) {
    int cur = walk.back();
    int best = -1;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      if (best < 0 || D.at(cur, c) < D.at(cur, best) ||
          (D.at(cur, c) == D.at(cur, best) && labels[c] < labels[best]))
        best = c;
    }
    used[best] = 1;
    walk.push_back(best);
  }

  if (n > 3) {
    // Closing distance must be among the two smallest entries of the last row.
    int last = walk.back();
    std::vector<Rational> row;
    for (int c = 0; c < n; ++c)
      if (c != last) row.push_back(D.at(last, c));
    std::sort(row.begin(), row.end());
    if (D.at(last, closing) > row[1]) return std::nullopt;
  }
  std::vector<Label> seq;
  seq.reserve(static_cast<std::size_t>(n));
  for (int p : walk) seq.push_back(labels[p]);
  seq.push_back(labels[closing]);
  return CyclicOrder::of(std::move(seq)).canonical();
}

// Verified search over all (n-1)!/2 cyclic orders, lexicographic, reflections
// skipped. Throws DomainError when n exceeds max_n.
inline std::optional<CyclicOrder> exhaustive_cycle_search(const DistanceMatrix& D,
                                                          int max_n = 9) {
  const int n = D.n();
  if (n < 3) throw DomainError("cycle order needs n >= 3, have " + std::to_string(n));
  if (n > max_n)
    throw DomainError("exhaustive search capped at n = " + std::to_string(max_n) +
                      ", matrix has " + std::to_string(n));
  std::vector<Label> rest = D.labels();
  std::sort(rest.begin(), rest.end());
  const Label anchor = rest.front();
  rest.erase(rest.begin());
  std::sort(rest.begin(), rest.end());
  do {
    if (rest.size() >= 2 && rest.front() > rest.back()) continue;  // reflection dup
    std::vector<Label> seq{anchor};
    seq.insert(seq.end(), rest.begin(), rest.end());
    CyclicOrder cand = CyclicOrder::of(std::move(seq));
    if (verify_cycle(D, cand).ok()) return cand.canonical();
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

}  // namespace distreal
