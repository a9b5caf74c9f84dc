#pragma once

/**
 * @file retraction.hpp
 * @brief Left retraction of Nakayama algebras on the level of admissible
 *        sequences, and the full chain down to a self-injective algebra.
 *
 * For a normalized non-self-injective cycle sequence (p = c_1 = c_n - 1) the
 * left retraction L(A) has n-1 entries
 *
 *     c'_i = c_i - floor((c_i + i - 1) / n),   1 <= i <= n-1,
 *
 * and pi : {1..n} -> {1..n-1} (identity below n, pi(n) = 1) intertwines the
 * arrow maps: pi . f_A = f_{L(A)} . pi.
 *
 * The chain lifts once by +n when p(A) <= n(A), then alternates
 * rotate-to-normalized and retract until the sequence is constant. A
 * constant sequence (c,...,c) of length n has gcd(n,c) cycles of size
 * n/gcd(n,c) and weight c/gcd(n,c); undoing the initial lift subtracts the
 * cycle size from the weight once per lift multiple. This yields the cycle
 * statistics of R(A) by a route completely independent of walking the graph.
 */

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nakayama/admissible_sequence.hpp"
#include "nakayama/resolution_quiver.hpp"

namespace nakayama {

/// True iff A is a non-constant cycle sequence with c_1 = p(A), c_n = p(A)+1.
inline bool is_normalized(const AdmissibleSequence& A) {
  if (!A.is_cycle() || A.self_injective()) return false;
  const int p = A.p_min();
  return A.c(1) == p && A.c(A.n()) == p + 1;
}

struct Normalized {
  AdmissibleSequence sequence;
  int rotation = 0;
};

/// Rotates A so that c_1 = p(A) and c_n = p(A) + 1. Among all admissible
/// starting positions the smallest index is rotated to the front.
inline Normalized normalize(const AdmissibleSequence& A) {
  if (!A.is_cycle()) fail(Errc::not_cycle_algebra, "normalize requires a cycle sequence");
  if (A.self_injective())
    fail(Errc::already_self_injective, "constant sequences have no normalized rotation");
  const int p = A.p_min();
  for (int i = 1; i <= A.n(); ++i) {
    if (A.c(i) == p && A.c(A.wrap(i - 1)) == p + 1) return {A.rotate(i - 1), i - 1};
  }
  fail(Errc::internal_invariant_violated,
       "no normalized rotation exists for " + A.render());
}

/// The admissible sequence of L(A). Requires a normalized input; the result
/// is re-validated because the construction promises a connected Nakayama
/// algebra (it may be a line algebra when entries drop to 1).
inline AdmissibleSequence left_retract(const AdmissibleSequence& A) {
  if (!A.is_cycle()) fail(Errc::not_cycle_algebra, "left_retract requires a cycle sequence");
  if (A.self_injective())
    fail(Errc::already_self_injective, "left_retract is undefined on self-injective sequences");
  if (!is_normalized(A))
    fail(Errc::not_normalized, A.render() + " is not normalized (need c_1 = p = c_n - 1)");
  const int n = A.n();
  std::vector<int> out(static_cast<size_t>(n) - 1);
  for (int i = 1; i < n; ++i)
    out[static_cast<size_t>(i) - 1] = A.c(i) - (A.c(i) + i - 1) / n;
  try {
    return AdmissibleSequence::validate(std::move(out));
  } catch (const Error& e) {
    fail(Errc::internal_invariant_violated,
         "left retraction of " + A.render() + " is not admissible: " + e.what());
  }
}

/// pi(i) = i for i < n, pi(n) = 1, returned as a table indexed by i - 1.
inline std::vector<int> pi_map(int n) {
  if (n < 2) fail(Errc::bad_argument, "pi_map requires n >= 2");
  std::vector<int> pi(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) pi[static_cast<size_t>(i) - 1] = i;
  pi[static_cast<size_t>(n) - 1] = 1;
  return pi;
}

/// Pointwise check of pi . f_A = f_{L(A)} . pi on {1..n}.
inline bool check_commuting_square(const AdmissibleSequence& A) {
  AdmissibleSequence L = left_retract(A);  // enforces the preconditions
  const ResolutionQuiver fa = f_map(A);
  const ResolutionQuiver fl = f_map(L);
  const std::vector<int> pi = pi_map(A.n());
  for (int i = 1; i <= A.n(); ++i) {
    const int lhs = pi[static_cast<size_t>(fa.f(i)) - 1];
    const int rhs = fl.f(pi[static_cast<size_t>(i) - 1]);
    if (lhs != rhs) return false;
  }
  return true;
}

struct CycleData {
  int count = 0;
  int size = 0;
  int weight = 0;

  friend constexpr bool operator==(CycleData, CycleData) = default;
};

/// Closed form for a constant sequence (c,...,c) of length n: gcd(n,c)
/// cycles, each of size n/gcd(n,c) and weight c/gcd(n,c).
inline CycleData selfinjective_cycle_data(int n, int c) {
  if (n < 1 || c < 1 || (n > 1 && c < 2))
    fail(Errc::bad_argument, "selfinjective_cycle_data needs a constant cycle sequence");
  const int g = std::gcd(n, c);
  return {g, n / g, c / g};
}

struct RetractionStep {
  enum class Op { lift, rotate, retract };

  Op op = Op::retract;
  int amount = 0;  // lift multiple or rotation; 0 for retract
  AdmissibleSequence input;
  AdmissibleSequence output;
};

inline const char* to_string(RetractionStep::Op op) noexcept {
  switch (op) {
    case RetractionStep::Op::lift: return "lift";
    case RetractionStep::Op::rotate: return "rotate";
    case RetractionStep::Op::retract: return "retract";
  }
  return "?";
}

struct RetractionChain {
  std::vector<RetractionStep> steps;
  AdmissibleSequence terminal;
  int initial_lift = 0;  // t0: how many times +n was applied up front

  int retract_count() const {
    int k = 0;
    for (const RetractionStep& s : steps) k += s.op == RetractionStep::Op::retract ? 1 : 0;
    return k;
  }
};

/// Runs the full chain: one Lift(1) when p(A) <= n(A), then
/// (rotate-to-normalized, retract) until the sequence is constant. Every
/// intermediate is checked for p > n and cycle kind; a violation of the
/// chain's induction invariant aborts loudly.
inline RetractionChain retraction_chain(const AdmissibleSequence& A) {
  if (!A.is_cycle()) fail(Errc::not_cycle_algebra, "retraction_chain requires a cycle sequence");
  std::vector<RetractionStep> steps;
  AdmissibleSequence cur = A;
  int t0 = 0;
  if (cur.p_min() <= cur.n()) {
    AdmissibleSequence lifted = cur.lift(1);
    steps.push_back({RetractionStep::Op::lift, 1, cur, lifted});
    cur = std::move(lifted);
    t0 = 1;
  }
  const int max_retracts = A.n() - 1;
  int retracts = 0;
  while (!cur.self_injective()) {
    if (cur.p_min() <= cur.n())
      fail(Errc::internal_invariant_violated,
           "p > n failed along the retraction chain at " + cur.render());
    if (retracts >= max_retracts)
      fail(Errc::internal_invariant_violated, "retraction chain exceeded n - 1 steps");
    Normalized norm = normalize(cur);
    if (norm.rotation != 0) {
      steps.push_back({RetractionStep::Op::rotate, norm.rotation, cur, norm.sequence});
      cur = norm.sequence;
    }
    AdmissibleSequence next = left_retract(cur);
    if (!next.is_cycle())
      fail(Errc::internal_invariant_violated,
           "retraction left the cycle class at " + next.render());
    steps.push_back({RetractionStep::Op::retract, 0, cur, next});
    cur = std::move(next);
    ++retracts;
  }
  if (cur.p_min() <= cur.n())
    fail(Errc::internal_invariant_violated,
         "terminal sequence fails p > n: " + cur.render());
  return {std::move(steps), std::move(cur), t0};
}

/// Cycle statistics of R(A) via the retraction chain: closed form at the
/// self-injective end, then the initial lift is undone by subtracting
/// t0 * size from the weight. Count and size pass through unchanged.
inline CycleData chain_cycle_summary(const AdmissibleSequence& A) {
  RetractionChain chain = retraction_chain(A);
  const AdmissibleSequence& t = chain.terminal;
  for (int i = 2; i <= t.n(); ++i)
    if (t.c(i) != t.c(1))
      fail(Errc::internal_invariant_violated, "terminal sequence is not constant");
  CycleData data = selfinjective_cycle_data(t.n(), t.c(1));
  data.weight -= chain.initial_lift * data.size;
  if (data.weight < 0)
    fail(Errc::internal_invariant_violated, "negative weight after undoing the lift");
  return data;
}

}  // namespace nakayama
