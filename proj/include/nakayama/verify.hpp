#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive verification of the cycle-structure theorems over
 *        bounded families of admissible sequences.
 *
 * enumerate_admissible walks every valid sequence with n <= n_max and
 * entries <= c_max in lexicographic order by (n, entries). run_suite applies
 * every claim check to every sequence and collects counterexamples instead
 * of aborting, so a bug surfaces as the lexicographically smallest failing
 * input.
 */

#include <string>
#include <vector>

#include "nakayama/admissible_sequence.hpp"
#include "nakayama/module_arith.hpp"
#include "nakayama/resolution_quiver.hpp"
#include "nakayama/retraction.hpp"

namespace nakayama {

namespace detail {

template <typename Fn>
void extend_sequence(std::vector<int>& prefix, int n, int c_max, Fn& fn) {
  const int k = static_cast<int>(prefix.size()) + 1;  // position being filled, 1-based
  for (int v = 1; v <= c_max; ++v) {
    if (v == 1 && k < n) continue;                          // interior entries are >= 2
    if (k > 1 && v < prefix[static_cast<size_t>(k) - 2] - 1) continue;  // c_k >= c_{k-1} - 1
    if (k == n && n > 1 && v >= 2 && prefix[0] < v - 1)
      continue;  // cycle kind closes up: c_1 >= c_n - 1
    prefix.push_back(v);
    if (k == n) {
      fn(AdmissibleSequence::validate(prefix));
    } else {
      extend_sequence(prefix, n, c_max, fn);
    }
    prefix.pop_back();
  }
}

}  // namespace detail

/// Calls fn(const AdmissibleSequence&) for every valid sequence with
/// n <= n_max and all entries <= c_max, in lexicographic order by
/// (n, entries), each exactly once.
template <typename Fn>
void enumerate_admissible(int n_max, int c_max, Fn&& fn) {
  if (n_max < 1 || c_max < 1) fail(Errc::bad_argument, "enumeration bounds must be >= 1");
  std::vector<int> prefix;
  for (int n = 1; n <= n_max; ++n) {
    prefix.clear();
    prefix.reserve(static_cast<size_t>(n));
    detail::extend_sequence(prefix, n, c_max, fn);
  }
}

inline std::vector<AdmissibleSequence> enumerate_admissible(int n_max, int c_max) {
  std::vector<AdmissibleSequence> out;
  enumerate_admissible(n_max, c_max, [&](const AdmissibleSequence& a) { out.push_back(a); });
  return out;
}

// ---------------------------------------------------------------------------
// Per-sequence claim checks. Each returns true on pass; on failure an
// optional detail string receives the two conflicting values.
// ---------------------------------------------------------------------------

/// All cycles of R(A) share one (size, weight) pair.
inline bool check_uniform_cycle_data(const AdmissibleSequence& A,
                                     std::string* detail = nullptr) {
  const ComponentDecomposition d = decompose(f_map(A));
  for (const Cycle& c : d.cycles) {
    if (c.size != d.cycles[0].size || c.weight != d.cycles[0].weight) {
      if (detail)
        *detail = "cycle (" + std::to_string(d.cycles[0].size) + "," +
                  std::to_string(d.cycles[0].weight) + ") vs (" + std::to_string(c.size) + "," +
                  std::to_string(c.weight) + ")";
      return false;
    }
  }
  return true;
}

/// A loop anywhere forces every cycle to be a loop.
inline bool check_loop_consequence(const AdmissibleSequence& A, std::string* detail = nullptr) {
  const ComponentDecomposition d = decompose(f_map(A));
  bool has_loop = false;
  for (const Cycle& c : d.cycles) has_loop = has_loop || c.size == 1;
  if (!has_loop) return true;
  for (const Cycle& c : d.cycles) {
    if (c.size != 1) {
      if (detail) *detail = "loop present but a cycle has size " + std::to_string(c.size);
      return false;
    }
  }
  return true;
}

/// n * w(C) equals the sum of c over C, for every cycle, in exact integers.
inline bool check_weight_integrality(const AdmissibleSequence& A, std::string* detail = nullptr) {
  const ComponentDecomposition d = decompose(f_map(A));
  for (const Cycle& cyc : d.cycles) {
    long long c_sum = 0;
    for (int v : cyc.vertices) c_sum += A.c(v);
    if (static_cast<long long>(cyc.weight) * A.n() != c_sum) {
      if (detail)
        *detail = "n*w = " + std::to_string(static_cast<long long>(cyc.weight) * A.n()) +
                  " but sum c = " + std::to_string(c_sum);
      return false;
    }
    // cross-check the k_i route through the public entry point
    if (cycle_weight(A, cyc.vertices) != cyc.weight) {
      if (detail) *detail = "k_i sum disagrees with decompose weight";
      return false;
    }
  }
  return true;
}

/// Functional-graph shape: one cycle per component, and the cyclic vertex
/// set is exactly the union of the cycles.
inline bool check_unique_cycle_per_component(const AdmissibleSequence& A,
                                             std::string* detail = nullptr) {
  const ComponentDecomposition d = decompose(f_map(A));
  if (static_cast<int>(d.cycles.size()) != d.component_count) {
    if (detail)
      *detail = std::to_string(d.cycles.size()) + " cycles vs " +
                std::to_string(d.component_count) + " components";
    return false;
  }
  long long size_sum = 0;
  for (const Cycle& c : d.cycles) size_sum += c.size;
  if (size_sum != static_cast<long long>(d.cyclic_vertices.size())) {
    if (detail)
      *detail = "sum of sizes " + std::to_string(size_sum) + " vs " +
                std::to_string(d.cyclic_vertices.size()) + " cyclic vertices";
    return false;
  }
  return true;
}

/// gamma computed through the module calculus agrees with f pointwise.
inline bool check_gamma_f_agreement(const AdmissibleSequence& A, std::string* detail = nullptr) {
  const ResolutionQuiver q = f_map(A);
  for (int i = 1; i <= A.n(); ++i) {
    if (gamma(A, i) != q.f(i)) {
      if (detail)
        *detail = "gamma(" + std::to_string(i) + ") = " + std::to_string(gamma(A, i)) +
                  " but f = " + std::to_string(q.f(i));
      return false;
    }
  }
  return true;
}

/// Lifting by +n keeps f and raises each cycle weight by exactly its size.
inline bool check_shift(const AdmissibleSequence& A, std::string* detail = nullptr) {
  const AdmissibleSequence lifted = A.lift(1);
  const ResolutionQuiver qa = f_map(A);
  const ResolutionQuiver ql = f_map(lifted);
  if (qa.targets != ql.targets) {
    if (detail) *detail = "f changed under lift";
    return false;
  }
  const ComponentDecomposition da = decompose(qa);
  const ComponentDecomposition dl = decompose(ql);
  for (size_t k = 0; k < da.cycles.size(); ++k) {
    if (da.cycles[k].vertices != dl.cycles[k].vertices ||
        dl.cycles[k].weight != da.cycles[k].weight + da.cycles[k].size) {
      if (detail)
        *detail = "weight " + std::to_string(da.cycles[k].weight) + " + size " +
                  std::to_string(da.cycles[k].size) + " != lifted weight " +
                  std::to_string(dl.cycles[k].weight);
      return false;
    }
  }
  return true;
}

/// The commuting square pi . f_A = f_{L(A)} . pi, pointwise.
inline bool check_retraction_commuting_square(const AdmissibleSequence& A,
                                              std::string* detail = nullptr) {
  if (!check_commuting_square(A)) {
    if (detail) *detail = "pi . f_A != f_L . pi";
    return false;
  }
  return true;
}

/// The index identities behind the commuting square: whenever
/// c_i + i = k n + j with 1 <= j <= n, the retracted sequence satisfies
/// c'_{pi(i)} + i = k(n-1) + j.
inline bool check_retraction_index_identities(const AdmissibleSequence& A,
                                              std::string* detail = nullptr) {
  const AdmissibleSequence L = left_retract(A);
  const std::vector<int> pi = pi_map(A.n());
  const int n = A.n();
  for (int i = 1; i <= n; ++i) {
    const int j = A.wrap(static_cast<long long>(A.c(i)) + i);
    const int k = (A.c(i) + i - j) / n;
    const int lhs = L.c(pi[static_cast<size_t>(i) - 1]) + i;
    const int rhs = k * (n - 1) + j;
    if (lhs != rhs) {
      if (detail)
        *detail = "i=" + std::to_string(i) + ": c'_pi(i) + i = " + std::to_string(lhs) +
                  " but k(n-1)+j = " + std::to_string(rhs);
      return false;
    }
  }
  return true;
}

/// pi maps the cycles of R(A) bijectively onto the cycles of R(L(A)),
/// preserving size and weight; 1 and n are never both cyclic.
inline bool check_retraction_cycle_bijection(const AdmissibleSequence& A,
                                             std::string* detail = nullptr) {
  const AdmissibleSequence L = left_retract(A);
  const int n = A.n();
  const std::vector<int> pi = pi_map(n);

  // pi identifies exactly 1 and n.
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) {
      const bool collide = pi[static_cast<size_t>(x) - 1] == pi[static_cast<size_t>(y) - 1];
      if (collide != (x == 1 && y == n)) {
        if (detail) *detail = "pi collision pattern wrong";
        return false;
      }
    }

  const ComponentDecomposition da = decompose(f_map(A));
  const ComponentDecomposition dl = decompose(f_map(L));

  if (is_cyclic_vertex(da, 1) && is_cyclic_vertex(da, n)) {
    if (detail) *detail = "vertices 1 and n are both cyclic";
    return false;
  }
  if (da.component_count != dl.component_count) {
    if (detail)
      *detail = std::to_string(da.component_count) + " components vs " +
                std::to_string(dl.component_count) + " after retraction";
    return false;
  }
  if (da.cycles.size() != dl.cycles.size()) {
    if (detail) *detail = "cycle counts differ";
    return false;
  }

  // Image of each cycle must be a cycle of R(L(A)) of the same size and
  // weight, and all images must be distinct.
  std::vector<char> hit(dl.cycles.size(), 0);
  for (const Cycle& cyc : da.cycles) {
    std::vector<int> image;
    image.reserve(cyc.vertices.size());
    for (int v : cyc.vertices) image.push_back(pi[static_cast<size_t>(v) - 1]);
    image = detail::canonical_rotation(std::move(image));
    bool found = false;
    for (size_t k = 0; k < dl.cycles.size(); ++k) {
      if (dl.cycles[k].vertices == image) {
        if (hit[k]) {
          if (detail) *detail = "two cycles map to the same image";
          return false;
        }
        hit[k] = 1;
        if (dl.cycles[k].size != cyc.size || dl.cycles[k].weight != cyc.weight) {
          if (detail)
            *detail = "(" + std::to_string(cyc.size) + "," + std::to_string(cyc.weight) +
                      ") maps to (" + std::to_string(dl.cycles[k].size) + "," +
                      std::to_string(dl.cycles[k].weight) + ")";
          return false;
        }
        found = true;
        break;
      }
    }
    if (!found) {
      if (detail) *detail = "image of a cycle is not a cycle of R(L(A))";
      return false;
    }
  }
  return true;
}

/// The chain route and the direct graph walk must produce identical
/// (count, size, weight).
inline bool check_chain_vs_direct(const AdmissibleSequence& A, std::string* detail = nullptr) {
  const CycleData via_chain = chain_cycle_summary(A);
  const ComponentDecomposition d = decompose(f_map(A));
  if (static_cast<int>(d.cycles.size()) != via_chain.count) {
    if (detail)
      *detail = "chain count " + std::to_string(via_chain.count) + " vs direct " +
                std::to_string(d.cycles.size());
    return false;
  }
  for (const Cycle& c : d.cycles) {
    if (c.size != via_chain.size || c.weight != via_chain.weight) {
      if (detail)
        *detail = "chain (" + std::to_string(via_chain.size) + "," +
                  std::to_string(via_chain.weight) + ") vs direct (" + std::to_string(c.size) +
                  "," + std::to_string(c.weight) + ")";
      return false;
    }
  }
  return true;
}

enum class CheckOutcome { pass, fail, not_applicable };

/// Guarded by infinite global dimension: the cyclic vertices are exactly the
/// simples of infinite injective dimension, and their number equals the
/// number of simples of infinite projective dimension.
inline CheckOutcome check_infinite_dimension_counts(const AdmissibleSequence& A,
                                                    std::string* detail = nullptr) {
  if (!A.is_cycle()) fail(Errc::not_cycle_algebra, "dimension-count checks need a cycle algebra");
  if (!global_dim(A).is_infinite) return CheckOutcome::not_applicable;
  const ComponentDecomposition d = decompose(f_map(A));
  int pd_inf = 0;
  int id_inf = 0;
  for (int i = 1; i <= A.n(); ++i) {
    const bool pd_infinite = proj_dim(A, UniserialModule::simple(i)).is_infinite;
    const bool id_infinite = inj_dim(A, UniserialModule::simple(i)).is_infinite;
    pd_inf += pd_infinite ? 1 : 0;
    id_inf += id_infinite ? 1 : 0;
    if (id_infinite != is_cyclic_vertex(d, i)) {
      if (detail)
        *detail = "vertex " + std::to_string(i) + ": cyclic=" +
                  (is_cyclic_vertex(d, i) ? "yes" : "no") + " but injdim infinite=" +
                  (id_infinite ? "yes" : "no");
      return CheckOutcome::fail;
    }
  }
  const int cyclic = static_cast<int>(d.cyclic_vertices.size());
  if (cyclic != pd_inf || cyclic != id_inf) {
    if (detail)
      *detail = "#cyclic = " + std::to_string(cyclic) + ", #pd-infinite = " +
                std::to_string(pd_inf) + ", #injdim-infinite = " + std::to_string(id_inf);
    return CheckOutcome::fail;
  }
  return CheckOutcome::pass;
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

struct ClaimResult {
  std::string name;
  long long applicable = 0;
  long long passed = 0;
  long long failed = 0;
  long long skipped = 0;  // enumerated but outside the claim's hypothesis
};

struct Counterexample {
  std::string claim;
  std::vector<int> sequence;
  std::string detail;
};

struct VerificationReport {
  int n_max = 0;
  int c_max = 0;
  long long sequences = 0;
  std::vector<ClaimResult> claims;
  std::vector<Counterexample> counterexamples;

  bool ok() const {
    for (const ClaimResult& c : claims)
      if (c.failed != 0) return false;
    return true;
  }
};

/// Runs every claim over the full enumeration. Failures are collected, never
/// thrown; enumeration order makes the first counterexample minimal.
inline VerificationReport run_suite(int n_max, int c_max) {
  VerificationReport report;
  report.n_max = n_max;
  report.c_max = c_max;

  enum ClaimId {
    claim_uniform_cycles = 0,
    claim_loop_consequence,
    claim_weight_integrality,
    claim_unique_cycle,
    claim_gamma_f,
    claim_shift,
    claim_chain_vs_direct,
    claim_commuting_square,
    claim_retraction_identities,
    claim_cycle_bijection,
    claim_component_count,
    claim_dimension_counts,
    claim_total_
  };
  report.claims.resize(claim_total_);
  report.claims[claim_uniform_cycles].name = "uniform_cycle_data";
  report.claims[claim_loop_consequence].name = "loop_consequence";
  report.claims[claim_weight_integrality].name = "weight_integrality";
  report.claims[claim_unique_cycle].name = "unique_cycle_per_component";
  report.claims[claim_gamma_f].name = "gamma_f_agreement";
  report.claims[claim_shift].name = "shift_weight_by_size";
  report.claims[claim_chain_vs_direct].name = "chain_vs_direct_cycle_data";
  report.claims[claim_commuting_square].name = "retraction_commuting_square";
  report.claims[claim_retraction_identities].name = "retraction_index_identities";
  report.claims[claim_cycle_bijection].name = "retraction_cycle_bijection";
  report.claims[claim_component_count].name = "component_count_preservation";
  report.claims[claim_dimension_counts].name = "infinite_dimension_counts";

  auto record = [&](ClaimId id, const AdmissibleSequence& A, bool pass, const std::string& detail) {
    ClaimResult& claim = report.claims[id];
    claim.applicable += 1;
    if (pass) {
      claim.passed += 1;
    } else {
      claim.failed += 1;
      report.counterexamples.push_back({claim.name, A.entries(), detail});
    }
  };

  enumerate_admissible(n_max, c_max, [&](const AdmissibleSequence& A) {
    report.sequences += 1;
    std::string detail;

    record(claim_uniform_cycles, A, check_uniform_cycle_data(A, &detail), detail);
    record(claim_loop_consequence, A, check_loop_consequence(A, &detail), detail);
    record(claim_weight_integrality, A, check_weight_integrality(A, &detail), detail);
    record(claim_unique_cycle, A, check_unique_cycle_per_component(A, &detail), detail);

    if (A.is_cycle()) {
      record(claim_gamma_f, A, check_gamma_f_agreement(A, &detail), detail);
      record(claim_shift, A, check_shift(A, &detail), detail);
      record(claim_chain_vs_direct, A, check_chain_vs_direct(A, &detail), detail);

      switch (check_infinite_dimension_counts(A, &detail)) {
        case CheckOutcome::pass: record(claim_dimension_counts, A, true, {}); break;
        case CheckOutcome::fail: record(claim_dimension_counts, A, false, detail); break;
        case CheckOutcome::not_applicable: report.claims[claim_dimension_counts].skipped += 1; break;
      }

      if (is_normalized(A)) {
        record(claim_commuting_square, A, check_retraction_commuting_square(A, &detail), detail);
        record(claim_retraction_identities, A, check_retraction_index_identities(A, &detail), detail);
        record(claim_cycle_bijection, A, check_retraction_cycle_bijection(A, &detail), detail);
        const int comps_a = decompose(f_map(A)).component_count;
        const int comps_l = decompose(f_map(left_retract(A))).component_count;
        record(claim_component_count, A, comps_a == comps_l,
               std::to_string(comps_a) + " vs " + std::to_string(comps_l));
      } else {
        report.claims[claim_commuting_square].skipped += 1;
        report.claims[claim_retraction_identities].skipped += 1;
        report.claims[claim_cycle_bijection].skipped += 1;
        report.claims[claim_component_count].skipped += 1;
      }
    } else {
      report.claims[claim_gamma_f].skipped += 1;
      report.claims[claim_shift].skipped += 1;
      report.claims[claim_chain_vs_direct].skipped += 1;
      report.claims[claim_dimension_counts].skipped += 1;
      report.claims[claim_commuting_square].skipped += 1;
      report.claims[claim_retraction_identities].skipped += 1;
      report.claims[claim_cycle_bijection].skipped += 1;
      report.claims[claim_component_count].skipped += 1;
    }
  });
  return report;
}

}  // namespace nakayama
