#pragma once

/**
 * @file module_arith.hpp
 * @brief Index arithmetic for uniserial modules over a connected Nakayama
 *        algebra.
 *
 * Every indecomposable module is uniserial, so a module is just a pair
 * (top vertex a, length l) with 1 <= l <= c_a; its composition factors, top
 * to socle, are S_a, S_{a+1}, ..., S_{a+l-1} (indices cyclic for cycle
 * algebras, strictly within 1..n for line algebras). All functors below --
 * projective cover, socle, syzygy, injective envelope, cosyzygy, the
 * Auslander-Reiten shift tau -- reduce to arithmetic on (top, length).
 *
 * Projective and injective dimensions are computed by iterating syzygy or
 * cosyzygy; the state space is finite (at most n * max c states), so
 * infinity is detected exactly as a recurring state, never via a cutoff.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "nakayama/admissible_sequence.hpp"

namespace nakayama {

/// (top, len) coordinates; len == 0 is the distinguished zero module.
struct UniserialModule {
  int top = 0;
  int len = 0;

  static constexpr UniserialModule zero() noexcept { return {}; }
  static constexpr UniserialModule simple(int a) noexcept { return {a, 1}; }

  constexpr bool is_zero() const noexcept { return len == 0; }

  friend constexpr bool operator==(UniserialModule, UniserialModule) = default;
};

/// A homological dimension: a nonnegative integer or infinity.
struct HomDim {
  bool is_infinite = false;
  int value = 0;  // meaningful only when finite

  static constexpr HomDim finite(int k) noexcept { return {false, k}; }
  static constexpr HomDim infinite() noexcept { return {true, 0}; }

  friend constexpr bool operator==(HomDim, HomDim) = default;
};

inline std::string to_string(HomDim d) { return d.is_infinite ? "inf" : std::to_string(d.value); }

namespace detail {

inline void require_cycle(const AdmissibleSequence& A, const char* op) {
  if (!A.is_cycle()) fail(Errc::not_cycle_algebra, std::string(op) + " requires a cycle algebra");
}

inline void require_vertex(const AdmissibleSequence& A, int i, const char* op) {
  if (i < 1 || i > A.n())
    fail(Errc::bad_argument, std::string(op) + ": vertex " + std::to_string(i) + " out of range");
}

inline void require_module(const AdmissibleSequence& A, UniserialModule m, const char* op) {
  if (m.is_zero()) fail(Errc::zero_module, std::string(op) + " is undefined on the zero module");
  if (m.top < 1 || m.top > A.n() || m.len < 1 || m.len > A.c(m.top))
    fail(Errc::bad_argument, std::string(op) + ": (" + std::to_string(m.top) + "," +
                                 std::to_string(m.len) + ") is not a module over this algebra");
}

}  // namespace detail

inline UniserialModule proj_cover(const AdmissibleSequence& A, int i) {
  detail::require_vertex(A, i, "proj_cover");
  return {i, A.c(i)};
}

/// Socle vertex: wrap(top + len - 1). For line algebras the index never
/// actually wraps (guaranteed by validation).
inline int socle(const AdmissibleSequence& A, UniserialModule m) {
  detail::require_module(A, m, "socle");
  return A.wrap(m.top + m.len - 1);
}

inline bool is_projective(const AdmissibleSequence& A, UniserialModule m) {
  detail::require_module(A, m, "is_projective");
  return m.len == A.c(m.top);
}

/// Kernel of the projective cover P_top ->> M: zero when M is projective,
/// otherwise the uniserial of length c_top - len starting right below M.
inline UniserialModule syzygy(const AdmissibleSequence& A, UniserialModule m) {
  detail::require_module(A, m, "syzygy");
  if (m.len == A.c(m.top)) return UniserialModule::zero();
  return {A.wrap(m.top + m.len), A.c(m.top) - m.len};
}

/// Length of the injective envelope of S_b: the largest l >= 1 such that the
/// uniserial of length l with socle b exists, i.e. l <= c_{wrap(b-l+1)}.
inline int envelope_len(const AdmissibleSequence& A, int b) {
  detail::require_cycle(A, "injective_envelope");
  detail::require_vertex(A, b, "injective_envelope");
  const int cap = *std::max_element(A.entries().begin(), A.entries().end());
  int d = 0;
  for (int l = 1; l <= cap; ++l)
    if (l <= A.c(A.wrap(static_cast<long long>(b) - l + 1))) d = std::max(d, l);
  return d;  // l = 1 always qualifies, so d >= 1
}

inline UniserialModule injective_envelope(const AdmissibleSequence& A, int b) {
  const int d = envelope_len(A, b);
  return {A.wrap(static_cast<long long>(b) - d + 1), d};
}

inline bool is_injective(const AdmissibleSequence& A, UniserialModule m) {
  detail::require_cycle(A, "is_injective");
  detail::require_module(A, m, "is_injective");
  return m.len == envelope_len(A, socle(A, m));
}

/// Cokernel of M into the injective envelope of its socle: zero when M is
/// injective, otherwise the top (d - len) layers of that envelope.
inline UniserialModule cosyzygy(const AdmissibleSequence& A, UniserialModule m) {
  detail::require_cycle(A, "cosyzygy");
  detail::require_module(A, m, "cosyzygy");
  const int b = socle(A, m);
  const int d = envelope_len(A, b);
  if (m.len == d) return UniserialModule::zero();
  return {A.wrap(static_cast<long long>(b) - d + 1), d - m.len};
}

/// Auslander-Reiten translate on uniserials over a cycle algebra: shift the
/// top by +1, keep the length. Defined for non-projective modules.
inline UniserialModule tau(const AdmissibleSequence& A, UniserialModule m) {
  detail::require_cycle(A, "tau");
  detail::require_module(A, m, "tau");
  if (is_projective(A, m)) fail(Errc::projective_module, "tau is undefined on projectives");
  return {A.wrap(m.top + 1), m.len};
}

inline UniserialModule tau_inv(const AdmissibleSequence& A, UniserialModule m) {
  detail::require_cycle(A, "tau_inv");
  detail::require_module(A, m, "tau_inv");
  if (is_injective(A, m)) fail(Errc::injective_module, "tau_inv is undefined on injectives");
  return {A.wrap(m.top - 1), m.len};
}

/// gamma(S_i) = tau(soc P(S_i)), as a vertex index. For cycle algebras this
/// lands on wrap(i + c_i), the arrow target of i in the resolution quiver.
inline int gamma(const AdmissibleSequence& A, int i) {
  detail::require_cycle(A, "gamma");
  detail::require_vertex(A, i, "gamma");
  UniserialModule socle_simple = UniserialModule::simple(socle(A, proj_cover(A, i)));
  return tau(A, socle_simple).top;
}

namespace detail {

// Visited-state bookkeeping for dimension computations. States are
// (top, len) pairs packed into a flat table.
class StateSet {
 public:
  explicit StateSet(const AdmissibleSequence& A)
      : max_len_(*std::max_element(A.entries().begin(), A.entries().end())),
        seen_(static_cast<size_t>(A.n()) * static_cast<size_t>(max_len_), 0) {}

  /// Returns true if the state was already present.
  bool insert(UniserialModule m) {
    char& flag = seen_[static_cast<size_t>(m.top - 1) * static_cast<size_t>(max_len_) +
                       static_cast<size_t>(m.len - 1)];
    const bool dup = flag != 0;
    flag = 1;
    return dup;
  }

 private:
  int max_len_;
  std::vector<char> seen_;
};

}  // namespace detail

/// pd(M) = 0 iff M is projective, else 1 + pd(syzygy M); a repeated
/// (top, len) state certifies infinity.
inline HomDim proj_dim(const AdmissibleSequence& A, UniserialModule m) {
  detail::require_module(A, m, "proj_dim");
  detail::StateSet seen(A);
  int steps = 0;
  UniserialModule cur = m;
  while (!is_projective(A, cur)) {
    if (seen.insert(cur)) return HomDim::infinite();
    cur = syzygy(A, cur);
    ++steps;
  }
  return HomDim::finite(steps);
}

/// Dual of proj_dim, iterating cosyzygy; cycle algebras only.
inline HomDim inj_dim(const AdmissibleSequence& A, UniserialModule m) {
  detail::require_cycle(A, "inj_dim");
  detail::require_module(A, m, "inj_dim");
  detail::StateSet seen(A);
  int steps = 0;
  UniserialModule cur = m;
  while (!is_injective(A, cur)) {
    if (seen.insert(cur)) return HomDim::infinite();
    cur = cosyzygy(A, cur);
    ++steps;
  }
  return HomDim::finite(steps);
}

/// Max projective dimension over the simples.
inline HomDim global_dim(const AdmissibleSequence& A) {
  HomDim best = HomDim::finite(0);
  for (int i = 1; i <= A.n(); ++i) {
    HomDim d = proj_dim(A, UniserialModule::simple(i));
    if (d.is_infinite) return HomDim::infinite();
    if (d.value > best.value) best = d;
  }
  return best;
}

}  // namespace nakayama
