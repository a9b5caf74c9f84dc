#pragma once

// Brute-force reference implementations used only by tests. Everything here
// works on explicit composition-factor lists and raw tuples, deliberately
// avoiding the (top, len) index arithmetic of the library, so agreement is
// meaningful.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "nakayama/admissible_sequence.hpp"

namespace oracle {

// A uniserial module as its composition factor list, top first.
using Factors = std::vector<int>;

inline int wrap1(long long x, int n) {
  long long m = (x - 1) % n;
  if (m < 0) m += n;
  return static_cast<int>(m) + 1;
}

inline Factors factors_of(const nakayama::AdmissibleSequence& A, int top, int len) {
  Factors f;
  for (int k = 0; k < len; ++k) f.push_back(wrap1(static_cast<long long>(top) + k, A.n()));
  return f;
}

inline Factors proj(const nakayama::AdmissibleSequence& A, int i) {
  return factors_of(A, i, A.c(i));
}

inline bool is_projective(const nakayama::AdmissibleSequence& A, const Factors& m) {
  return m == proj(A, m.front());
}

// Kernel of P_top ->> M: M is the top part of P_top, the kernel is the rest.
inline Factors syzygy(const nakayama::AdmissibleSequence& A, const Factors& m) {
  Factors p = proj(A, m.front());
  if (!std::equal(m.begin(), m.end(), p.begin())) throw std::logic_error("not a quotient of P_top");
  return Factors(p.begin() + static_cast<long>(m.size()), p.end());
}

// All uniserials over A: every (top, len) with len <= c_top, as factor lists.
inline std::vector<Factors> all_modules(const nakayama::AdmissibleSequence& A) {
  std::vector<Factors> out;
  for (int a = 1; a <= A.n(); ++a)
    for (int l = 1; l <= A.c(a); ++l) out.push_back(factors_of(A, a, l));
  return out;
}

// Injective envelope of S_b: longest uniserial whose last factor is b,
// found by scanning every module (independent of the d_b formula).
inline Factors envelope(const nakayama::AdmissibleSequence& A, int b) {
  Factors best;
  for (const Factors& m : all_modules(A))
    if (m.back() == b && m.size() > best.size()) best = m;
  return best;
}

inline bool is_injective(const nakayama::AdmissibleSequence& A, const Factors& m) {
  return m == envelope(A, m.back());
}

// Cokernel of M into the envelope of its socle: M is the bottom part, the
// cokernel is the top part.
inline Factors cosyzygy(const nakayama::AdmissibleSequence& A, const Factors& m) {
  Factors env = envelope(A, m.back());
  if (!std::equal(m.rbegin(), m.rend(), env.rbegin()))
    throw std::logic_error("not a submodule of the envelope");
  return Factors(env.begin(), env.end() - static_cast<long>(m.size()));
}

// -1 encodes infinity.
inline int proj_dim(const nakayama::AdmissibleSequence& A, const Factors& m) {
  std::set<Factors> seen;
  Factors cur = m;
  int steps = 0;
  while (!is_projective(A, cur)) {
    if (!seen.insert(cur).second) return -1;
    cur = syzygy(A, cur);
    ++steps;
  }
  return steps;
}

inline int inj_dim(const nakayama::AdmissibleSequence& A, const Factors& m) {
  std::set<Factors> seen;
  Factors cur = m;
  int steps = 0;
  while (!is_injective(A, cur)) {
    if (!seen.insert(cur).second) return -1;
    cur = cosyzygy(A, cur);
    ++steps;
  }
  return steps;
}

inline int global_dim(const nakayama::AdmissibleSequence& A) {
  int best = 0;
  for (int i = 1; i <= A.n(); ++i) {
    int d = proj_dim(A, factors_of(A, i, 1));
    if (d < 0) return -1;
    best = std::max(best, d);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Direct functional-graph cycle data, by plain iteration of i -> c_i + i mod n.
// ---------------------------------------------------------------------------

struct CycleInfo {
  std::vector<int> vertices;  // starts at the smallest vertex
  int size = 0;
  int weight = 0;             // (sum of c over the cycle) / n
};

inline std::vector<CycleInfo> cycles(const nakayama::AdmissibleSequence& A) {
  const int n = A.n();
  auto f = [&](int i) { return wrap1(static_cast<long long>(A.c(i)) + i, n); };
  std::set<std::vector<int>> canon;
  for (int v = 1; v <= n; ++v) {
    // run far enough to be inside the cycle, then collect it
    int u = v;
    for (int k = 0; k < n; ++k) u = f(u);
    std::vector<int> cyc{u};
    for (int w = f(u); w != u; w = f(w)) cyc.push_back(w);
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    canon.insert(cyc);
  }
  std::vector<CycleInfo> out;
  for (const auto& verts : canon) {
    CycleInfo info;
    info.vertices = verts;
    info.size = static_cast<int>(verts.size());
    long long sum = 0;
    for (int v : verts) sum += A.c(v);
    if (sum % n != 0) throw std::logic_error("cycle weight is not an integer");
    info.weight = static_cast<int>(sum / n);
    out.push_back(std::move(info));
  }
  return out;
}

inline int component_count(const nakayama::AdmissibleSequence& A) {
  // undirected reachability, brute force
  const int n = A.n();
  auto f = [&](int i) { return wrap1(static_cast<long long>(A.c(i)) + i, n); };
  std::vector<int> comp(static_cast<size_t>(n) + 1, 0);
  int next_id = 0;
  for (int start = 1; start <= n; ++start) {
    if (comp[static_cast<size_t>(start)] != 0) continue;
    ++next_id;
    std::vector<int> frontier{start};
    comp[static_cast<size_t>(start)] = next_id;
    while (!frontier.empty()) {
      int v = frontier.back();
      frontier.pop_back();
      std::vector<int> nbrs{f(v)};
      for (int w = 1; w <= n; ++w)
        if (f(w) == v) nbrs.push_back(w);
      for (int w : nbrs) {
        if (comp[static_cast<size_t>(w)] == 0) {
          comp[static_cast<size_t>(w)] = next_id;
          frontier.push_back(w);
        }
      }
    }
  }
  return next_id;
}

// ---------------------------------------------------------------------------
// Naive admissibility filter over all tuples, written straight from the
// definitions. Used to certify the recursive generator.
// ---------------------------------------------------------------------------

inline bool admissible(const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  if (n == 0) return false;
  for (int v : c)
    if (v < 1) return false;
  if (c[static_cast<size_t>(n) - 1] == 1) {  // line
    for (int i = 0; i + 1 < n; ++i)
      if (c[static_cast<size_t>(i)] < 2) return false;
    for (int i = 0; i + 1 < n; ++i)
      if (c[static_cast<size_t>(i) + 1] < c[static_cast<size_t>(i)] - 1) return false;
    for (int i = 0; i < n; ++i)
      if (i + c[static_cast<size_t>(i)] > n) return false;  // stay on the line
    return true;
  }
  for (int i = 0; i < n; ++i)
    if (c[static_cast<size_t>(i)] < 2) return false;
  for (int i = 0; i < n; ++i)
    if (c[static_cast<size_t>((i + 1) % n)] < c[static_cast<size_t>(i)] - 1) return false;
  return true;
}

inline std::vector<std::vector<int>> naive_enumerate(int n_max, int c_max) {
  std::vector<std::vector<int>> out;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<int> tuple(static_cast<size_t>(n), 1);
    while (true) {
      if (admissible(tuple)) out.push_back(tuple);
      int pos = n - 1;
      while (pos >= 0 && tuple[static_cast<size_t>(pos)] == c_max) {
        tuple[static_cast<size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      tuple[static_cast<size_t>(pos)] += 1;
    }
  }
  return out;
}

}  // namespace oracle
