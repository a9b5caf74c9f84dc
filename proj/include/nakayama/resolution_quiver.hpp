#pragma once

/**
 * @file resolution_quiver.hpp
 * @brief The resolution quiver R(A) of a connected Nakayama algebra as a
 *        functional graph, with component/cycle extraction.
 *
 * R(A) has vertices 1..n and one arrow i -> f(i) where f(i) = wrap(c_i + i).
 * Being a functional graph, every connected component contains exactly one
 * directed cycle. A cycle carries two integer statistics:
 *
 *   size   = number of vertices on it,
 *   weight = sum of the k_i in c_{x_i} + x_i = k_i * n + x_{i+1}
 *          = (sum of c over the cycle) / n.
 *
 * Both weight computations are carried out and must agree exactly.
 */

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "nakayama/admissible_sequence.hpp"
#include "nakayama/module_arith.hpp"

namespace nakayama {

struct ResolutionQuiver {
  int n = 0;
  std::vector<int> c;        // the generating admissible sequence
  std::vector<int> targets;  // targets[i-1] = f(i)

  int f(int i) const { return targets[static_cast<size_t>(i) - 1]; }
};

inline ResolutionQuiver f_map(const AdmissibleSequence& A) {
  ResolutionQuiver q{A.n(), A.entries(), {}};
  q.targets.resize(static_cast<size_t>(A.n()));
  for (int i = 1; i <= A.n(); ++i)
    q.targets[static_cast<size_t>(i) - 1] = A.wrap(static_cast<long long>(A.c(i)) + i);
  return q;
}

struct Cycle {
  std::vector<int> vertices;  // in f-order, rotated to start at the smallest vertex
  int size = 0;
  int weight = 0;
};

struct ComponentDecomposition {
  int component_count = 0;
  std::vector<int> component_of;    // component_of[i-1] in {1..component_count}
  std::vector<Cycle> cycles;        // one per component, ordered by smallest vertex
  std::vector<int> cyclic_vertices; // ascending
};

namespace detail {

/// Weight of an f-closed vertex list, computed both as sum of the k_i and as
/// (sum of c)/n; the two must agree and the division must be exact.
inline int cycle_weight_checked(const std::vector<int>& c, int n, const std::vector<int>& vertices) {
  const int s = static_cast<int>(vertices.size());
  long long k_sum = 0;
  long long c_sum = 0;
  for (int idx = 0; idx < s; ++idx) {
    const int x = vertices[static_cast<size_t>(idx)];
    const int next = vertices[static_cast<size_t>((idx + 1) % s)];
    const int cx = c[static_cast<size_t>(x) - 1];
    const long long num = static_cast<long long>(cx) + x - next;
    if (num % n != 0)
      fail(Errc::internal_invariant_violated, "c_x + x - f(x) is not divisible by n");
    k_sum += num / n;
    c_sum += cx;
  }
  if (c_sum % n != 0 || k_sum * n != c_sum)
    fail(Errc::internal_invariant_violated,
         "cycle weight mismatch: sum k_i = " + std::to_string(k_sum) + ", sum c / n = " +
             std::to_string(c_sum) + "/" + std::to_string(n));
  return static_cast<int>(k_sum);
}

inline std::vector<int> canonical_rotation(std::vector<int> vertices) {
  auto smallest = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), smallest, vertices.end());
  return vertices;
}

}  // namespace detail

/// Weight of a cycle supplied as a vertex list; rejects lists that are not
/// f-closed cycles of R(A).
inline int cycle_weight(const AdmissibleSequence& A, const std::vector<int>& vertices) {
  if (vertices.empty()) fail(Errc::not_a_cycle, "empty vertex list");
  ResolutionQuiver q = f_map(A);
  const int s = static_cast<int>(vertices.size());
  std::vector<char> used(static_cast<size_t>(A.n()) + 1, 0);
  for (int idx = 0; idx < s; ++idx) {
    const int x = vertices[static_cast<size_t>(idx)];
    if (x < 1 || x > A.n()) fail(Errc::not_a_cycle, "vertex out of range");
    if (used[static_cast<size_t>(x)]) fail(Errc::not_a_cycle, "repeated vertex");
    used[static_cast<size_t>(x)] = 1;
    const int next = vertices[static_cast<size_t>((idx + 1) % s)];
    if (q.f(x) != next)
      fail(Errc::not_a_cycle, "list is not f-closed at vertex " + std::to_string(x));
  }
  return detail::cycle_weight_checked(A.entries(), A.n(), vertices);
}

/// Splits R(A) into connected components and extracts the unique cycle of
/// each. Components are numbered in order of their smallest vertex.
inline ComponentDecomposition decompose(const ResolutionQuiver& q) {
  const int n = q.n;
  ComponentDecomposition out;

  // Union-find over the undirected edges {i, f(i)}.
  std::vector<int> parent(static_cast<size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  for (int i = 1; i <= n; ++i) {
    int a = find(i), b = find(q.f(i));
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
  out.component_of.assign(static_cast<size_t>(n), 0);
  std::vector<int> id_of_root(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int root = find(i);
    if (id_of_root[static_cast<size_t>(root)] == 0)
      id_of_root[static_cast<size_t>(root)] = ++out.component_count;
    out.component_of[static_cast<size_t>(i) - 1] = id_of_root[static_cast<size_t>(root)];
  }

  // Cycle extraction by iterated f with three-color marking.
  std::vector<char> color(static_cast<size_t>(n) + 1, 0);  // 0 new, 1 on path, 2 done
  for (int v = 1; v <= n; ++v) {
    if (color[static_cast<size_t>(v)] != 0) continue;
    std::vector<int> path;
    int u = v;
    while (color[static_cast<size_t>(u)] == 0) {
      color[static_cast<size_t>(u)] = 1;
      path.push_back(u);
      u = q.f(u);
    }
    if (color[static_cast<size_t>(u)] == 1) {
      auto start = std::find(path.begin(), path.end(), u);
      std::vector<int> verts(start, path.end());
      verts = detail::canonical_rotation(std::move(verts));
      Cycle cyc;
      cyc.size = static_cast<int>(verts.size());
      cyc.weight = detail::cycle_weight_checked(q.c, n, verts);
      cyc.vertices = std::move(verts);
      out.cycles.push_back(std::move(cyc));
    }
    for (int w : path) color[static_cast<size_t>(w)] = 2;
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.vertices[0] < b.vertices[0]; });

  for (const Cycle& cyc : out.cycles)
    out.cyclic_vertices.insert(out.cyclic_vertices.end(), cyc.vertices.begin(),
                               cyc.vertices.end());
  std::sort(out.cyclic_vertices.begin(), out.cyclic_vertices.end());

  // Unique-cycle sanity: one cycle per component, no component shared.
  if (static_cast<int>(out.cycles.size()) != out.component_count)
    fail(Errc::internal_invariant_violated, "cycle count differs from component count");
  std::vector<char> cycle_in_component(static_cast<size_t>(out.component_count) + 1, 0);
  for (const Cycle& cyc : out.cycles) {
    const int comp = out.component_of[static_cast<size_t>(cyc.vertices[0]) - 1];
    if (cycle_in_component[static_cast<size_t>(comp)])
      fail(Errc::internal_invariant_violated, "two cycles in one component");
    cycle_in_component[static_cast<size_t>(comp)] = 1;
  }
  return out;
}

inline bool is_cyclic_vertex(const ComponentDecomposition& d, int v) {
  return std::binary_search(d.cyclic_vertices.begin(), d.cyclic_vertices.end(), v);
}

/// Pointwise check that gamma from the module calculus lands on f(i).
inline bool gamma_consistency(const AdmissibleSequence& A) {
  if (!A.is_cycle()) fail(Errc::not_cycle_algebra, "gamma is defined for cycle algebras");
  ResolutionQuiver q = f_map(A);
  for (int i = 1; i <= A.n(); ++i)
    if (gamma(A, i) != q.f(i)) return false;
  return true;
}

/// Deterministic DOT rendering: nodes ascending, then one edge per line;
/// cyclic vertices are drawn with a double border.
inline std::string to_dot(const ResolutionQuiver& q, const ComponentDecomposition& d) {
  std::string out = "digraph resolution_quiver {\n";
  for (int v = 1; v <= q.n; ++v) {
    out += "  " + std::to_string(v);
    out += is_cyclic_vertex(d, v) ? " [shape=doublecircle];\n" : " [shape=circle];\n";
  }
  for (int v = 1; v <= q.n; ++v)
    out += "  " + std::to_string(v) + " -> " + std::to_string(q.f(v)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace nakayama
