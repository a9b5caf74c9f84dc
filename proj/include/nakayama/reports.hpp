#pragma once

/**
 * @file reports.hpp
 * @brief JSON and text serialization of analysis results. Key order and
 *        element order are fixed so identical invocations produce identical
 *        bytes. Infinite dimensions are encoded as the string "inf".
 */

#include <string>
#include <vector>

#include "json.hpp"
#include "nakayama/module_arith.hpp"
#include "nakayama/resolution_quiver.hpp"
#include "nakayama/retraction.hpp"
#include "nakayama/verify.hpp"

namespace nakayama::reports {

using json = nlohmann::ordered_json;

inline json homdim_json(HomDim d) {
  if (d.is_infinite) return json("inf");
  return json(d.value);
}

inline json cycles_json(const ComponentDecomposition& d) {
  json cycles = json::array();
  for (const Cycle& c : d.cycles) {
    json entry;
    entry["vertices"] = c.vertices;
    entry["size"] = c.size;
    entry["weight"] = c.weight;
    cycles.push_back(std::move(entry));
  }
  return cycles;
}

inline json components_json(const ComponentDecomposition& d, int n) {
  json comps = json::array();
  for (int id = 1; id <= d.component_count; ++id) {
    std::vector<int> members;
    for (int v = 1; v <= n; ++v)
      if (d.component_of[static_cast<size_t>(v) - 1] == id) members.push_back(v);
    comps.push_back(members);
  }
  return comps;
}

inline json analyze_report(const AdmissibleSequence& A) {
  const ResolutionQuiver q = f_map(A);
  const ComponentDecomposition d = decompose(q);
  json out;
  out["n"] = A.n();
  out["c"] = A.entries();
  out["kind"] = to_string(A.kind());
  out["self_injective"] = A.self_injective();
  out["p"] = A.p_min();
  out["f"] = q.targets;
  out["components"] = components_json(d, A.n());
  out["cycles"] = cycles_json(d);
  return out;
}

inline json quiver_report(const AdmissibleSequence& A) {
  const ResolutionQuiver q = f_map(A);
  const ComponentDecomposition d = decompose(q);
  json out;
  out["n"] = A.n();
  out["f"] = q.targets;
  out["cyclic_vertices"] = d.cyclic_vertices;
  out["components"] = components_json(d, A.n());
  out["cycles"] = cycles_json(d);
  return out;
}

inline std::string quiver_dot(const AdmissibleSequence& A) {
  const ResolutionQuiver q = f_map(A);
  return to_dot(q, decompose(q));
}

inline json dims_report(const AdmissibleSequence& A) {
  json out;
  out["n"] = A.n();
  out["c"] = A.entries();
  out["kind"] = to_string(A.kind());
  json pd = json::array();
  for (int i = 1; i <= A.n(); ++i)
    pd.push_back(homdim_json(proj_dim(A, UniserialModule::simple(i))));
  out["pd"] = std::move(pd);
  if (A.is_cycle()) {
    json id = json::array();
    for (int i = 1; i <= A.n(); ++i)
      id.push_back(homdim_json(inj_dim(A, UniserialModule::simple(i))));
    out["injdim"] = std::move(id);
  } else {
    out["note"] = "injective dimensions are computed for cycle algebras only";
  }
  out["global_dim"] = homdim_json(global_dim(A));
  return out;
}

inline json sequence_json(const AdmissibleSequence& A) { return json(A.entries()); }

inline json retract_report(const AdmissibleSequence& A) {
  const RetractionChain chain = retraction_chain(A);
  const CycleData summary = chain_cycle_summary(A);
  json out;
  out["input"] = A.entries();
  json steps = json::array();
  for (const RetractionStep& s : chain.steps) {
    json step;
    step["kind"] = to_string(s.op);
    if (s.op == RetractionStep::Op::lift) step["t"] = s.amount;
    if (s.op == RetractionStep::Op::rotate) step["r"] = s.amount;
    step["input"] = s.input.entries();
    step["output"] = s.output.entries();
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  out["terminal"] = chain.terminal.entries();
  out["initial_lift"] = chain.initial_lift;
  out["summary"] = {{"count", summary.count}, {"size", summary.size}, {"weight", summary.weight}};
  return out;
}

inline json verification_report_json(const VerificationReport& r) {
  json out;
  out["n_max"] = r.n_max;
  out["c_max"] = r.c_max;
  out["sequences"] = r.sequences;
  out["ok"] = r.ok();
  json claims = json::array();
  for (const ClaimResult& c : r.claims) {
    json claim;
    claim["name"] = c.name;
    claim["applicable"] = c.applicable;
    claim["passed"] = c.passed;
    claim["failed"] = c.failed;
    claim["skipped"] = c.skipped;
    claims.push_back(std::move(claim));
  }
  out["claims"] = std::move(claims);
  json cex = json::array();
  for (const Counterexample& c : r.counterexamples) {
    json entry;
    entry["claim"] = c.claim;
    entry["sequence"] = c.sequence;
    entry["detail"] = c.detail;
    cex.push_back(std::move(entry));
  }
  out["counterexamples"] = std::move(cex);
  return out;
}

/// One line per claim, aligned for terminal reading.
inline std::string verification_summary(const VerificationReport& r) {
  std::string out;
  out += "verified " + std::to_string(r.sequences) + " sequences (n <= " +
         std::to_string(r.n_max) + ", c <= " + std::to_string(r.c_max) + ")\n";
  for (const ClaimResult& c : r.claims) {
    std::string line = c.failed == 0 ? "PASS " : "FAIL ";
    line += c.name;
    line.append(c.name.size() < 34 ? 34 - c.name.size() : 1, ' ');
    line += "checked " + std::to_string(c.applicable);
    if (c.skipped > 0) line += " (skipped " + std::to_string(c.skipped) + ")";
    if (c.failed > 0) line += "  FAILURES " + std::to_string(c.failed);
    out += line + "\n";
  }
  if (!r.counterexamples.empty()) {
    out += "first counterexample: claim " + r.counterexamples[0].claim + " at sequence ";
    for (size_t i = 0; i < r.counterexamples[0].sequence.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(r.counterexamples[0].sequence[i]);
    }
    out += " (" + r.counterexamples[0].detail + ")\n";
  }
  return out;
}

}  // namespace nakayama::reports
