#pragma once

/**
 * @file admissible_sequence.hpp
 * @brief Connected Nakayama algebras given by their admissible sequences
 *        (Kupisch series).
 *
 * A connected Nakayama algebra is modeled purely by the tuple
 * (c_1, ..., c_n) of lengths of its indecomposable projectives, indexed so
 * that rad P_i is a factor module of P_{i+1} (indices mod n). The algebra is
 * a *line* algebra when c_n = 1 and a *cycle* algebra otherwise.
 *
 * Validity conditions (the standard Kupisch conditions):
 *   - every entry is >= 1,
 *   - c_{i+1} >= c_i - 1 for consecutive indices (cyclically for cycle kind),
 *   - line kind: c_i >= 2 for i < n, and no projective runs past vertex n,
 *   - cycle kind: c_i >= 2 for all i.
 *
 * Everything here is an immutable value; operations return new sequences.
 */

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nakayama {

enum class Kind { line, cycle };

enum class Errc {
  empty_sequence,
  non_positive_entry,
  violates_factor_condition,
  line_entry_too_small,
  mixed_kind,
  not_cycle_algebra,
  not_normalized,
  already_self_injective,
  not_a_cycle,
  zero_module,
  projective_module,
  injective_module,
  internal_invariant_violated,
  bad_argument,
  parse_error,
};

inline const char* to_string(Errc e) noexcept {
  switch (e) {
    case Errc::empty_sequence: return "EmptySequence";
    case Errc::non_positive_entry: return "NonPositiveEntry";
    case Errc::violates_factor_condition: return "ViolatesFactorCondition";
    case Errc::line_entry_too_small: return "LineEntryTooSmall";
    case Errc::mixed_kind: return "MixedKind";
    case Errc::not_cycle_algebra: return "NotCycleAlgebra";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::already_self_injective: return "AlreadySelfInjective";
    case Errc::not_a_cycle: return "NotACycle";
    case Errc::zero_module: return "ZeroModule";
    case Errc::projective_module: return "ProjectiveModule";
    case Errc::injective_module: return "InjectiveModule";
    case Errc::internal_invariant_violated: return "InternalInvariantViolated";
    case Errc::bad_argument: return "BadArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// 1-based cyclic index reduction: wrap(x) = ((x - 1) mod n) + 1, result in {1..n}.
inline int wrap_index(long long x, int n) {
  long long m = (x - 1) % n;
  if (m < 0) m += n;
  return static_cast<int>(m) + 1;
}

class AdmissibleSequence {
 public:
  /// Checks the Kupisch conditions and classifies the sequence. Entries are
  /// taken verbatim; no reordering happens here or anywhere else.
  static AdmissibleSequence validate(std::vector<int> raw) {
    if (raw.empty()) fail(Errc::empty_sequence, "admissible sequence must be nonempty");
    const int n = static_cast<int>(raw.size());
    for (int i = 0; i < n; ++i) {
      if (raw[i] < 1)
        fail(Errc::non_positive_entry,
             "c_" + std::to_string(i + 1) + " = " + std::to_string(raw[i]) + " must be >= 1");
    }
    Kind kind;
    bool self_injective;
    if (raw[n - 1] == 1) {
      kind = Kind::line;
      for (int i = 0; i + 1 < n; ++i) {
        if (raw[i] == 1)
          fail(Errc::line_entry_too_small,
               "c_" + std::to_string(i + 1) + " = 1 is only allowed at the end of a line sequence");
      }
      // A projective that would run past vertex n needs a cyclic quiver,
      // which c_n = 1 rules out.
      for (int a = 0; a < n; ++a) {
        if (a + raw[a] > n)
          fail(Errc::mixed_kind, "P_" + std::to_string(a + 1) + " of length " +
                                     std::to_string(raw[a]) + " runs past the end of a line of " +
                                     std::to_string(n) + " vertices");
      }
      for (int i = 0; i + 1 < n; ++i) {
        if (raw[i + 1] < raw[i] - 1)
          fail(Errc::violates_factor_condition,
               "c_" + std::to_string(i + 2) + " < c_" + std::to_string(i + 1) +
                   " - 1 at i=" + std::to_string(i + 1));
      }
      self_injective = (n == 1);  // the semisimple line (1)
    } else {
      kind = Kind::cycle;
      for (int i = 0; i < n; ++i) {
        if (raw[i] < 2)
          fail(Errc::line_entry_too_small,
               "c_" + std::to_string(i + 1) + " = 1 is not allowed in a cycle sequence");
      }
      for (int i = 0; i < n; ++i) {
        if (raw[(i + 1) % n] < raw[i] - 1)
          fail(Errc::violates_factor_condition,
               "c_" + std::to_string((i + 1) % n + 1) + " < c_" + std::to_string(i + 1) +
                   " - 1 at i=" + std::to_string(i + 1));
      }
      self_injective = true;
      for (int i = 1; i < n; ++i) self_injective = self_injective && raw[i] == raw[0];
    }
    return AdmissibleSequence(std::move(raw), kind, self_injective);
  }

  /// Parses the shared text grammar: comma-separated positive decimal
  /// integers, optional whitespace around each entry, e.g. "3,3,3,4".
  static AdmissibleSequence parse(std::string_view text) {
    std::vector<int> vals;
    size_t pos = 0;
    while (true) {
      size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - pos);
      while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
      while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
      if (tok.empty()) {
        if (vals.empty() && comma == std::string_view::npos)
          fail(Errc::empty_sequence, "empty sequence text");
        fail(Errc::parse_error, "empty entry in sequence text");
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(Errc::parse_error, "invalid integer '" + std::string(tok) + "'");
      vals.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return validate(std::move(vals));
  }

  int n() const noexcept { return static_cast<int>(c_.size()); }

  /// 1-based access to c_i.
  int c(int i) const { return c_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& entries() const noexcept { return c_; }

  Kind kind() const noexcept { return kind_; }
  bool is_line() const noexcept { return kind_ == Kind::line; }
  bool is_cycle() const noexcept { return kind_ == Kind::cycle; }
  bool self_injective() const noexcept { return self_injective_; }

  /// p(A) = min over all entries.
  int p_min() const {
    int p = c_[0];
    for (int v : c_) p = v < p ? v : p;
    return p;
  }

  int wrap(long long x) const { return wrap_index(x, n()); }

  /// Cyclic rotation: entry i of the result is c_{wrap(i + r)}. r is reduced
  /// mod n, so rotate(r) followed by rotate(n - r) is the identity.
  AdmissibleSequence rotate(int r) const {
    if (!is_cycle()) fail(Errc::not_cycle_algebra, "rotate requires a cycle sequence");
    const int nn = n();
    int s = r % nn;
    if (s < 0) s += nn;
    std::vector<int> out(static_cast<size_t>(nn));
    for (int i = 1; i <= nn; ++i) out[static_cast<size_t>(i) - 1] = c(wrap(i + s));
    return validate(std::move(out));
  }

  /// Adds t*n to every entry. Leaves the induced map i -> wrap(c_i + i)
  /// untouched, which is what makes the retraction chain bookkeeping work.
  AdmissibleSequence lift(int t) const {
    if (!is_cycle()) fail(Errc::not_cycle_algebra, "lift requires a cycle sequence");
    if (t < 0) fail(Errc::bad_argument, "lift multiple must be >= 0");
    std::vector<int> out = c_;
    for (int& v : out) v += t * n();
    return validate(std::move(out));
  }

  /// Inverse of parse: "3,3,3,4".
  std::string render() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c_[i]);
    }
    return out;
  }

  friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;

 private:
  AdmissibleSequence(std::vector<int> c, Kind kind, bool self_injective)
      : c_(std::move(c)), kind_(kind), self_injective_(self_injective) {}

  std::vector<int> c_;
  Kind kind_;
  bool self_injective_;
};

inline const char* to_string(Kind k) noexcept { return k == Kind::line ? "line" : "cycle"; }

}  // namespace nakayama
