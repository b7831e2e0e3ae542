#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace pg {

/// Index of an element in a Pregroup's carrier.  The declaration order of
/// elements doubles as the canonical total order used for tie-breaking,
/// lexicographic word comparison and deterministic output.
using Elem = int;

/// Error raised while reading the pregroup file format.  `line` is 1-based;
/// 0 means the error is not tied to a single line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg
                                     : msg),
        line(line_) {}
};

/// A finite partial multiplication table: a carrier with identity, an
/// involutive inverse map and a partial product.  The carrier is immutable
/// after construction; "corrupted" variants for negative tests are produced
/// by `with_entry`, which returns a structurally valid copy without
/// re-running any closure or conflict checks.  Whether the table satisfies
/// the pregroup axioms is the business of the checkers in axioms.hpp.
class Pregroup {
 public:
  /// Build from declared entries.  Inserts the identity and inverse rows
  /// implied by the identity/inverse maps and rejects entries that conflict
  /// with them or with each other.  `entries` carries (x, y, z, line) with
  /// line used only for error reporting (pass 0 when synthesizing).
  static Pregroup make(std::string name, std::vector<std::string> labels,
                       Elem identity, std::vector<Elem> inv,
                       const std::vector<std::array<Elem, 4>>& entries);

  /// Build from a complete dense table (size n*n, -1 = undefined) with only
  /// structural validation: ranges, label uniqueness, involutive inv.
  static Pregroup raw(std::string name, std::vector<std::string> labels,
                      Elem identity, std::vector<Elem> inv,
                      std::vector<Elem> table);

  /// Read the `pregroup ... end` file format.  Throws ParseError.
  static Pregroup parse(std::string_view text);

  /// Inverse of parse: parse(serialize(p)) reconstructs p exactly.
  std::string serialize() const;

  const std::string& name() const { return name_; }
  int size() const { return n_; }
  Elem identity() const { return identity_; }
  Elem inverse(Elem x) const { return inv_[x]; }
  bool defined(Elem x, Elem y) const { return table_[x * n_ + y] >= 0; }

  /// Product of a pair in D.  Precondition: defined(x, y).
  Elem product(Elem x, Elem y) const { return table_[x * n_ + y]; }

  std::optional<Elem> try_product(Elem x, Elem y) const {
    Elem z = table_[x * n_ + y];
    if (z < 0) return std::nullopt;
    return z;
  }

  const std::string& label(Elem x) const { return labels_[x]; }
  std::optional<Elem> element(std::string_view label) const;

  /// Number of defined pairs |D|.
  std::size_t table_entries() const;

  /// Copy with one table cell overwritten (or erased when z is empty).
  /// No closure re-runs: the point is to inject single-entry corruption.
  Pregroup with_entry(Elem x, Elem y, std::optional<Elem> z) const;

  /// Copy under a relabeling of positions: new_order[i] = old index that
  /// moves to position i.  Keeps the same abstract table; changes the
  /// canonical element order.  new_order must be a permutation fixing
  /// nothing in particular (the identity may move too).
  Pregroup permuted(const std::vector<int>& new_order) const;

  bool operator==(const Pregroup& o) const {
    return name_ == o.name_ && labels_ == o.labels_ && identity_ == o.identity_ &&
           inv_ == o.inv_ && table_ == o.table_;
  }

 private:
  Pregroup() = default;
  std::string name_;
  std::vector<std::string> labels_;
  Elem identity_ = 0;
  std::vector<Elem> inv_;
  std::vector<Elem> table_;  // dense n*n, -1 = undefined
  int n_ = 0;
};

/// B_P: the elements b such that z*b and b*z are defined for every z.
/// Sorted in canonical order.  For a table satisfying the pregroup axioms
/// this is a subgroup of P.
std::vector<Elem> bp(const Pregroup& p);

/// L(x) = { a : (a, x) in D }, sorted in canonical order.
std::vector<Elem> left_set(const Pregroup& p, Elem x);

/// Scan for a violation of the interleaving axiom: x*y undefined, x*a and
/// a^-1*y defined, yet a outside B_P.  Returns true when no violation
/// exists; otherwise fills *witness with the first (x, a, y) found.
bool scan_p6(const Pregroup& p, std::array<Elem, 3>* witness = nullptr);

/// Same for the left-handed variant: x*y undefined, (a*x)*y defined, yet
/// a*x outside B_P.  Witness order is (a, x, y).
bool scan_p6_prime(const Pregroup& p, std::array<Elem, 3>* witness = nullptr);

}  // namespace pg
