#pragma once

#include "pg/order_tree.hpp"
#include "pg/pregroup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pg {

/// A P-product: a non-empty sequence of elements, read left to right.
/// The identity element of the group is the one-factor word [1], never an
/// empty sequence.  Words compare by (length, lexicographic on element
/// indices), the order used for canonical forms and deterministic output.
struct Word {
  std::vector<Elem> f;

  Word() = default;
  explicit Word(std::vector<Elem> factors) : f(std::move(factors)) {}
  Word(std::initializer_list<Elem>) = delete;  // force explicit vector at call sites

  std::size_t size() const { return f.size(); }
  bool operator==(const Word& o) const { return f == o.f; }
  bool operator<(const Word& o) const {
    if (f.size() != o.f.size()) return f.size() < o.f.size();
    return f < o.f;
  }
};

inline Word word_of(std::vector<Elem> factors) { return Word(std::move(factors)); }

/// The conjugating sequence a_1..a_{n-1} that exhibits two reduced products
/// as the same group element (a_0 = a_n = 1 are implicit).
struct Interleaver {
  std::vector<Elem> a;
};

enum class Strategy { leftmost, rightmost, random };

struct LyndonIssue {
  std::string clause;  // which probe clause failed
  Word g, h, k;        // k only used by the triangle clause
  long detail = 0;     // doubled value of the offending quantity
};

struct LyndonReport {
  std::size_t pairs = 0, triples = 0;
  std::vector<LyndonIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Arithmetic in the universal group of a fixed table.  Construction
/// precomputes B_P, the P6 verdict (which bounds interleaver searches) and
/// the order diagram.  Instances are immutable and safe to share between
/// threads.
class Universe {
 public:
  explicit Universe(Pregroup p);

  const Pregroup& pregroup() const { return p_; }
  const std::vector<Elem>& bp() const { return bp_; }
  bool in_bp(Elem x) const { return in_bp_[x]; }
  bool p6_holds() const { return p6_; }
  const OrderTree& tree() const { return tree_; }

  /// Combine adjacent defined pairs until none remains.  All strategies
  /// produce a word of the same length representing the same element;
  /// `seed` only matters for Strategy::random.
  Word reduce(const Word& w, Strategy s = Strategy::leftmost,
              std::uint64_t seed = 0) const;

  bool is_reduced(const Word& w) const;

  /// Concatenate and reduce.  Inputs need not be reduced.
  Word multiply(const Word& u, const Word& v) const;

  /// Reverse with factorwise inverses; keeps reduced words reduced.
  Word invert(const Word& u) const;

  /// Interleaver search between two reduced products, or nullopt when they
  /// represent different elements.  Candidates range over B_P when P6
  /// holds and over all of P otherwise.  Throws std::invalid_argument on
  /// unreduced input.
  std::optional<Interleaver> equivalent(const Word& u, const Word& v) const;

  /// Lexicographically least member of the equivalence class of a reduced
  /// product.  Idempotent and constant on classes.
  Word canonical(const Word& u) const;

  /// Every member of the equivalence class, sorted.  `cap` bounds the
  /// number of search nodes (throws std::runtime_error when exceeded).
  std::vector<Word> enumerate_class(const Word& u, std::size_t cap = 1 << 20) const;

  /// Word problem for arbitrary (not necessarily reduced) products.
  bool equal(const Word& u, const Word& v) const;

  /// Length by the reduced-factor count: n when n > 1, else 0 or 1
  /// depending on membership of the single factor in B_P.
  int chiswell_length(const Word& reduced) const;

  /// Based length from the order diagram: sum of class distances between
  /// consecutive inverse/successor pairs, padded with the identity at both
  /// ends.  Throws TreeError when the diagram is not a tree.
  long tree_length(const Word& reduced) const;

  /// Distinct elements with reduced length <= max_len as canonical forms,
  /// sorted by (length, lex).  Throws std::runtime_error when more than
  /// `budget` elements would be produced.
  std::vector<Word> enumerate_elements(int max_len,
                                       std::size_t budget = 200000) const;

  /// Check the length-function laws on the closure of a sample of products:
  /// l(1) = 0, inverse invariance, non-negativity of c and the triangle
  /// comparison over all pairs/triples drawn from the sample.
  LyndonReport lyndon_probe(const std::vector<Word>& sample,
                            std::size_t max_issues = 16) const;

  Word parse_word(std::string_view text) const;
  std::string print_word(const Word& w) const;

 private:
  Pregroup p_;
  std::vector<Elem> bp_;
  std::vector<bool> in_bp_;
  bool p6_ = false;
  OrderTree tree_;
  std::vector<std::vector<int>> tree_dist_;  // empty when not a tree
  std::string tree_err_;
  std::vector<Elem> cands_;  // interleaver candidates: B_P under P6, else all

  std::optional<Elem> triple(Elem x, Elem y, Elem z) const;
  const std::vector<Elem>& candidates() const;
};

}  // namespace pg
