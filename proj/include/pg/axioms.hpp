#pragma once

#include "pg/pregroup.hpp"

#include <string>
#include <vector>

namespace pg {

class Ball;

enum class Axiom { P1, P2, P3, P4, P5, P6, P6p, A1, A2, A3, A4, A5, H0 };

std::string axiom_name(Axiom a);

/// Accepts the printed names plus "p6p"/"p6prime" for P6'.  Case-insensitive.
/// Throws std::invalid_argument on anything else.
Axiom axiom_from(std::string_view name);

/// Every tag in declaration order; p_axioms() is the P1..P6' prefix.
const std::vector<Axiom>& all_axioms();
const std::vector<Axiom>& p_axioms();

struct AxiomParams {
  // Bounds for the A2 scan (required for A2): sequences of length <= a2_max_len
  // with exponent tuples in [1, a2_max_exp]^n.
  int a2_max_len = 0;
  int a2_max_exp = 0;
  // When set, H0 additionally reports C0 = max word length of B_P over the
  // ball's generating set.
  const Ball* ball = nullptr;
};

struct AxiomVerdict {
  Axiom axiom;
  bool holds = true;
  std::vector<std::string> witness;  // non-empty iff holds is false
  std::string note;
};

/// Decide one axiom by exhaustive scan over its finite quantifier ranges.
/// Powers for A1/A3 are iterated left-associatively and stop at the first
/// undefined step or repeated value (at most |P| steps).  A2 is a bounded
/// heuristic and says so in its note.  A4 skips the conjugated element
/// a = 1, whose conjugate is trivially in B_P.  Throws std::invalid_argument
/// when A2 bounds are missing.
AxiomVerdict check_axiom(const Pregroup& p, Axiom which,
                         const AxiomParams& params = {});

/// Re-check a verdict's witness against the axiom's definition: true iff the
/// witness reproduces the violation on this table.  Accepts exactly the
/// witness vectors produced by check_axiom.
bool verify_witness(const Pregroup& p, Axiom which,
                    const std::vector<std::string>& witness);

}  // namespace pg
