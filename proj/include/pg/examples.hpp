#pragma once

#include "pg/pregroup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pg {

/// A finite group given by labels and a dense total multiplication table
/// (row-major, table[x*n+y] = xy).  Identity must sit at index `identity`.
struct GroupData {
  std::vector<std::string> labels;
  std::vector<int> table;
  int identity = 0;
  int size() const { return static_cast<int>(labels.size()); }
  int mul(int x, int y) const { return table[x * size() + y]; }
};

GroupData group_cyclic(int n, char letter = 'a');
GroupData group_klein4();
GroupData group_s3();

/// Total-table pregroup of a finite group.  Validates the group axioms.
Pregroup make_group(std::string name, const GroupData& g);

/// Free pregroup of the given rank: identity, generators and their formal
/// inverses, with only the forced products defined.
Pregroup make_free(int rank);

/// Union of two finite groups glued along an identified common subgroup:
/// sub1/sub2 list the subgroup's elements in both factors, matched by
/// position (the gluing isomorphism).  A product is defined exactly when
/// both arguments land in a common factor.  Throws ParseError
/// ("amalgam embedding mismatch ...") unless the identified sets are
/// isomorphic subgroups containing both identities.
Pregroup make_amalgam(std::string name, const GroupData& g1, const GroupData& g2,
                      const std::vector<int>& sub1, const std::vector<int>& sub2);

/// Z_m and Z_n glued along their common cyclic subgroup of order k.
Pregroup make_amalgam_cyclic(int m, int n, int k);

/// The slice H u Ht u t^-1 H of an HNN extension of the finite group H with
/// associated subgroups A ~ B (phi matches a_elems[i] with b_elems[i]).
/// Products are defined when the result lands back in the slice.  When A is
/// proper the resulting table is a pregroup whose interleaving axiom P6
/// fails, which makes this the fuzzing source of valid-but-non-P6 tables.
Pregroup make_hnn_slice(std::string name, const GroupData& h,
                        const std::vector<int>& a_elems,
                        const std::vector<int>& b_elems);

/// The 12-element instance over Z2 x Z2 with A = <p>, B = <q>.
Pregroup make_hnn_slice_klein();

/// Seeded random pregroup that always satisfies the pregroup axioms:
/// rotates through permuted free-involution tables, cyclic amalgams and
/// HNN slices, with the declaration order shuffled.
Pregroup make_random_valid(std::uint64_t seed, int size);

/// Seeded random raw table for negative tests: a random involution plus
/// forced identity/inverse rows, then random extra entries and (sometimes)
/// random corruption of forced rows.  No axiom is guaranteed.
Pregroup make_random_raw(std::uint64_t seed, int size);

/// Dispatcher for the CLI: args like {"free","2"}, {"group","s3"},
/// {"group","z","6"}, {"amalgam","4","4","2"}, {"hnn-slice"},
/// {"random","7","12"}, {"random","7","12","raw"}.
Pregroup make_example(const std::vector<std::string>& args);

}  // namespace pg
