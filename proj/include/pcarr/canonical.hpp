#pragma once

#include <string>
#include <vector>

#include "pcarr/map.hpp"

namespace pcarr {

// Total-order serialization of an arrangement, invariant under dart
// relabeling and under reflection.  Text format (bit-exact):
//   PC1:n=<n>:<s0>.<s1>...
// where the integer sequence is the lexicographically smallest BFS flag code
// over all 8v rooted traversals (4v root darts, both orientations).  From
// each popped dart d the traversal visits sigma(d) then alpha(d); the code
// lists label(alpha(d)) followed by label(sigma(d)) for every dart in label
// order.
struct CanonicalCode {
  std::string text;

  bool operator==(const CanonicalCode&) const = default;
  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Arrangement& arr);

// Order of the automorphism group of the embedded map, orientation-reversing
// maps included.
int automorphism_order(const Arrangement& arr);

// Both at once (they share the scan over rooted traversals).
std::pair<CanonicalCode, int> canonical_code_and_order(const Arrangement& arr);

// Reconstructs the arrangement encoded by a canonical code (or any valid
// code text).  Throws ParseError / validation errors.
Arrangement parse_code(const std::string& text);

// Dart relabeling by a permutation; used by the invariance property tests.
CombinatorialMap relabel(const CombinatorialMap& m, const std::vector<Dart>& perm);

// Orientation reversal (sigma replaced by its inverse).
CombinatorialMap mirror(const CombinatorialMap& m);

}  // namespace pcarr
