#pragma once

#include <functional>
#include <vector>

#include "pcarr/map.hpp"

namespace pcarr {

// Builds the great-pseudocircle arrangement obtained by gluing a simple
// Euclidean wiring diagram of n pseudolines with its mirrored copy.
// transpositions lists the swap positions (1-based, position p swaps the
// wires on tracks p and p+1) from left to right; every pair of wires must
// swap exactly once.  Throws NotSimpleWiring otherwise.
Arrangement from_wiring(int n, const std::vector<int>& transpositions);

// Calls fn once per simple wiring diagram of n pseudolines, up to
// commutation of swaps at distance >= 2 (one lexicographically minimal
// representative word per commutation class).
void enumerate_simple_wirings(int n, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace pcarr
