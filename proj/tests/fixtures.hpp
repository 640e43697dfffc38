#pragma once

// Hand-transcribed reference maps used as independent oracles.  Each one was
// derived on paper from a concrete drawing: circle-by-circle crossing orders
// plus the counterclockwise rotation at every crossing (tangent directions).
// They deliberately do not go through any extraction or construction code.

#include "pcarr/map.hpp"

namespace pcarr_fixtures {

using pcarr::Arrangement;
using pcarr::CircleListRep;
using S = pcarr::CircleListRep::Slot;

// Two unit-ish circles crossing twice.  Vertices: 0 = top, 1 = bottom.
inline Arrangement two_circle() {
  CircleListRep r;
  r.n = 2;
  r.seq = {{0, 1}, {0, 1}};
  r.rot = {
      {S{0, +1}, S{1, +1}, S{0, -1}, S{1, -1}},
      {S{0, +1}, S{1, -1}, S{0, -1}, S{1, +1}},
  };
  return pcarr::validate(r.build());
}

// Venn position: circles A=(0,0,1), B=(1,0,1), C=(1/2,sqrt(3)/2,1).
// Vertices: 0 = AB top, 1 = AB bottom, 2 = AC right, 3 = AC left,
// 4 = BC right, 5 = BC left.
inline Arrangement krupp() {
  CircleListRep r;
  r.n = 3;
  r.seq = {
      {2, 0, 3, 1},
      {4, 0, 5, 1},
      {4, 3, 5, 2},
  };
  r.rot = {
      {S{0, +1}, S{1, +1}, S{0, -1}, S{1, -1}},
      {S{0, +1}, S{1, -1}, S{0, -1}, S{1, +1}},
      {S{0, +1}, S{2, -1}, S{0, -1}, S{2, +1}},
      {S{0, +1}, S{2, +1}, S{0, -1}, S{2, -1}},
      {S{1, +1}, S{2, -1}, S{1, -1}, S{2, +1}},
      {S{1, +1}, S{2, +1}, S{1, -1}, S{2, -1}},
  };
  return pcarr::validate(r.build());
}

// Collinear centers: A=(0,0,3), B=(2,0,3), C=(4,0,3), all pairs crossing.
// Vertices: 0 = AB top, 1 = AB bottom, 2 = BC top, 3 = BC bottom,
// 4 = AC top, 5 = AC bottom.
inline Arrangement nonkrupp() {
  CircleListRep r;
  r.n = 3;
  r.seq = {
      {4, 0, 1, 5},
      {2, 0, 1, 3},
      {2, 4, 5, 3},
  };
  r.rot = {
      {S{0, +1}, S{1, +1}, S{0, -1}, S{1, -1}},
      {S{0, +1}, S{1, -1}, S{0, -1}, S{1, +1}},
      {S{1, +1}, S{2, +1}, S{1, -1}, S{2, -1}},
      {S{1, +1}, S{2, -1}, S{1, -1}, S{2, +1}},
      {S{0, +1}, S{2, +1}, S{0, -1}, S{2, -1}},
      {S{0, +1}, S{2, -1}, S{0, -1}, S{2, +1}},
  };
  return pcarr::validate(r.build());
}

// A=(0,0,2), B=(3,0,2), C=(6,0,2): A-B and B-C cross, A-C disjoint.
// Vertices: 0 = AB top, 1 = AB bottom, 2 = BC top, 3 = BC bottom.
inline Arrangement three_chain() {
  CircleListRep r;
  r.n = 3;
  r.seq = {
      {0, 1},
      {2, 0, 1, 3},
      {2, 3},
  };
  r.rot = {
      {S{0, +1}, S{1, +1}, S{0, -1}, S{1, -1}},
      {S{0, +1}, S{1, -1}, S{0, -1}, S{1, +1}},
      {S{1, +1}, S{2, +1}, S{1, -1}, S{2, -1}},
      {S{1, +1}, S{2, -1}, S{1, -1}, S{2, +1}},
  };
  return pcarr::validate(r.build());
}

}  // namespace pcarr_fixtures
