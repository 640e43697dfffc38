#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcarr {

// Darts are indices into the sigma/alpha permutation arrays.  A simple
// arrangement with v crossings has exactly 4v darts.
using Dart = uint32_t;

enum class Err {
  NotDegree4,
  NotInvolution,
  NotSpherical,
  PairCrossesMoreThanTwice,
  Disconnected,
  WouldDisconnect,
  NotSimpleWiring,
  BudgetExceeded,
  DegenerateScene,
  PairNotCrossing,
  Degenerate,
  PrecondViolated,
  ParseError,
  IoError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

// Rotation system on the sphere: sigma is the counterclockwise rotation of
// darts around their crossing, alpha pairs the two darts of each pseudo-arc.
struct CombinatorialMap {
  std::vector<Dart> sigma;
  std::vector<Dart> alpha;

  size_t dart_count() const { return sigma.size(); }
  bool operator==(const CombinatorialMap& o) const = default;
};

struct PropertyFlags {
  bool connected = false;
  bool intersecting = false;
  bool digon_free = false;
  bool cylindrical = false;
  bool great = false;
  // cell_vector[k] = number of faces with k crossings on the boundary.
  // Entries 0 and 1 are always zero for valid arrangements.
  std::vector<int> cell_vector;

  int cells(int k) const {
    return k >= 0 && k < (int)cell_vector.size() ? cell_vector[k] : 0;
  }
};

enum class TripleType { Krupp, NonKrupp, Chain, DisjointContaining };

// A validated connected arrangement.  Circles, vertices and faces are all
// derived from the map; the struct is immutable after construction.
struct Arrangement {
  CombinatorialMap map;
  int n = 0;  // number of pseudocircles

  // circles[c] is the dart cycle of one directed traversal of circle c.
  std::vector<std::vector<Dart>> circles;
  std::vector<int> circle_of;  // dart -> circle id
  std::vector<int> vertex_of;  // dart -> sigma-orbit id
  std::vector<int> face_of;    // dart -> phi-orbit id
  std::vector<Dart> vertex_dart;  // vertex -> one incident dart
  int vertex_count = 0;
  int face_count = 0;
  std::vector<uint8_t> pair_crossing;  // n*n matrix, entries 0 or 2
  PropertyFlags flags;

  int dart_count() const { return (int)map.dart_count(); }
  bool pair_crosses(int i, int j) const { return pair_crossing[i * n + j] != 0; }
  // The two circles meeting at a vertex, via any dart of the vertex.
  std::array<int, 2> circles_at_vertex(int v) const;
};

// Face permutation: phi(d) = sigma(alpha(d)).  Its orbits are the faces.
inline Dart phi(const CombinatorialMap& m, Dart d) { return m.sigma[m.alpha[d]]; }
// Straight-through successor along a pseudocircle.
inline Dart circle_next(const CombinatorialMap& m, Dart d) {
  return m.sigma[m.sigma[m.alpha[d]]];
}

// Checks every invariant (degree 4, involution, sphericity via Euler's
// formula, pairwise crossing counts, connectivity) and derives circles,
// faces and property flags.  Throws Error on any violation.
Arrangement validate(const CombinatorialMap& map);

PropertyFlags properties(const Arrangement& arr);

// Classifies the sub-arrangement induced by three distinct circles.
TripleType triple_type(const Arrangement& arr, int i, int j, int k);

bool is_great(const Arrangement& arr);

// Sub-arrangement induced by all circles except i.  Throws WouldDisconnect
// if the rest does not form a connected arrangement.
Arrangement delete_circle(const Arrangement& arr, int i);

// Sub-arrangement induced by the given subset of circles; nullopt-like
// behaviour is expressed by throwing WouldDisconnect/Disconnected.
Arrangement restrict_to(const Arrangement& arr, const std::vector<int>& keep);

// Editable intermediate form: per-circle cyclic vertex sequences plus the
// counterclockwise rotation at every vertex.  All local surgeries (flips,
// insertions, deletions) are edits of this form followed by build().
struct CircleListRep {
  struct Slot {
    int circle = -1;
    int dir = 0;  // +1 toward next vertex in seq, -1 toward previous
    bool operator==(const Slot&) const = default;
  };

  int n = 0;
  std::vector<std::vector<int>> seq;          // circle -> cyclic vertex ids
  std::vector<std::array<Slot, 4>> rot;       // vertex -> ccw rotation

  CombinatorialMap build() const;
  static CircleListRep from(const Arrangement& arr);
};

}  // namespace pcarr
