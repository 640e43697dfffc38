#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcarr/canonical.hpp"
#include "pcarr/map.hpp"

namespace pcarr {

// One result per triangular face: the arrangement with that triangle flipped
// across the opposite crossing.  Face ids refer to the input arrangement.
std::vector<std::pair<int, Arrangement>> triangle_flips(const Arrangement& arr);

struct DigonSite {
  enum Kind { Collapse, Create };
  Kind kind;
  int face;                    // face id in the source arrangement
  int dart_a = -1, dart_b = -1;  // boundary darts (Create: push a through b)
};

struct DigonFlipStats {
  int emptied_circle = 0;    // collapse would leave a crossing-free circle
  int disconnected = 0;      // result not connected
  int invalid = 0;           // any other validation failure
  int not_involutive = 0;    // creation that does not collapse back
};

// Digon collapse moves (one per digon face, when legal) plus digon creation
// moves (one per ordered pair of boundary arcs of a face on distinct disjoint
// circles).  Invalid candidates are filtered; stats counts the reasons.
std::vector<std::pair<DigonSite, Arrangement>> digon_flips(const Arrangement& arr,
                                                           DigonFlipStats* stats = nullptr);

enum class MoveSet { TriangleOnly, TriangleAndDigon };

struct FlipGraphOptions {
  MoveSet moves = MoveSet::TriangleOnly;
  std::function<bool(const Arrangement&)> class_filter;  // both endpoints in class
  size_t max_nodes = (size_t)-1;
  double max_seconds = -1;  // <0: unlimited
  bool record_edges = true;
};

struct FlipGraph {
  std::vector<std::string> codes;  // node id -> canonical code text
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> edges;  // deduplicated, i < j
  bool connected(size_t expected_nodes) const { return codes.size() == expected_nodes; }
  bool is_connected_graph() const;
};

// BFS closure of the seeds under the chosen moves, keeping only results that
// satisfy class_filter.  Throws BudgetExceeded when a cap is hit.
FlipGraph flip_graph(const std::vector<Arrangement>& seeds, const FlipGraphOptions& opt);

}  // namespace pcarr
