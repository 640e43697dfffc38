#include "pcarr/wiring.hpp"

#include <algorithm>

namespace pcarr {

Arrangement from_wiring(int n, const std::vector<int>& transpositions) {
  if (n < 2) throw Error(Err::NotSimpleWiring, "need at least two pseudolines");
  const size_t m = transpositions.size();
  if (m != (size_t)n * (n - 1) / 2)
    throw Error(Err::NotSimpleWiring, "swap count must be n(n-1)/2");

  // Check simplicity while running the diagram once.
  {
    std::vector<int> wire_at(n);
    for (int i = 0; i < n; ++i) wire_at[i] = i;
    std::vector<uint8_t> crossed((size_t)n * n, 0);
    for (int p : transpositions) {
      if (p < 1 || p > n - 1)
        throw Error(Err::NotSimpleWiring, "swap position out of range");
      int a = wire_at[p - 1], b = wire_at[p];
      uint8_t& c = crossed[(size_t)std::min(a, b) * n + std::max(a, b)];
      if (c) throw Error(Err::NotSimpleWiring, "a pair of pseudolines swaps twice");
      c = 1;
      std::swap(wire_at[p - 1], wire_at[p]);
    }
  }

  // Glue the diagram with its vertically mirrored copy: the combined event
  // sequence runs around a cylinder, and each wire closes up into a
  // pseudocircle crossing every other wire exactly twice.
  std::vector<int> events(transpositions);
  for (int p : transpositions) events.push_back(n - p);

  CircleListRep rep;
  rep.n = n;
  rep.seq.resize(n);
  rep.rot.resize(events.size());

  std::vector<int> wire_at(n);
  for (int i = 0; i < n; ++i) wire_at[i] = i;
  for (size_t k = 0; k < events.size(); ++k) {
    int p = events[k];
    int lower = wire_at[p - 1];  // enters on track p, leaves on track p+1
    int upper = wire_at[p];      // enters on track p+1, leaves on track p
    rep.seq[lower].push_back((int)k);
    rep.seq[upper].push_back((int)k);
    // Rising strand toward NE, falling strand toward SE; counterclockwise
    // around the crossing: rise-out, fall-in, rise-in, fall-out.
    rep.rot[k] = {CircleListRep::Slot{lower, +1}, CircleListRep::Slot{upper, -1},
                  CircleListRep::Slot{lower, -1}, CircleListRep::Slot{upper, +1}};
    std::swap(wire_at[p - 1], wire_at[p]);
  }
  return validate(rep.build());
}

namespace {

struct WiringDfs {
  int n;
  std::vector<int> word;
  std::vector<int> wire_at;
  std::vector<uint8_t> crossed;
  const std::function<void(const std::vector<int>&)>* fn;

  bool can_place(int p) const {
    // Lexicographically minimal in its commutation class: never place a
    // letter that commutes with its predecessor and is smaller.
    if (!word.empty() && p <= word.back() - 2) return false;
    int a = wire_at[p - 1], b = wire_at[p];
    return !crossed[(size_t)std::min(a, b) * n + std::max(a, b)];
  }

  void go() {
    if ((int)word.size() == n * (n - 1) / 2) {
      (*fn)(word);
      return;
    }
    for (int p = 1; p <= n - 1; ++p) {
      if (!can_place(p)) continue;
      int a = wire_at[p - 1], b = wire_at[p];
      crossed[(size_t)std::min(a, b) * n + std::max(a, b)] = 1;
      std::swap(wire_at[p - 1], wire_at[p]);
      word.push_back(p);
      go();
      word.pop_back();
      std::swap(wire_at[p - 1], wire_at[p]);
      crossed[(size_t)std::min(a, b) * n + std::max(a, b)] = 0;
    }
  }
};

}  // namespace

void enumerate_simple_wirings(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 2) return;
  WiringDfs dfs;
  dfs.n = n;
  dfs.wire_at.resize(n);
  for (int i = 0; i < n; ++i) dfs.wire_at[i] = i;
  dfs.crossed.assign((size_t)n * n, 0);
  dfs.fn = &fn;
  dfs.go();
}

}  // namespace pcarr
