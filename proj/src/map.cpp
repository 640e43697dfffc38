#include "pcarr/map.hpp"

#include <algorithm>
#include <numeric>

namespace pcarr {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotDegree4: return "NotDegree4";
    case Err::NotInvolution: return "NotInvolution";
    case Err::NotSpherical: return "NotSpherical";
    case Err::PairCrossesMoreThanTwice: return "PairCrossesMoreThanTwice";
    case Err::Disconnected: return "Disconnected";
    case Err::WouldDisconnect: return "WouldDisconnect";
    case Err::NotSimpleWiring: return "NotSimpleWiring";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::DegenerateScene: return "DegenerateScene";
    case Err::PairNotCrossing: return "PairNotCrossing";
    case Err::Degenerate: return "Degenerate";
    case Err::PrecondViolated: return "PrecondViolated";
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
  }
  return "Unknown";
}

std::array<int, 2> Arrangement::circles_at_vertex(int v) const {
  if (v < 0 || v >= vertex_count)
    throw Error(Err::PrecondViolated, "vertex id out of range");
  Dart d = vertex_dart[v];
  return {circle_of[d], circle_of[map.sigma[d]]};
}

static bool is_permutation_of_darts(const std::vector<Dart>& p) {
  std::vector<uint8_t> seen(p.size(), 0);
  for (Dart q : p) {
    if (q >= p.size() || seen[q]) return false;
    seen[q] = 1;
  }
  return true;
}

Arrangement validate(const CombinatorialMap& map) {
  const size_t nd = map.sigma.size();
  if (nd == 0 || nd % 4 != 0 || map.alpha.size() != nd)
    throw Error(Err::NotDegree4, "dart count must be a positive multiple of 4");
  if (!is_permutation_of_darts(map.sigma))
    throw Error(Err::NotDegree4, "sigma is not a permutation");
  if (!is_permutation_of_darts(map.alpha))
    throw Error(Err::NotInvolution, "alpha is not a permutation");
  for (Dart d = 0; d < nd; ++d) {
    if (map.alpha[d] == d || map.alpha[map.alpha[d]] != d)
      throw Error(Err::NotInvolution, "alpha is not a fixed-point-free involution");
  }

  Arrangement arr;
  arr.map = map;

  // sigma orbits = crossings, all of degree 4.
  arr.vertex_of.assign(nd, -1);
  int nv = 0;
  for (Dart d = 0; d < nd; ++d) {
    if (arr.vertex_of[d] >= 0) continue;
    Dart e = d;
    int len = 0;
    do {
      arr.vertex_of[e] = nv;
      e = map.sigma[e];
      ++len;
    } while (e != d);
    if (len != 4) throw Error(Err::NotDegree4, "sigma orbit of size != 4");
    arr.vertex_dart.push_back(d);
    ++nv;
  }
  arr.vertex_count = nv;

  // No loop arcs: a pseudo-arc never returns to its own crossing.
  for (Dart d = 0; d < nd; ++d) {
    if (arr.vertex_of[map.alpha[d]] == arr.vertex_of[d])
      throw Error(Err::PairCrossesMoreThanTwice, "loop arc at a crossing");
  }

  // phi orbits = faces; Euler with e = 2v forces f = v + 2 on the sphere.
  arr.face_of.assign(nd, -1);
  int nf = 0;
  for (Dart d = 0; d < nd; ++d) {
    if (arr.face_of[d] >= 0) continue;
    Dart e = d;
    do {
      arr.face_of[e] = nf;
      e = phi(map, e);
    } while (e != d);
    ++nf;
  }
  arr.face_count = nf;
  if (nf != nv + 2)
    throw Error(Err::NotSpherical, "Euler formula v - e + f = 2 fails");

  // Orbits of the straight-through successor; they must pair up via alpha
  // into opposite traversals of the same closed curve.
  std::vector<int> orbit_of(nd, -1);
  std::vector<std::vector<Dart>> orbits;
  for (Dart d = 0; d < nd; ++d) {
    if (orbit_of[d] >= 0) continue;
    std::vector<Dart> cyc;
    Dart e = d;
    do {
      orbit_of[e] = (int)orbits.size();
      cyc.push_back(e);
      e = circle_next(map, e);
    } while (e != d);
    orbits.push_back(std::move(cyc));
  }
  if (orbits.size() % 2 != 0)
    throw Error(Err::NotSpherical, "odd number of directed circle traversals");

  std::vector<int> mate(orbits.size(), -1);
  for (size_t o = 0; o < orbits.size(); ++o) {
    int m = orbit_of[map.alpha[orbits[o][0]]];
    if (m == (int)o)
      throw Error(Err::NotSpherical, "one-sided circle traversal");
    if (mate[o] >= 0 && mate[o] != m)
      throw Error(Err::NotSpherical, "inconsistent circle pairing");
    mate[o] = m;
    for (Dart d : orbits[o]) {
      if (orbit_of[map.alpha[d]] != m)
        throw Error(Err::NotSpherical, "inconsistent circle pairing");
    }
  }

  arr.circle_of.assign(nd, -1);
  for (size_t o = 0; o < orbits.size(); ++o) {
    if (mate[o] < (int)o) continue;  // keep one direction per circle
    int c = (int)arr.circles.size();
    for (Dart d : orbits[o]) arr.circle_of[d] = c;
    for (Dart d : orbits[mate[o]]) arr.circle_of[d] = c;
    arr.circles.push_back(orbits[o]);
  }
  arr.n = (int)arr.circles.size();

  // Each crossing is visited by exactly two distinct circles, and a circle
  // visits no crossing twice.
  std::vector<std::array<int, 2>> vcirc(nv, {-1, -1});
  for (Dart d = 0; d < nd; ++d) {
    int v = arr.vertex_of[d];
    int c0 = arr.circle_of[d];
    int c1 = arr.circle_of[map.sigma[d]];
    if (c0 == c1)
      throw Error(Err::PairCrossesMoreThanTwice, "pseudocircle crosses itself");
    vcirc[v] = {std::min(c0, c1), std::max(c0, c1)};
  }
  for (int c = 0; c < arr.n; ++c) {
    std::vector<uint8_t> seen(nv, 0);
    for (Dart d : arr.circles[c]) {
      int v = arr.vertex_of[d];
      if (seen[v])
        throw Error(Err::PairCrossesMoreThanTwice, "circle visits a crossing twice");
      seen[v] = 1;
    }
  }

  arr.pair_crossing.assign((size_t)arr.n * arr.n, 0);
  for (int v = 0; v < nv; ++v) {
    auto [a, b] = vcirc[v];
    uint8_t& cnt = arr.pair_crossing[(size_t)a * arr.n + b];
    if (cnt == 2)
      throw Error(Err::PairCrossesMoreThanTwice, "pair crosses more than twice");
    ++cnt;
    arr.pair_crossing[(size_t)b * arr.n + a] = cnt;
  }
  for (int a = 0; a < arr.n; ++a)
    for (int b = a + 1; b < arr.n; ++b) {
      uint8_t c = arr.pair_crossing[(size_t)a * arr.n + b];
      if (c != 0 && c != 2)
        throw Error(Err::PairCrossesMoreThanTwice, "pair crosses an odd number of times");
    }

  // Connectivity of the arrangement graph = connectivity of darts under
  // sigma and alpha.
  {
    std::vector<uint8_t> seen(nd, 0);
    std::vector<Dart> stack = {0};
    seen[0] = 1;
    size_t cnt = 0;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      ++cnt;
      for (Dart e : {map.sigma[d], map.alpha[d]}) {
        if (!seen[e]) {
          seen[e] = 1;
          stack.push_back(e);
        }
      }
    }
    if (cnt != nd) throw Error(Err::Disconnected, "arrangement graph is disconnected");
  }

  arr.flags = properties(arr);
  return arr;
}

PropertyFlags properties(const Arrangement& arr) {
  PropertyFlags f;
  f.connected = true;

  f.intersecting = true;
  for (int a = 0; a < arr.n && f.intersecting; ++a)
    for (int b = a + 1; b < arr.n; ++b)
      if (!arr.pair_crosses(a, b)) {
        f.intersecting = false;
        break;
      }

  std::vector<int> face_size(arr.face_count, 0);
  for (Dart d = 0; d < arr.map.dart_count(); ++d) ++face_size[arr.face_of[d]];
  int maxk = 0;
  for (int s : face_size) maxk = std::max(maxk, s);
  f.cell_vector.assign(maxk + 1, 0);
  for (int s : face_size) ++f.cell_vector[s];
  f.digon_free = f.cells(2) == 0;

  // Side vectors: each circle 2-colors the faces; cylindrical iff two faces
  // have componentwise opposite colors.  Colors are propagated over the dual
  // graph, flipping the bit of the arc's circle when stepping across it.
  {
    const int n = arr.n;
    std::vector<std::vector<Dart>> fdarts(arr.face_count);
    for (Dart d = 0; d < arr.map.dart_count(); ++d)
      fdarts[arr.face_of[d]].push_back(d);
    std::vector<uint32_t> mask(arr.face_count, 0);
    std::vector<uint8_t> done(arr.face_count, 0);
    std::vector<int> stack = {arr.face_of[0]};
    done[arr.face_of[0]] = 1;
    while (!stack.empty()) {
      int fc = stack.back();
      stack.pop_back();
      for (Dart d : fdarts[fc]) {
        int g = arr.face_of[arr.map.alpha[d]];
        uint32_t m = mask[fc] ^ (1u << arr.circle_of[d]);
        if (!done[g]) {
          done[g] = 1;
          mask[g] = m;
          stack.push_back(g);
        }
      }
    }
    const uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1);
    f.cylindrical = false;
    std::vector<uint32_t> sorted_masks(mask);
    std::sort(sorted_masks.begin(), sorted_masks.end());
    for (uint32_t m : mask) {
      if (std::binary_search(sorted_masks.begin(), sorted_masks.end(), m ^ all)) {
        f.cylindrical = true;
        break;
      }
    }
  }

  f.great = is_great(arr);
  return f;
}

// Cyclic sequence of crossing partners along circle c, restricted to the
// circles in the mask (bit per circle).
static std::vector<int> partner_sequence(const Arrangement& arr, int c, uint32_t mask) {
  std::vector<int> out;
  for (Dart d : arr.circles[c]) {
    int p = arr.circle_of[arr.map.sigma[d]];
    if (mask & (1u << p)) out.push_back(p);
  }
  return out;
}

TripleType triple_type(const Arrangement& arr, int i, int j, int k) {
  if (i == j || j == k || i == k)
    throw Error(Err::PrecondViolated, "triple_type needs distinct circles");
  int crossing_pairs = (int)arr.pair_crosses(i, j) + (int)arr.pair_crosses(j, k) +
                       (int)arr.pair_crosses(i, k);
  if (crossing_pairs <= 1) return TripleType::DisjointContaining;
  if (crossing_pairs == 2) return TripleType::Chain;

  // All three pairs cross: Krupp iff the crossings alternate between the two
  // partners along each circle.  The three per-circle verdicts always agree
  // for valid arrangements; we check them all.
  int alternating = 0, nonalternating = 0;
  const int trip[3] = {i, j, k};
  for (int t = 0; t < 3; ++t) {
    uint32_t mask = (1u << i) | (1u << j) | (1u << k);
    mask &= ~(1u << trip[t]);
    std::vector<int> s = partner_sequence(arr, trip[t], mask);
    if (s.size() != 4)
      throw Error(Err::PrecondViolated, "unexpected crossing count in triple");
    bool alt = s[0] != s[1] && s[1] != s[2] && s[2] != s[3] && s[3] != s[0];
    (alt ? alternating : nonalternating)++;
  }
  if (alternating == 3) return TripleType::Krupp;
  if (nonalternating == 3) return TripleType::NonKrupp;
  throw Error(Err::NotSpherical, "inconsistent triple classification");
}

bool is_great(const Arrangement& arr) {
  if (arr.n < 2) return false;
  for (int a = 0; a < arr.n; ++a)
    for (int b = a + 1; b < arr.n; ++b)
      if (!arr.pair_crosses(a, b)) return false;
  for (int a = 0; a < arr.n; ++a)
    for (int b = a + 1; b < arr.n; ++b)
      for (int c = b + 1; c < arr.n; ++c)
        if (triple_type(arr, a, b, c) != TripleType::Krupp) return false;
  return true;
}

CombinatorialMap CircleListRep::build() const {
  // Dart numbering: circle c, position i has a fore dart (toward position
  // i+1) and a back dart (toward i-1).
  std::vector<size_t> base(n + 1, 0);
  for (int c = 0; c < n; ++c) base[c + 1] = base[c] + 2 * seq[c].size();
  const size_t nd = base[n];

  auto fore = [&](int c, size_t i) -> Dart { return (Dart)(base[c] + 2 * i); };
  auto back = [&](int c, size_t i) -> Dart { return (Dart)(base[c] + 2 * i + 1); };

  CombinatorialMap m;
  m.sigma.assign(nd, 0);
  m.alpha.assign(nd, 0);

  for (int c = 0; c < n; ++c) {
    const size_t len = seq[c].size();
    if (len == 0)
      throw Error(Err::Disconnected, "circle without crossings");
    for (size_t i = 0; i < len; ++i) {
      size_t j = (i + 1) % len;
      m.alpha[fore(c, i)] = back(c, j);
      m.alpha[back(c, j)] = fore(c, i);
    }
  }

  // Position of each vertex on each of its circles.
  std::vector<std::array<std::pair<int, int>, 2>> at(rot.size(),
      {std::make_pair(-1, -1), std::make_pair(-1, -1)});
  for (int c = 0; c < n; ++c) {
    for (size_t i = 0; i < seq[c].size(); ++i) {
      int v = seq[c][i];
      if (v < 0 || v >= (int)rot.size())
        throw Error(Err::ParseError, "vertex id out of range in rep");
      auto& slots = at[v];
      if (slots[0].first < 0)
        slots[0] = {c, (int)i};
      else if (slots[1].first < 0)
        slots[1] = {c, (int)i};
      else
        throw Error(Err::PairCrossesMoreThanTwice, "vertex on more than two circles");
    }
  }

  for (int v = 0; v < (int)rot.size(); ++v) {
    Dart ds[4];
    for (int s = 0; s < 4; ++s) {
      const Slot& sl = rot[v][s];
      std::pair<int, int> pos(-1, -1);
      for (auto& p : at[v])
        if (p.first == sl.circle) pos = p;
      if (pos.first < 0)
        throw Error(Err::ParseError, "rotation references circle not at vertex");
      ds[s] = sl.dir > 0 ? fore(pos.first, pos.second) : back(pos.first, pos.second);
    }
    for (int s = 0; s < 4; ++s) m.sigma[ds[s]] = ds[(s + 1) % 4];
  }
  return m;
}

CircleListRep CircleListRep::from(const Arrangement& arr) {
  CircleListRep rep;
  rep.n = arr.n;
  rep.seq.resize(arr.n);
  rep.rot.resize(arr.vertex_count);

  // is_fore[d] = 1 if d belongs to the stored directed traversal.
  std::vector<uint8_t> is_fore(arr.map.dart_count(), 0);
  for (int c = 0; c < arr.n; ++c) {
    for (Dart d : arr.circles[c]) {
      is_fore[d] = 1;
      rep.seq[c].push_back(arr.vertex_of[d]);
    }
  }
  for (int v = 0; v < arr.vertex_count; ++v) rep.rot[v] = {};
  std::vector<uint8_t> done(arr.vertex_count, 0);
  for (Dart d = 0; d < arr.map.dart_count(); ++d) {
    int v = arr.vertex_of[d];
    if (done[v]) continue;
    done[v] = 1;
    Dart e = d;
    for (int s = 0; s < 4; ++s) {
      rep.rot[v][s] = Slot{arr.circle_of[e], is_fore[e] ? +1 : -1};
      e = arr.map.sigma[e];
    }
  }
  return rep;
}

static Arrangement restrict_impl(const Arrangement& arr, uint32_t keep_mask) {
  CircleListRep rep = CircleListRep::from(arr);
  CircleListRep out;
  std::vector<int> cmap(arr.n, -1);
  for (int c = 0; c < arr.n; ++c)
    if (keep_mask & (1u << c)) {
      cmap[c] = out.n++;
      out.seq.emplace_back();
    }

  // A vertex survives iff both its circles are kept.
  std::vector<int> vmap(arr.vertex_count, -1);
  int nv = 0;
  for (int v = 0; v < arr.vertex_count; ++v) {
    auto cs = arr.circles_at_vertex(v);
    if (cmap[cs[0]] >= 0 && cmap[cs[1]] >= 0) vmap[v] = nv++;
  }
  if (nv == 0)
    throw Error(Err::Disconnected, "restriction has no crossings");

  out.rot.resize(nv);
  for (int c = 0; c < arr.n; ++c) {
    if (cmap[c] < 0) continue;
    for (int v : rep.seq[c])
      if (vmap[v] >= 0) out.seq[cmap[c]].push_back(vmap[v]);
    if (out.seq[cmap[c]].empty())
      throw Error(Err::Disconnected, "kept circle loses all crossings");
  }
  for (int v = 0; v < arr.vertex_count; ++v) {
    if (vmap[v] < 0) continue;
    int s = 0;
    for (const auto& sl : rep.rot[v]) {
      if (cmap[sl.circle] < 0) continue;
      out.rot[vmap[v]][s++] = CircleListRep::Slot{cmap[sl.circle], sl.dir};
    }
    if (s != 4)
      throw Error(Err::NotSpherical, "restriction rotation mismatch");
  }
  return validate(out.build());
}

Arrangement delete_circle(const Arrangement& arr, int i) {
  if (i < 0 || i >= arr.n)
    throw Error(Err::PrecondViolated, "circle id out of range");
  if (arr.n <= 2)
    throw Error(Err::WouldDisconnect, "deletion leaves a crossing-free circle");
  uint32_t mask = 0;
  for (int c = 0; c < arr.n; ++c)
    if (c != i) mask |= 1u << c;
  try {
    return restrict_impl(arr, mask);
  } catch (const Error& e) {
    if (e.code() == Err::Disconnected)
      throw Error(Err::WouldDisconnect, "deletion disconnects the arrangement");
    throw;
  }
}

Arrangement restrict_to(const Arrangement& arr, const std::vector<int>& keep) {
  uint32_t mask = 0;
  for (int c : keep) {
    if (c < 0 || c >= arr.n)
      throw Error(Err::PrecondViolated, "circle id out of range");
    mask |= 1u << c;
  }
  return restrict_impl(arr, mask);
}

}  // namespace pcarr
