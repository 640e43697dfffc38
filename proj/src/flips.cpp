#include "pcarr/flips.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>

namespace pcarr {

namespace {

// Positions of a vertex inside a circle sequence.
int find_pos(const std::vector<int>& seq, int v) {
  for (size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == v) return (int)i;
  throw Error(Err::PrecondViolated, "vertex not on circle");
}

std::vector<std::vector<Dart>> face_darts(const Arrangement& arr) {
  std::vector<std::vector<Dart>> fd(arr.face_count);
  // Collect each face's darts in orbit order.
  std::vector<uint8_t> seen(arr.map.dart_count(), 0);
  for (Dart d = 0; d < arr.map.dart_count(); ++d) {
    if (seen[d]) continue;
    Dart e = d;
    do {
      seen[e] = 1;
      fd[arr.face_of[e]].push_back(e);
      e = phi(arr.map, e);
    } while (e != d);
  }
  return fd;
}

}  // namespace

std::vector<std::pair<int, Arrangement>> triangle_flips(const Arrangement& arr) {
  std::vector<std::pair<int, Arrangement>> out;
  auto fd = face_darts(arr);
  CircleListRep base = CircleListRep::from(arr);
  for (int f = 0; f < arr.face_count; ++f) {
    if (fd[f].size() != 3) continue;
    CircleListRep rep = base;
    // Each boundary arc joins two of the triangle's crossings along its
    // circle; moving any one side across the opposite crossing swaps the two
    // crossings along all three circles while every rotation stays fixed.
    for (Dart d : fd[f]) {
      int c = arr.circle_of[d];
      int u = arr.vertex_of[d];
      int w = arr.vertex_of[arr.map.alpha[d]];
      int iu = find_pos(rep.seq[c], u);
      int iw = find_pos(rep.seq[c], w);
      std::swap(rep.seq[c][iu], rep.seq[c][iw]);
    }
    out.emplace_back(f, validate(rep.build()));
  }
  return out;
}

namespace {

struct RepEdit {
  CircleListRep rep;
  // Renumbers vertices densely after deletions; returns old->new ids.
  std::vector<int> compact(int old_count) {
    std::vector<int> used(old_count, 0);
    for (auto& s : rep.seq)
      for (int v : s) used[v] = 1;
    std::vector<int> remap(old_count, -1);
    int next = 0;
    for (int v = 0; v < old_count; ++v)
      if (used[v]) remap[v] = next++;
    std::vector<std::array<CircleListRep::Slot, 4>> rot(next);
    for (int v = 0; v < old_count; ++v)
      if (remap[v] >= 0) rot[remap[v]] = rep.rot[v];
    rep.rot = std::move(rot);
    for (auto& s : rep.seq)
      for (int& v : s) v = remap[v];
    return remap;
  }
};

Arrangement collapse_digon(const Arrangement& arr, const std::vector<Dart>& face,
                           DigonFlipStats* stats) {
  int c0 = arr.circle_of[face[0]];
  int c1 = arr.circle_of[face[1]];
  int v0 = arr.vertex_of[face[0]];
  int v1 = arr.vertex_of[face[1]];
  RepEdit e{CircleListRep::from(arr)};
  for (int c : {c0, c1}) {
    auto& s = e.rep.seq[c];
    s.erase(std::remove_if(s.begin(), s.end(), [&](int v) { return v == v0 || v == v1; }),
            s.end());
    if (s.empty()) {
      if (stats) ++stats->emptied_circle;
      throw Error(Err::WouldDisconnect, "collapse empties a circle");
    }
  }
  e.compact(arr.vertex_count);
  return validate(e.rep.build());
}

// Push the arc of dart da through the arc of dart db across their common
// face.  Both darts lie on the face boundary (face on their right); the
// circles must be distinct and currently disjoint.
Arrangement create_digon(const Arrangement& arr, Dart da, Dart db) {
  const int ca = arr.circle_of[da];
  const int cb = arr.circle_of[db];
  CircleListRep rep = CircleListRep::from(arr);

  const int x = arr.vertex_count;  // first new crossing along ca
  const int y = arr.vertex_count + 1;

  // A dart is "fore" when it belongs to the stored directed traversal of its
  // circle (vertex adjacency alone cannot tell on two-crossing circles).
  auto dart_is_fore = [&](Dart d, int c) {
    for (Dart t : arr.circles[c])
      if (t == d) return true;
    return false;
  };
  // Insertion gap spanned by the arc of dart d: between seq positions
  // gap and gap+1.  A fore dart at position i spans i -> i+1, a back dart
  // at position i spans i-1 -> i.
  auto arc_gap = [&](Dart d, int c, bool fore) -> int {
    int iu = find_pos(rep.seq[c], arr.vertex_of[d]);
    const int len = (int)rep.seq[c].size();
    return fore ? iu : (iu - 1 + len) % len;
  };

  bool a_fore = dart_is_fore(da, ca);
  bool b_fore = dart_is_fore(db, cb);
  int gap_a = arc_gap(da, ca, a_fore);
  int gap_b = arc_gap(db, cb, b_fore);

  // Crossing points q1, q2 ordered along db's direction; chords nest as
  // (first attach slot on a) -- q2 and (second slot) -- q1.  Along ca's
  // travel the first crossing is x.
  int q1, q2;
  if (a_fore) {
    q2 = x;
    q1 = y;
  } else {
    q1 = x;
    q2 = y;
  }
  // Insert into ca: seq direction order is x then y.
  {
    auto& s = rep.seq[ca];
    s.insert(s.begin() + gap_a + 1, {x, y});
  }
  // Insert into cb: along seq direction, q1 before q2 iff db is a fore dart.
  {
    auto& s = rep.seq[cb];
    int first = b_fore ? q1 : q2;
    int second = b_fore ? q2 : q1;
    s.insert(s.begin() + gap_b + 1, {first, second});
  }

  using S = CircleListRep::Slot;
  int sb = b_fore ? +1 : -1;
  rep.rot.resize(arr.vertex_count + 2);
  // At x the bubble moves into the far side of db, at y it moves back.
  rep.rot[x] = {S{cb, sb}, S{ca, +1}, S{cb, -sb}, S{ca, -1}};
  rep.rot[y] = {S{cb, sb}, S{ca, -1}, S{cb, -sb}, S{ca, +1}};
  return validate(rep.build());
}

}  // namespace

std::vector<std::pair<DigonSite, Arrangement>> digon_flips(const Arrangement& arr,
                                                           DigonFlipStats* stats) {
  std::vector<std::pair<DigonSite, Arrangement>> out;
  auto fd = face_darts(arr);
  const CanonicalCode orig = canonical_code(arr);

  for (int f = 0; f < arr.face_count; ++f) {
    if (fd[f].size() != 2) continue;
    try {
      Arrangement res = collapse_digon(arr, fd[f], stats);
      out.push_back({DigonSite{DigonSite::Collapse, f, (int)fd[f][0], (int)fd[f][1]}, std::move(res)});
    } catch (const Error& e) {
      if (stats && e.code() == Err::Disconnected) ++stats->disconnected;
      else if (stats && e.code() != Err::WouldDisconnect) ++stats->invalid;
    }
  }

  for (int f = 0; f < arr.face_count; ++f) {
    const auto& darts = fd[f];
    for (Dart da : darts) {
      for (Dart db : darts) {
        if (da == db) continue;
        int ca = arr.circle_of[da], cb = arr.circle_of[db];
        if (ca == cb || arr.pair_crosses(ca, cb)) continue;
        try {
          Arrangement res = create_digon(arr, da, db);
          // A genuine digon flip collapses back to the original arrangement.
          bool ok = false;
          auto back = face_darts(res);
          for (int g = 0; g < res.face_count && !ok; ++g) {
            if (back[g].size() != 2) continue;
            try {
              Arrangement undone = collapse_digon(res, back[g], nullptr);
              ok = canonical_code(undone) == orig;
            } catch (const Error&) {
            }
          }
          if (!ok) {
            if (stats) ++stats->not_involutive;
            continue;
          }
          out.push_back({DigonSite{DigonSite::Create, f, (int)da, (int)db}, std::move(res)});
        } catch (const Error& e) {
          if (stats) {
            if (e.code() == Err::Disconnected) ++stats->disconnected;
            else ++stats->invalid;
          }
        }
      }
    }
  }
  return out;
}

bool FlipGraph::is_connected_graph() const {
  if (codes.empty()) return true;
  std::vector<std::vector<int>> adj(codes.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<uint8_t> seen(codes.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  size_t cnt = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++cnt;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return cnt == codes.size();
}

FlipGraph flip_graph(const std::vector<Arrangement>& seeds, const FlipGraphOptions& opt) {
  FlipGraph g;
  // The queue holds node ids only; arrangements are rebuilt from their codes
  // on expansion.  Keeps the frontier memory flat on six-figure closures.
  std::deque<int> queue;
  std::set<std::pair<int, int>> edge_set;
  auto t0 = std::chrono::steady_clock::now();

  auto add_node = [&](const std::string& code) -> int {
    auto it = g.index.find(code);
    if (it != g.index.end()) return it->second;
    if (g.codes.size() >= opt.max_nodes)
      throw Error(Err::BudgetExceeded, "flip graph node cap");
    int id = (int)g.codes.size();
    g.codes.push_back(code);
    g.index.emplace(code, id);
    queue.push_back(id);
    return id;
  };

  for (const Arrangement& s : seeds) {
    if (opt.class_filter && !opt.class_filter(s))
      throw Error(Err::PrecondViolated, "seed outside the class filter");
    add_node(canonical_code(s).text);
  }

  while (!queue.empty()) {
    if (opt.max_seconds >= 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (el > opt.max_seconds) throw Error(Err::BudgetExceeded, "flip graph time cap");
    }
    int cur_id = queue.front();
    queue.pop_front();
    Arrangement cur = parse_code(g.codes[cur_id]);

    std::vector<Arrangement> nexts;
    for (auto& [f, a] : triangle_flips(cur)) nexts.push_back(std::move(a));
    if (opt.moves == MoveSet::TriangleAndDigon)
      for (auto& [s, a] : digon_flips(cur)) nexts.push_back(std::move(a));

    for (Arrangement& nb : nexts) {
      if (opt.class_filter && !opt.class_filter(nb)) continue;
      std::string code = canonical_code(nb).text;
      int id = add_node(code);
      if (opt.record_edges && id != cur_id)
        edge_set.insert({std::min(cur_id, id), std::max(cur_id, id)});
    }
  }
  g.edges.assign(edge_set.begin(), edge_set.end());
  return g;
}

}  // namespace pcarr
