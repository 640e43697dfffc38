#include "pcarr/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_set>

#include "pcarr/canonical.hpp"
#include "pcarr/flips.hpp"
#include "pcarr/wiring.hpp"

namespace pcarr {

namespace {

// Walk state for the dual-graph search.  A step is recorded as the dart of
// the crossed arc whose right face is the face being entered.
struct WalkSearch {
  const Arrangement* arr;
  ExtendMode mode;
  std::vector<int> count;      // crossings so far per circle
  std::vector<Dart> steps;
  int min_arc;                 // arc id (= min dart of the pair) of step 0
  int start_face;
  std::vector<std::vector<Dart>> crossable;  // face -> darts leaving it
  std::vector<std::pair<std::string, Arrangement>>* out;
  std::set<std::string>* seen;

  int arc_id(Dart d) const { return (int)std::min(d, arr->map.alpha[d]); }

  bool counts_complete() const {
    bool any = false;
    for (int c = 0; c < arr->n; ++c) {
      if (count[c] == 1) return false;
      if (count[c] == 2) any = true;
      if (mode == ExtendMode::Intersecting && count[c] != 2) return false;
    }
    return any;
  }

  // Lexicographically canonical closed walk: starts at its minimal arc and
  // is minimal among all rotations starting at that arc and both directions.
  bool canonical() const {
    const size_t L = steps.size();
    std::vector<int> ids(L);
    for (size_t i = 0; i < L; ++i) ids[i] = arc_id(steps[i]);
    std::vector<int> rev_ids(L);
    for (size_t i = 0; i < L; ++i) rev_ids[i] = ids[L - 1 - i];
    for (size_t s = 0; s < L; ++s) {
      if (ids[s] == min_arc && s != 0) {
        for (size_t k = 0; k < L; ++k) {
          int a = ids[(s + k) % L], b = ids[k];
          if (a != b) {
            if (a < b) return false;
            break;
          }
        }
      }
      if (rev_ids[s] == min_arc) {
        for (size_t k = 0; k < L; ++k) {
          int a = rev_ids[(s + k) % L], b = ids[k];
          if (a != b) {
            if (a < b) return false;
            break;
          }
        }
      }
    }
    return true;
  }

  void emit();

  void dfs(int face) {
    if (face == start_face && !steps.empty() && counts_complete() && canonical()) emit();
    if ((int)steps.size() >= 2 * arr->n) return;
    for (Dart d = 0; d < arr->map.dart_count(); ++d) {
      // Cross the arc of d entering face_of[d]; must leave the current face.
      if (arr->face_of[arr->map.alpha[d]] != face) continue;
      if (arc_id(d) < min_arc) continue;
      int c = arr->circle_of[d];
      if (count[c] >= 2) continue;
      ++count[c];
      steps.push_back(d);
      dfs(arr->face_of[d]);
      steps.pop_back();
      --count[c];
    }
  }
};

void WalkSearch::emit() {
  const Arrangement& A = *arr;
  const int n = A.n;
  const size_t L = steps.size();

  // Arc usage: at most twice.  For twice-used arcs both orders along the arc
  // are tried; validation rejects combinations that cannot be drawn.
  std::vector<size_t> dup_positions;
  std::map<int, std::vector<size_t>> by_arc;
  for (size_t i = 0; i < L; ++i) by_arc[arc_id(steps[i])].push_back(i);
  for (auto& [a, v] : by_arc)
    if (v.size() == 2) dup_positions.push_back(v[0]);

  CircleListRep base = CircleListRep::from(A);
  std::vector<uint8_t> fore_mask(A.map.dart_count(), 0);
  for (int c = 0; c < n; ++c)
    for (Dart d : A.circles[c]) fore_mask[d] = 1;

  for (uint32_t bits = 0; bits < (1u << dup_positions.size()); ++bits) {
    CircleListRep rep = base;
    rep.n = n + 1;
    rep.seq.emplace_back();
    auto& gseq = rep.seq[n];
    for (size_t i = 0; i < L; ++i) gseq.push_back(A.vertex_count + (int)i);
    rep.rot.resize(A.vertex_count + L);

    // Order of crossings along each arc, in the arc's seq direction.
    // key: (circle, gap position); value: list of step indices in order.
    std::map<std::pair<int, int>, std::vector<size_t>> on_gap;
    bool ok = true;
    for (size_t i = 0; i < L; ++i) {
      Dart d = steps[i];
      Dart delta = A.map.alpha[d];  // dart whose left face is entered
      int c = A.circle_of[d];
      bool delta_fore = fore_mask[delta];
      // Gap spanned by the arc in c's sequence (use whichever dart is fore).
      Dart fd = delta_fore ? delta : d;
      int u = A.vertex_of[fd];
      int iu = -1;
      for (size_t t = 0; t < base.seq[c].size(); ++t)
        if (base.seq[c][t] == u) iu = (int)t;
      on_gap[{c, iu}].push_back(i);
    }
    // Apply order choice for doubly used gaps.
    {
      size_t k = 0;
      for (auto& [key, v] : on_gap) {
        if (v.size() == 2) {
          // bit set: swap the order along the arc.
          size_t dup_index = 0;
          while (dup_index < dup_positions.size() &&
                 dup_positions[dup_index] != std::min(v[0], v[1]))
            ++dup_index;
          if (dup_index < dup_positions.size() && (bits >> dup_index) & 1)
            std::swap(v[0], v[1]);
          (void)k;
        } else if (v.size() > 2) {
          ok = false;
        }
      }
    }
    if (!ok) continue;

    // Insert new vertices into the old circle sequences.  Work per circle,
    // collecting insertions per gap, then rebuild the sequence.
    for (int c = 0; c < n; ++c) {
      const auto& old_seq = base.seq[c];
      std::vector<int> ns;
      for (size_t g = 0; g < old_seq.size(); ++g) {
        ns.push_back(old_seq[g]);
        auto it = on_gap.find({c, (int)g});
        if (it != on_gap.end())
          for (size_t si : it->second) ns.push_back(A.vertex_count + (int)si);
      }
      rep.seq[c] = std::move(ns);
    }

    // Rotations at the new crossings: entering the left face of delta.
    for (size_t i = 0; i < L; ++i) {
      Dart d = steps[i];
      Dart delta = A.map.alpha[d];
      int c = A.circle_of[d];
      int s = fore_mask[delta] ? +1 : -1;
      using S = CircleListRep::Slot;
      rep.rot[A.vertex_count + i] = {S{c, s}, S{n, +1}, S{c, -s}, S{n, -1}};
    }

    try {
      Arrangement res = validate(rep.build());
      std::string code = canonical_code(res).text;
      if (seen->insert(code).second) out->push_back(std::move(res));
    } catch (const Error&) {
      // Not drawable with this order assignment.
    }
  }
}

}  // namespace

std::vector<Arrangement> extensions(const Arrangement& arr, ExtendMode mode) {
  std::vector<Arrangement> out;
  std::set<std::string> seen;
  WalkSearch ws;
  ws.arr = &arr;
  ws.mode = mode;
  ws.count.assign(arr.n, 0);
  ws.out = &out;
  ws.seen = &seen;

  // Outer loop: the walk's first step crosses its minimal arc; enumerate
  // both crossing directions of every arc as the opener.
  for (Dart d = 0; d < arr.map.dart_count(); ++d) {
    ws.min_arc = ws.arc_id(d);
    ws.start_face = arr.face_of[arr.map.alpha[d]];
    int c = arr.circle_of[d];
    ++ws.count[c];
    ws.steps.push_back(d);
    ws.dfs(arr.face_of[d]);
    ws.steps.pop_back();
    --ws.count[c];
  }

  std::sort(out.begin(), out.end(), [](const Arrangement& a, const Arrangement& b) {
    return canonical_code(a).text < canonical_code(b).text;
  });
  return out;
}

ArrClass parse_class(const std::string& name) {
  if (name == "connected") return ArrClass::Connected;
  if (name == "connected-digonfree") return ArrClass::ConnectedDigonFree;
  if (name == "connected-cylindrical") return ArrClass::ConnectedCylindrical;
  if (name == "connected-cylindrical-digonfree") return ArrClass::ConnectedCylindricalDigonFree;
  if (name == "intersecting") return ArrClass::Intersecting;
  if (name == "intersecting-digonfree") return ArrClass::IntersectingDigonFree;
  if (name == "intersecting-cylindrical") return ArrClass::IntersectingCylindrical;
  if (name == "intersecting-cylindrical-digonfree")
    return ArrClass::IntersectingCylindricalDigonFree;
  if (name == "great") return ArrClass::Great;
  throw Error(Err::ParseError, "unknown class: " + name);
}

const char* class_name(ArrClass c) {
  switch (c) {
    case ArrClass::Connected: return "connected";
    case ArrClass::ConnectedDigonFree: return "connected-digonfree";
    case ArrClass::ConnectedCylindrical: return "connected-cylindrical";
    case ArrClass::ConnectedCylindricalDigonFree: return "connected-cylindrical-digonfree";
    case ArrClass::Intersecting: return "intersecting";
    case ArrClass::IntersectingDigonFree: return "intersecting-digonfree";
    case ArrClass::IntersectingCylindrical: return "intersecting-cylindrical";
    case ArrClass::IntersectingCylindricalDigonFree:
      return "intersecting-cylindrical-digonfree";
    case ArrClass::Great: return "great";
  }
  return "?";
}

bool class_member(ArrClass c, const Arrangement& arr) {
  const PropertyFlags& f = arr.flags;
  switch (c) {
    case ArrClass::Connected: return f.connected;
    case ArrClass::ConnectedDigonFree: return f.connected && f.digon_free;
    case ArrClass::ConnectedCylindrical: return f.connected && f.cylindrical;
    case ArrClass::ConnectedCylindricalDigonFree:
      return f.connected && f.cylindrical && f.digon_free;
    case ArrClass::Intersecting: return f.intersecting;
    case ArrClass::IntersectingDigonFree: return f.intersecting && f.digon_free;
    case ArrClass::IntersectingCylindrical: return f.intersecting && f.cylindrical;
    case ArrClass::IntersectingCylindricalDigonFree:
      return f.intersecting && f.cylindrical && f.digon_free;
    case ArrClass::Great: return f.great;
  }
  return false;
}

namespace {

Arrangement two_circles() {
  // Built from the one-swap wiring diagram.
  return from_wiring(2, {1});
}

// All intersecting arrangements of n circles by circle-by-circle extension.
std::vector<std::string> intersecting_codes(int n, const EnumerateOptions& opt) {
  std::vector<Arrangement> level = {two_circles()};
  for (int k = 2; k < n; ++k) {
    std::set<std::string> codes;
    std::vector<Arrangement> next;
    size_t done = 0;
    for (const Arrangement& parent : level) {
      for (Arrangement& ext : extensions(parent, ExtendMode::Intersecting)) {
        std::string code = canonical_code(ext).text;
        if (codes.insert(code).second) next.push_back(std::move(ext));
      }
      if (opt.verbose && ++done % 32 == 0)
        std::fprintf(stderr, "extend %d->%d: %zu/%zu parents, %zu found\n", k, k + 1, done,
                     level.size(), codes.size());
    }
    level = std::move(next);
  }
  std::vector<std::string> out;
  out.reserve(level.size());
  for (const Arrangement& a : level) out.push_back(canonical_code(a).text);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> closure_codes(const Arrangement& seed, MoveSet moves,
                                       std::function<bool(const Arrangement&)> filter) {
  FlipGraphOptions o;
  o.moves = moves;
  o.class_filter = std::move(filter);
  o.record_edges = false;
  FlipGraph g = flip_graph({seed}, o);
  std::vector<std::string> out = g.codes;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> filter_codes(const std::vector<std::string>& codes, ArrClass cls) {
  std::vector<std::string> out;
  for (const std::string& c : codes)
    if (class_member(cls, parse_code(c))) out.push_back(c);
  return out;
}

}  // namespace

std::vector<std::string> enumerate_class(int n, ArrClass cls, const EnumerateOptions& opt) {
  if (n < 2) throw Error(Err::PrecondViolated, "n must be at least 2");

  const bool is_connected_class =
      cls == ArrClass::Connected || cls == ArrClass::ConnectedDigonFree ||
      cls == ArrClass::ConnectedCylindrical || cls == ArrClass::ConnectedCylindricalDigonFree;

  if (cls == ArrClass::Great) {
    if (n > 7) throw Error(Err::BudgetExceeded, "great class beyond n=7");
    if (n == 2) return {canonical_code(two_circles()).text};
    std::set<std::string> codes;
    enumerate_simple_wirings(n, [&](const std::vector<int>& w) {
      codes.insert(canonical_code(from_wiring(n, w)).text);
    });
    return {codes.begin(), codes.end()};
  }

  if (is_connected_class) {
    if (n > 6) throw Error(Err::BudgetExceeded, "connected classes beyond n=6");
    if (n == 2) {
      std::vector<std::string> base = {canonical_code(two_circles()).text};
      return filter_codes(base, cls);
    }
    // Flip closure with both move kinds over the full connected class,
    // then filter; the extension method cross-checks the intersecting
    // subclass (see tests).
    Arrangement seed = from_wiring(n, [&] {
      std::vector<int> w;
      for (int i = n - 1; i >= 1; --i)
        for (int j = 1; j <= i; ++j) w.push_back(j);
      return w;
    }());
    auto all = closure_codes(seed, MoveSet::TriangleAndDigon,
                             [n](const Arrangement& a) { return a.n == n; });
    return cls == ArrClass::Connected ? all : filter_codes(all, cls);
  }

  // Intersecting-rooted classes.
  if (n > 7 || (n == 7 && !opt.long_run))
    throw Error(Err::BudgetExceeded, "intersecting classes beyond n=6 need --long-run");
  if (n == 7) {
    if (cls != ArrClass::IntersectingDigonFree &&
        cls != ArrClass::IntersectingCylindricalDigonFree)
      throw Error(Err::BudgetExceeded, "n=7 supports only the digon-free tier");
    // Triangle-flip closure inside the class from a great seed (the paper's
    // flip-graph route; the full n=7 extension census is beyond desk scale).
    std::vector<int> w;
    for (int i = 6; i >= 1; --i)
      for (int j = 1; j <= i; ++j) w.push_back(j);
    Arrangement seed = from_wiring(7, w);
    auto all = closure_codes(seed, MoveSet::TriangleOnly, [](const Arrangement& a) {
      return a.flags.intersecting && a.flags.digon_free;
    });
    return cls == ArrClass::IntersectingDigonFree ? all : filter_codes(all, cls);
  }
  auto all = intersecting_codes(n, opt);
  return cls == ArrClass::Intersecting ? all : filter_codes(all, cls);
}

}  // namespace pcarr
