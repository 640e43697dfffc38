#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pcarr/canonical.hpp"
#include "pcarr/flips.hpp"

using namespace pcarr;
namespace fx = pcarr_fixtures;

TEST_CASE("triangle flips of the Krupp all give the NonKrupp") {
  Arrangement kr = fx::krupp();
  CanonicalCode nk = canonical_code(fx::nonkrupp());
  auto flips = triangle_flips(kr);
  CHECK(flips.size() == 8);
  for (auto& [f, res] : flips) {
    CHECK(res.vertex_count == kr.vertex_count);
    CHECK(res.flags.intersecting);
    CHECK(canonical_code(res) == nk);
  }
}

TEST_CASE("triangle flip is an involution at code level") {
  Arrangement kr = fx::krupp();
  CanonicalCode orig = canonical_code(kr);
  for (auto& [f, res] : triangle_flips(kr)) {
    // Flipping any triangle of the result must be able to return.
    bool back = false;
    for (auto& [g, res2] : triangle_flips(res))
      if (canonical_code(res2) == orig) back = true;
    CHECK(back);
  }
  // NonKrupp has two triangles; flipping either gives back the Krupp.
  Arrangement nk = fx::nonkrupp();
  auto flips = triangle_flips(nk);
  CHECK(flips.size() == 2);
  for (auto& [f, res] : flips) CHECK(canonical_code(res) == orig);
}

TEST_CASE("digon flips of the NonKrupp") {
  Arrangement nk = fx::nonkrupp();
  CanonicalCode chain = canonical_code(fx::three_chain());
  DigonFlipStats stats;
  auto moves = digon_flips(nk, &stats);
  int collapses = 0;
  for (auto& [site, res] : moves) {
    if (site.kind != DigonSite::Collapse) continue;
    ++collapses;
    CHECK(res.n == 3);
    CHECK(res.vertex_count == nk.vertex_count - 2);
    CHECK_FALSE(res.flags.intersecting);
    // The only connected non-intersecting n=3 arrangement is the chain.
    CHECK(canonical_code(res) == chain);
  }
  CHECK(collapses == 3);
}

TEST_CASE("digon flips of the Krupp contain no collapse") {
  auto moves = digon_flips(fx::krupp());
  for (auto& [site, res] : moves) CHECK(site.kind != DigonSite::Collapse);
  // No disjoint pair either, so no creations.
  CHECK(moves.empty());
}

TEST_CASE("digon creation on the 3-chain reaches the NonKrupp") {
  Arrangement chain = fx::three_chain();
  CanonicalCode orig = canonical_code(chain);
  CanonicalCode nk = canonical_code(fx::nonkrupp());
  auto moves = digon_flips(chain);
  bool found_nk = false;
  for (auto& [site, res] : moves) {
    if (site.kind != DigonSite::Create) continue;
    CHECK(res.vertex_count == chain.vertex_count + 2);
    // Create-then-collapse at the same site returns the original.
    bool back = false;
    for (auto& [s2, res2] : digon_flips(res))
      if (s2.kind == DigonSite::Collapse && canonical_code(res2) == orig) back = true;
    CHECK(back);
    if (canonical_code(res) == nk) found_nk = true;
  }
  CHECK(found_nk);
}

TEST_CASE("flip graph: n=3 connected class has 3 nodes") {
  FlipGraphOptions opt;
  opt.moves = MoveSet::TriangleAndDigon;
  opt.class_filter = [](const Arrangement& a) { return a.n == 3; };
  FlipGraph g = flip_graph({fx::krupp()}, opt);
  CHECK(g.codes.size() == 3);
  CHECK(g.is_connected_graph());
  std::set<std::string> expect = {canonical_code(fx::krupp()).text,
                                  canonical_code(fx::nonkrupp()).text,
                                  canonical_code(fx::three_chain()).text};
  CHECK(std::set<std::string>(g.codes.begin(), g.codes.end()) == expect);
}

TEST_CASE("flip graph budget") {
  FlipGraphOptions opt;
  opt.moves = MoveSet::TriangleAndDigon;
  opt.class_filter = [](const Arrangement& a) { return a.n == 3; };
  opt.max_nodes = 2;
  CHECK_THROWS_AS(flip_graph({fx::krupp()}, opt), Error);
}
