#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pcarr/canonical.hpp"
#include "pcarr/enumerate.hpp"
#include "pcarr/flips.hpp"

using namespace pcarr;
namespace fx = pcarr_fixtures;

TEST_CASE("extensions of the 2-circle arrangement") {
  Arrangement two = fx::two_circle();
  auto exts = extensions(two, ExtendMode::Intersecting);
  std::set<std::string> codes;
  for (auto& e : exts) {
    CHECK(e.n == 3);
    codes.insert(canonical_code(e).text);
  }
  CHECK(codes.size() == 2);
  CHECK(codes.count(canonical_code(fx::krupp()).text) == 1);
  CHECK(codes.count(canonical_code(fx::nonkrupp()).text) == 1);

  // Connected mode additionally finds the chain-type extensions.
  auto cexts = extensions(two, ExtendMode::Connected);
  std::set<std::string> ccodes;
  for (auto& e : cexts) ccodes.insert(canonical_code(e).text);
  CHECK(ccodes.size() == 3);
  CHECK(ccodes.count(canonical_code(fx::three_chain()).text) == 1);
}

TEST_CASE("extension round trip: deleting the new circle returns the parent") {
  Arrangement parent = fx::krupp();
  std::string pcode = canonical_code(parent).text;
  auto exts = extensions(parent, ExtendMode::Intersecting);
  CHECK(!exts.empty());
  for (auto& e : exts) {
    // The new circle is some circle whose deletion gives back the parent.
    bool found = false;
    for (int c = 0; c < e.n && !found; ++c) {
      try {
        found = canonical_code(delete_circle(e, c)).text == pcode;
      } catch (const Error&) {
      }
    }
    CHECK(found);
  }
}

TEST_CASE("census n=3") {
  CHECK(enumerate_class(3, ArrClass::Connected).size() == 3);
  CHECK(enumerate_class(3, ArrClass::Intersecting).size() == 2);
  CHECK(enumerate_class(3, ArrClass::IntersectingDigonFree).size() == 1);
  CHECK(enumerate_class(3, ArrClass::Great).size() == 1);
  CHECK(enumerate_class(3, ArrClass::ConnectedCylindrical).size() == 3);
  CHECK(enumerate_class(3, ArrClass::ConnectedDigonFree).size() == 1);
}

TEST_CASE("census n=4") {
  auto connected = enumerate_class(4, ArrClass::Connected);
  CHECK(connected.size() == 21);
  CHECK(enumerate_class(4, ArrClass::ConnectedDigonFree).size() == 3);
  CHECK(enumerate_class(4, ArrClass::ConnectedCylindrical).size() == 20);
  auto inter = enumerate_class(4, ArrClass::Intersecting);
  CHECK(inter.size() == 8);
  CHECK(enumerate_class(4, ArrClass::IntersectingDigonFree).size() == 2);
  CHECK(enumerate_class(4, ArrClass::Great).size() == 1);

  // The unique non-cylindrical connected n=4 arrangement.
  int non_cyl = 0;
  for (const std::string& c : connected)
    if (!parse_code(c).flags.cylindrical) ++non_cyl;
  CHECK(non_cyl == 1);

  // The 8 intersecting arrangements are among the 21 connected ones.
  std::set<std::string> cset(connected.begin(), connected.end());
  for (const std::string& c : inter) CHECK(cset.count(c) == 1);
}

TEST_CASE("monotone consistency: deletions of intersecting n=4 are intersecting n=3") {
  auto n3 = enumerate_class(3, ArrClass::Intersecting);
  std::set<std::string> n3set(n3.begin(), n3.end());
  for (const std::string& code : enumerate_class(4, ArrClass::Intersecting)) {
    Arrangement a = parse_code(code);
    for (int c = 0; c < a.n; ++c) {
      Arrangement sub = delete_circle(a, c);
      CHECK(n3set.count(canonical_code(sub).text) == 1);
    }
  }
}

TEST_CASE("cross-method agreement at n=4: closure equals extension census") {
  // Intersecting class via triangle-only closure from one seed.
  auto by_ext = enumerate_class(4, ArrClass::Intersecting);
  Arrangement seed = parse_code(by_ext[0]);
  FlipGraphOptions opt;
  opt.moves = MoveSet::TriangleOnly;
  opt.class_filter = [](const Arrangement& a) { return a.flags.intersecting; };
  FlipGraph g = flip_graph({seed}, opt);
  std::set<std::string> closure(g.codes.begin(), g.codes.end());
  CHECK(closure == std::set<std::string>(by_ext.begin(), by_ext.end()));
}

TEST_CASE("budget guards") {
  CHECK_THROWS_AS(enumerate_class(7, ArrClass::Intersecting), Error);
  CHECK_THROWS_AS(enumerate_class(7, ArrClass::Connected), Error);
  CHECK_THROWS_AS(enumerate_class(8, ArrClass::Great), Error);
}
