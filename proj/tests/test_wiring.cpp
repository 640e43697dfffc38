#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pcarr/canonical.hpp"
#include "pcarr/wiring.hpp"

using namespace pcarr;
namespace fx = pcarr_fixtures;

TEST_CASE("from_wiring base cases") {
  Arrangement two = from_wiring(2, {1});
  CHECK(canonical_code(two) == canonical_code(fx::two_circle()));

  // The unique n=3 great arrangement is the Krupp.
  Arrangement kr = from_wiring(3, {1, 2, 1});
  CHECK(kr.n == 3);
  CHECK(kr.flags.great);
  CHECK(canonical_code(kr) == canonical_code(fx::krupp()));
  Arrangement kr2 = from_wiring(3, {2, 1, 2});
  CHECK(canonical_code(kr2) == canonical_code(fx::krupp()));
}

TEST_CASE("from_wiring rejects non-simple wirings") {
  CHECK_THROWS_AS(from_wiring(3, {1, 1, 2}), Error);
  CHECK_THROWS_AS(from_wiring(3, {1, 2}), Error);
  CHECK_THROWS_AS(from_wiring(3, {1, 2, 3}), Error);
}

TEST_CASE("every simple wiring gives a great arrangement") {
  for (int n = 3; n <= 5; ++n) {
    int words = 0;
    std::set<std::string> codes;
    enumerate_simple_wirings(n, [&](const std::vector<int>& w) {
      ++words;
      Arrangement arr = from_wiring(n, w);
      CHECK(arr.flags.great);
      CHECK(arr.flags.intersecting);
      if (n >= 3) CHECK(arr.flags.digon_free);
      CHECK(arr.vertex_count == n * (n - 1));
      codes.insert(canonical_code(arr).text);
    });
    // Commutation classes of reduced words of the longest permutation:
    // 2, 8, 62 for n = 3, 4, 5.
    int expected_words = n == 3 ? 2 : n == 4 ? 8 : 62;
    CHECK(words == expected_words);
    // Table of great-pseudocircle counts: one class for n = 3, 4, 5.
    CHECK(codes.size() == 1);
  }
}

TEST_CASE("great arrangements of six pseudolines: four classes") {
  std::set<std::string> codes;
  int words = 0;
  enumerate_simple_wirings(6, [&](const std::vector<int>& w) {
    ++words;
    codes.insert(canonical_code(from_wiring(6, w)).text);
  });
  CHECK(words == 908);
  CHECK(codes.size() == 4);
}
