#pragma once

#include <string>
#include <vector>

#include "pcarr/map.hpp"

namespace pcarr {

enum class ExtendMode { Intersecting, Connected };

// All arrangements on n+1 pseudocircles whose deletion of the new circle
// yields arr.  Intersecting mode: the new curve crosses every existing
// circle exactly twice; connected mode: each circle 0 or 2 times, at least
// one crossed.  Duplicates within the output are removed by canonical code;
// results are sorted by code.
std::vector<Arrangement> extensions(const Arrangement& arr, ExtendMode mode);

enum class ArrClass {
  Connected,
  ConnectedDigonFree,
  ConnectedCylindrical,
  ConnectedCylindricalDigonFree,
  Intersecting,
  IntersectingDigonFree,
  IntersectingCylindrical,
  IntersectingCylindricalDigonFree,
  Great,
};

ArrClass parse_class(const std::string& name);
const char* class_name(ArrClass c);
bool class_member(ArrClass c, const Arrangement& arr);

struct EnumerateOptions {
  bool long_run = false;   // unlocks the n=7 intersecting-digon-free tier
  int threads = 1;
  bool verbose = false;    // progress lines on stderr
};

// Complete, duplicate-free, sorted set of canonical codes for the class.
// Desk-scale guard: connected n <= 6, intersecting n <= 6, great n <= 7;
// n=7 intersecting-digon-free only with long_run.
std::vector<std::string> enumerate_class(int n, ArrClass cls, const EnumerateOptions& opt = {});

}  // namespace pcarr
