#pragma once

#include <optional>
#include <string>

#include "braidq/bigint.hpp"

namespace braidq {

// Least prime factor; InvalidParameter for p <= 1.
long long lpf(long long p);

struct BoundReport {
  std::string formula;  // thmA, thmAp, ck, wbn, hab
  int n = 0;
  std::optional<long long> p;
  BigInt value;
  bool in_range = true;  // false: n outside the range the bound is stated for
};

// (floor(n/2)+1) 3^(floor(n/2)-1) ceil(n/2)!, stated for n > 5.
BoundReport theorem_a_bound(int n);
// ((lpf(p)-1) floor(n/2)+1) 3^(floor(n/2)-1) ceil(n/2)!
BoundReport theorem_a_bound_p(int n, long long p);
// 3^(floor(n/2)-1) floor(n/2)!, stated for n >= 5.
BoundReport single_set_bound(int n);
// 2^(n-2) (n-1)!
BoundReport welded_bound(int n);
// 2^(n-1) n!
BoundReport balloon_full_bound(int n);

struct WeldedBounds {
  BigInt wbn;
  BigInt hab_full;
};
WeldedBounds welded_bounds(int n);

// Dispatch on the formula id used by the command line.
BoundReport bound_by_name(const std::string& formula, int n, std::optional<long long> p = std::nullopt);

BigInt factorial(int k);

}  // namespace braidq
