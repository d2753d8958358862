#include "braidq/bounds.hpp"

#include "braidq/errors.hpp"

namespace braidq {

namespace {

BigInt pow_int(long long base, int e) {
  if (e < 0) throw InvalidParameter("negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

void require_n(int n, int min) {
  if (n < min) throw InvalidParameter("n must be at least " + std::to_string(min));
}

}  // namespace

long long lpf(long long p) {
  if (p <= 1) throw InvalidParameter("lpf needs p >= 2");
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return q;
  return p;
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BoundReport theorem_a_bound(int n) {
  require_n(n, 2);
  const int fl = n / 2, cl = (n + 1) / 2;
  return {"thmA", n, std::nullopt, BigInt(fl + 1) * pow_int(3, fl - 1) * factorial(cl), n > 5};
}

BoundReport theorem_a_bound_p(int n, long long p) {
  require_n(n, 2);
  const int fl = n / 2, cl = (n + 1) / 2;
  const BigInt lead = BigInt(lpf(p) - 1) * fl + 1;
  return {"thmAp", n, p, lead * pow_int(3, fl - 1) * factorial(cl), n > 5};
}

BoundReport single_set_bound(int n) {
  require_n(n, 2);
  const int fl = n / 2;
  return {"ck", n, std::nullopt, pow_int(3, fl - 1) * factorial(fl), n >= 5};
}

BoundReport welded_bound(int n) {
  require_n(n, 2);
  return {"wbn", n, std::nullopt, pow_int(2, n - 2) * factorial(n - 1), n > 5};
}

BoundReport balloon_full_bound(int n) {
  require_n(n, 1);
  return {"hab", n, std::nullopt, pow_int(2, n - 1) * factorial(n), n > 5};
}

WeldedBounds welded_bounds(int n) { return {welded_bound(n).value, balloon_full_bound(n).value}; }

BoundReport bound_by_name(const std::string& formula, int n, std::optional<long long> p) {
  if (formula == "thmA") return theorem_a_bound(n);
  if (formula == "thmAp") {
    if (!p) throw InvalidParameter("thmAp needs --p");
    return theorem_a_bound_p(n, *p);
  }
  if (formula == "ck") return single_set_bound(n);
  if (formula == "wbn") return welded_bound(n);
  if (formula == "hab") return balloon_full_bound(n);
  throw InvalidParameter("unknown formula '" + formula + "'");
}

}  // namespace braidq
