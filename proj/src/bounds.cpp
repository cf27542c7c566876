#include "brittle/bounds.hpp"

#include <stdexcept>

#include "brittle/errors.hpp"

namespace brittle {

namespace {

void guard(const BigInt& x, long max_bits) {
  if (x > 0 && static_cast<long>(boost::multiprecision::msb(x)) >= max_bits)
    throw ResourceLimit("bound value exceeds the configured bit budget");
}

BigInt checked_pow(const BigInt& base, const BigInt& exp, long max_bits) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (exp == 0) return 1;
  if (base == 0) return 0;
  if (base == 1) return 1;
  BigInt bits_estimate = exp * (static_cast<long>(boost::multiprecision::msb(base)) + 1);
  if (bits_estimate > max_bits)
    throw ResourceLimit("bound value exceeds the configured bit budget");
  return boost::multiprecision::pow(base, exp.convert_to<unsigned>());
}

BigInt bmax(BigInt a, BigInt b) { return a >= b ? a : b; }

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

BigInt binomial(const BigInt& a, const BigInt& b) {
  if (b < 0 || b > a) return 0;
  BigInt r = 1;
  for (BigInt i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact at every step
  }
  return r;
}

BigInt vertex_ell(int k, const BigInt& n, const BoundRules& rules) {
  if (k == 1) return 256 * n * n * n * n;
  BigInt kk = k;
  BigInt tail = kk * kk * factorial(k) *
                checked_pow(binomial((2 * kk + 1) * kk, 2 * kk), kk, rules.max_bits) *
                checked_pow(n - 1, kk, rules.max_bits);
  guard(tail, rules.max_bits);
  BigInt inner = 4 * (kk + 1) * (kk + 1) * n * n + tail;
  return vertex_ell(k - 1, inner, rules) + tail;
}

BigInt edge_ell(int k, const BigInt& n, const BoundRules& rules) {
  if (k == 1) return n * (n - 1);
  BigInt inner = 4 * k * (n - 1) * (n - 1) + 1;
  guard(inner, rules.max_bits);
  return edge_ell(k - 1, inner, rules);
}

BigInt matching_ell(int k, const BigInt& n, const BoundRules& rules) {
  return checked_pow(k + 1, k, rules.max_bits) * (n - 1);
}

// Quantities feeding the rank-family recursion. Every value is an upper
// bound only relative to the plugged ramsey/dov rules.
struct RankCalc {
  const BoundRules& rules;

  BigInt ramsey(const BigInt& n, const BigInt& k) const {
    BigInt r = rules.ramsey(n, k);
    guard(r, rules.max_bits);
    return r;
  }
  BigInt dov(const BigInt& n) const {
    BigInt r = rules.dov(n);
    guard(r, rules.max_bits);
    return r;
  }

  BigInt f1(int k, const BigInt& n) const {
    BigInt kk = k;
    BigInt arg = bmax(ceil_div((kk + 2) * n - 1, 2) + 1, n + 3);
    BigInt colors = checked_pow(2, kk - 1, rules.max_bits);
    colors *= colors;
    return checked_pow(2, kk - 1, rules.max_bits) * (ramsey(arg, colors) - 1) + 1;
  }
  BigInt f2(int k, const BigInt& n) const { return f1(k, n) + 2; }
  BigInt n3(int k, const BigInt& n) const {
    BigInt kk = k;
    return bmax(bmax(f1(k, n), f2(k, n)), ceil_div((kk + 2) * n - 1, 2));
  }
  BigInt n2(int k, const BigInt& n) const {
    if (k > 1) return (k - 1) * n3(k, n) + 1;
    return bmax(n + 2, ceil_div(3 * n + 1, 2));
  }
  BigInt n1(int k, const BigInt& n) const { return ramsey(n2(k, n), 2); }
  BigInt big_n(int k, const BigInt& n) const { return dov(n1(k, n)); }

  BigInt ell3(int k, const BigInt& n) const {
    BigInt kk = k;
    return kk * checked_pow(2, kk * (big_n(k, n) - 1), rules.max_bits) + 1;
  }
  BigInt ell2(int k, const BigInt& n) const {
    BigInt kk = k;
    return bmax((kk + 2) * n,
                checked_pow(2, kk * (kk + 1) / 2, rules.max_bits) * (n - 1) + 2);
  }
  BigInt ell1(int k, const BigInt& n) const {
    return ramsey(ell2(k, n), checked_pow(2, k + 1, rules.max_bits));
  }

  BigInt ell(int k, const BigInt& n) const {
    if (k == 1) {
      BigInt l2 = bmax(n + 2, ceil_div(3 * n + 1, 2));
      BigInt l1 = ramsey(l2, 4);
      return dov(l1) - 1;
    }
    BigInt kk = k;
    BigInt r = ell(k - 1, ell3(k, n)) + (kk + 1) * (kk + 1) * (ell1(k, n) - 1);
    guard(r, rules.max_bits);
    return r;
  }
};

}  // namespace

std::optional<BoundFamily> bound_family_from_name(const std::string& name) {
  if (name == "vertex") return BoundFamily::Vertex;
  if (name == "edge") return BoundFamily::Edge;
  if (name == "matching") return BoundFamily::Matching;
  if (name == "rank") return BoundFamily::Rank;
  return std::nullopt;
}

BoundRules default_bound_rules() {
  BoundRules rules;
  long budget = rules.max_bits;
  rules.ramsey = [budget](const BigInt& n, const BigInt& k) -> BigInt {
    return checked_pow(k, k * (n - 1), budget) + 1;
  };
  rules.dov = [budget](const BigInt& n) -> BigInt {
    return checked_pow(2, checked_pow(2, 2 * n, budget), budget);
  };
  return rules;
}

BigInt bound_ell(BoundFamily family, int k, const BigInt& n, const BoundRules& rules) {
  if (k < 1 || n < 1) throw std::invalid_argument("k and n must be at least 1");
  BigInt result;
  switch (family) {
    case BoundFamily::Vertex: result = vertex_ell(k, n, rules); break;
    case BoundFamily::Edge: result = edge_ell(k, n, rules); break;
    case BoundFamily::Matching: result = matching_ell(k, n, rules); break;
    case BoundFamily::Rank: {
      if (!rules.ramsey || !rules.dov)
        throw std::invalid_argument("rank-family bounds need ramsey and dov rules");
      result = RankCalc{rules}.ell(k, n);
      break;
    }
  }
  guard(result, rules.max_bits);
  return result;
}

}  // namespace brittle
