#pragma once

#include <functional>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace brittle {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundFamily { Vertex, Edge, Matching, Rank };
std::optional<BoundFamily> bound_family_from_name(const std::string& name);

/// Pluggable upper-bound rules for the two quantities the rank-family
/// recursion depends on. `max_bits` guards materialization: intermediate
/// values wider than this raise ResourceLimit instead of exhausting memory.
struct BoundRules {
  /// Upper bound for the k-color Ramsey number R(n;k).
  std::function<BigInt(const BigInt& n, const BigInt& k)> ramsey;
  /// Upper bound for the unavoidable-bipartite-pattern threshold f(n).
  std::function<BigInt(const BigInt& n)> dov;
  long max_bits = 1 << 20;
};

/// Defaults: ramsey(n,k) = k^(k(n-1)) + 1 (multicolor pigeonhole bound) and
/// dov(n) = 2^(2^(2n)), a placeholder that is not tight. Rank-family values
/// computed from these defaults overflow any realistic bit budget already at
/// k = n = 1; plug smaller demonstration rules to exercise the composition.
BoundRules default_bound_rules();

/// Smallest partition threshold l(k,n) guaranteeing the family's obstruction,
/// evaluated exactly over big integers:
///   vertex:   l(1,n) = 256 n^4,
///             l(k,n) = l(k-1, 4(k+1)^2 n^2 + T) + T
///             with T = k^2 k! C((2k+1)k, 2k)^k (n-1)^k
///   edge:     l(1,n) = n(n-1),  l(k,n) = l(k-1, 4k(n-1)^2 + 1)
///   matching: l(k,n) = (k+1)^k (n-1)
///   rank:     composed through the plugged ramsey/dov rules; the result is
///             an upper bound only as good as those rules.
BigInt bound_ell(BoundFamily family, int k, const BigInt& n,
                 const BoundRules& rules = default_bound_rules());

}  // namespace brittle
