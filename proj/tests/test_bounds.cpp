#include "brittle/bounds.hpp"
#include "brittle/errors.hpp"
#include "doctest.h"

using namespace brittle;

TEST_CASE("closed forms") {
  CHECK(bound_ell(BoundFamily::Vertex, 1, 2) == 4096);
  CHECK(bound_ell(BoundFamily::Vertex, 1, 1) == 256);
  CHECK(bound_ell(BoundFamily::Vertex, 1, 10) == 2560000);
  CHECK(bound_ell(BoundFamily::Edge, 1, 3) == 6);
  CHECK(bound_ell(BoundFamily::Edge, 1, 1) == 0);
  CHECK(bound_ell(BoundFamily::Matching, 2, 3) == 18);
  CHECK(bound_ell(BoundFamily::Matching, 1, 4) == 6);
  CHECK(bound_ell(BoundFamily::Matching, 3, 1) == 0);
}

TEST_CASE("recursive families compose through their inner argument") {
  // edge: l(2,3) = l(1, 4*2*(3-1)^2 + 1) = l(1,33) = 33*32
  CHECK(bound_ell(BoundFamily::Edge, 2, 3) == 1056);
  CHECK(bound_ell(BoundFamily::Edge, 2, 3) == bound_ell(BoundFamily::Edge, 1, 33));
  CHECK(bound_ell(BoundFamily::Edge, 3, 2) ==
        bound_ell(BoundFamily::Edge, 2, 4 * 3 * 1 + 1));

  // vertex k=2: the tail term is k^2 k! C(10,4)^k (n-1)^k
  BigInt tail = BigInt(4) * 2 * 210 * 210;  // n = 2
  CHECK(bound_ell(BoundFamily::Vertex, 2, 2) ==
        bound_ell(BoundFamily::Vertex, 1, 4 * 9 * 4 + tail) + tail);
  // n = 1 kills the tail
  CHECK(bound_ell(BoundFamily::Vertex, 2, 1) == bound_ell(BoundFamily::Vertex, 1, 36));
}

TEST_CASE("rank family under demonstration rules") {
  BoundRules toy;
  toy.ramsey = [](const BigInt& n, const BigInt& k) { return n + k; };
  toy.dov = [](const BigInt& n) { return 2 * n + 1; };

  // k = 1: l2 = max(n+2, ceil((3n+1)/2)); l1 = l2 + 4; l = 2*l1 + 1 - 1
  CHECK(bound_ell(BoundFamily::Rank, 1, 2, toy) == 16);
  CHECK(bound_ell(BoundFamily::Rank, 1, 5, toy) == 2 * (8 + 4) + 1 - 1);

  // k = 2 recomputed by hand for n = 1:
  //   f1 = 2*(R(max(ceil(3/2)+1, 4); 4) - 1) + 1 = 2*(4+4-1)+1 = 15
  //   f2 = 17; n3 = max(15, 17, 2) = 17; n2 = 1*17+1 = 18; n1 = R(18;2) = 20
  //   N = dov(20) = 41; l3 = 2*2^(2*40)+1
  //   l2 = max(4, 8*0+2) = 4; l1 = R(4;8) = 12
  //   l(2,1) = l(1, l3) + 9*(12-1)
  BigInt l3 = BigInt(2) * pow(BigInt(2), 80) + 1;
  BigInt cand_a = l3 + 2, cand_b = (3 * l3 + 2) / 2;
  BigInt inner_l2 = cand_a > cand_b ? cand_a : cand_b;
  BigInt expected = (2 * (inner_l2 + 4) + 1) - 1 + 99;
  CHECK(bound_ell(BoundFamily::Rank, 2, 1, toy) == expected);

  CHECK_THROWS_AS(bound_ell(BoundFamily::Rank, 1, 1), ResourceLimit);
  BoundRules none;
  CHECK_THROWS_AS(bound_ell(BoundFamily::Rank, 1, 1, none), std::invalid_argument);
}

TEST_CASE("argument validation and the bit budget") {
  CHECK_THROWS_AS(bound_ell(BoundFamily::Vertex, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(bound_ell(BoundFamily::Edge, 1, 0), std::invalid_argument);
  BoundRules tight = default_bound_rules();
  tight.max_bits = 16;
  CHECK_THROWS_AS(bound_ell(BoundFamily::Vertex, 1, 1000, tight), ResourceLimit);
  CHECK(bound_ell(BoundFamily::Vertex, 1, 1000) == BigInt(256) * 1000 * 1000 * 1000 * 1000);
}
