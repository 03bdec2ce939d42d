#include "qcorr/partitions.hpp"

#include <cstdint>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qcorr/errors.hpp"

using namespace qcorr;

TEST_CASE("subset mask basics") {
  SubsetMask s = SubsetMask::of({1, 3});
  CHECK(s.count() == 2);
  CHECK(s.contains(1));
  CHECK(!s.contains(2));
  CHECK(s.lowest() == 1);
  CHECK(s.parties() == std::vector<int>{1, 3});
  CHECK(SubsetMask::full(3).bits() == 0b111u);
  CHECK(s.subset_of(SubsetMask::full(3)));
  CHECK_THROWS_AS(SubsetMask::of({0}), DomainError);
}

TEST_CASE("partition counts match the Bell recurrence") {
  // Oracle: B(n+1) = sum C(n,k) B(k); frozen small values below.
  CHECK(oracles::bell_number(3) == 5);
  CHECK(oracles::bell_number(4) == 15);

  CHECK(enumerate_partitions(SubsetMask::of({1})).size() == 1);
  CHECK(enumerate_partitions(SubsetMask::of({1, 2, 3})).size() == 5);
  CHECK(enumerate_partitions(SubsetMask::of({1, 2, 3, 4})).size() == 15);
  for (int n = 1; n <= 8; ++n) {
    CHECK(enumerate_partitions(SubsetMask::full(n)).size() == oracles::bell_number(n));
  }
}

TEST_CASE("proper partitions") {
  const auto pair = enumerate_proper_partitions(SubsetMask::of({1, 2}));
  REQUIRE(pair.size() == 1);
  CHECK(pair[0].blocks == std::vector<SubsetMask>{SubsetMask::of({1}), SubsetMask::of({2})});

  CHECK(enumerate_proper_partitions(SubsetMask::of({1, 2, 3})).size() == 4);
  CHECK(enumerate_proper_partitions(SubsetMask::of({1})).empty());
}

TEST_CASE("every partition satisfies the invariants") {
  const SubsetMask ground = SubsetMask::of({2, 4, 5, 7});
  const auto parts = enumerate_partitions(ground);
  CHECK(parts.size() == oracles::bell_number(4));
  std::set<std::vector<std::uint32_t>> seen;
  for (const SetPartition& p : parts) {
    CHECK(p.ground_set == ground);
    SubsetMask covered;
    int prev_lowest = 0;
    std::vector<std::uint32_t> key;
    for (const SubsetMask& b : p.blocks) {
      CHECK(!b.empty());
      CHECK(covered.disjoint_with(b));
      CHECK(b.lowest() > prev_lowest);  // canonical block order
      prev_lowest = b.lowest();
      covered = covered.unite(b);
      key.push_back(b.bits());
    }
    CHECK(covered == ground);
    CHECK(seen.insert(key).second);  // no duplicates
  }
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_partitions(SubsetMask::full(6));
  const auto b = enumerate_partitions(SubsetMask::full(6));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].blocks == b[i].blocks);
}

TEST_CASE("pseudo-state coefficients") {
  CHECK(pseudo_coefficient(2) == 1);
  CHECK(pseudo_coefficient(3) == -2);
  CHECK(pseudo_coefficient(4) == 6);
  CHECK(pseudo_coefficient(20) == 121645100408832000LL);
  CHECK_THROWS_AS(pseudo_coefficient(1), DomainError);
  CHECK_THROWS_AS(pseudo_coefficient(0), DomainError);
}

TEST_CASE("alternating coefficient sum telescopes to zero") {
  // sum over all partitions of (-1)^(M-1) (M-1)! is 1 for n=1, else 0;
  // this identity is what forces the identity coefficient of the
  // stabilizer expansion to vanish.
  for (int n = 1; n <= 10; ++n) {
    std::int64_t sum = 0;
    for_each_partition(SubsetMask::full(n), [&](const SetPartition& p) {
      const int m = p.block_count();
      std::int64_t fact = 1;
      for (int k = 2; k < m; ++k) fact *= k;
      sum += (m % 2 == 1) ? fact : -fact;
    });
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_partitions(SubsetMask()), DomainError);
  CHECK_THROWS_AS(enumerate_partitions(SubsetMask::full(15)), ResourceError);
}
