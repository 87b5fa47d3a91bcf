#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "taut/errors.hpp"
#include "taut/partitions.hpp"

using namespace taut;

namespace {

// Every map [n] -> [n] of labels to blocks, collapsed to canonical partitions.
std::set<std::vector<Part>> brute_force_partitions(int n) {
  std::set<std::vector<Part>> out;
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<Part> parts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parts[block[i]].push_back(i + 1);
    std::erase_if(parts, [](const Part& p) { return p.empty(); });
    out.insert(canonicalize(parts));
    int i = 0;
    while (i < n && ++block[i] == n) block[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration matches brute force over label-to-block maps") {
  for (int n = 1; n <= 6; ++n) {
    auto expected = brute_force_partitions(n);
    std::set<std::vector<Part>> got;
    for (const auto& p : enumerate_set_partitions(n)) got.insert(p.parts());
    CHECK(enumerate_set_partitions(n).size() == expected.size());
    CHECK(got == expected);
  }
  CHECK(brute_force_partitions(4).size() == 15);
}

TEST_CASE("small enumerations") {
  auto one = enumerate_set_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts() == std::vector<Part>{{1}});

  auto three = enumerate_set_partitions(3);
  REQUIRE(three.size() == 5);
  CHECK(three.front().parts() == std::vector<Part>{{1, 2, 3}});
  CHECK(three.back().parts() == std::vector<Part>{{1}, {2}, {3}});
  CHECK(three.back().is_trivial());
}

TEST_CASE("Bell numbers through n = 8") {
  const std::size_t bell[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_set_partitions(n).size() == bell[n - 1]);
}

TEST_CASE("n = 0 is rejected") {
  CHECK_THROWS_AS(enumerate_set_partitions(0), InvalidInput);
  CHECK_THROWS_AS(SetPartition(0, {}), InvalidInput);
}

TEST_CASE("construction validates and canonicalizes") {
  SetPartition p(4, {{4, 2}, {3}, {1}});
  CHECK(p.parts() == std::vector<Part>{{1}, {2, 4}, {3}});
  CHECK(p == SetPartition(4, {{3}, {1}, {2, 4}}));

  CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), InvalidInput);          // 3 missing
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), InvalidInput);  // overlap
  CHECK_THROWS_AS(SetPartition(3, {{1, 2, 3}, {}}), InvalidInput);   // empty part
  CHECK_THROWS_AS(SetPartition(3, {{1, 2, 4}}), InvalidInput);       // out of range
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    for (auto p : enumerate_set_partitions(5)) {
      auto parts = p.parts();
      for (auto& part : parts) std::shuffle(part.begin(), part.end(), rng);
      std::shuffle(parts.begin(), parts.end(), rng);
      auto once = canonicalize(parts);
      CHECK(canonicalize(once) == once);
      CHECK(once == p.parts());
    }
  }
}

TEST_CASE("part weights") {
  SetPartition p(3, {{1, 2}, {3}});
  const std::vector<int> k{3, 2, 0};
  CHECK(part_weights(p, k) == std::vector<int>{5, 0});
  CHECK(part_weights(SetPartition(3, {{1}, {2}, {3}}), std::vector<int>{0, 0, 0}) == std::vector<int>{0, 0, 0});
  CHECK(part_weights(SetPartition(3, {{1, 2, 3}}), k) == std::vector<int>{5});
  CHECK_THROWS_AS(part_weights(p, std::vector<int>{1, 2}), InvalidInput);
}

TEST_CASE("part weights preserve the total") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> w(0, 9);
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> k(static_cast<std::size_t>(n));
    for (auto& x : k) x = w(rng);
    const int total = std::accumulate(k.begin(), k.end(), 0);
    for (const auto& p : enumerate_set_partitions(n)) {
      auto alpha = part_weights(p, k);
      CHECK(std::accumulate(alpha.begin(), alpha.end(), 0) == total);
    }
  }
}

TEST_CASE("codimension counts non-singleton parts") {
  CHECK(codimension(SetPartition(3, {{1}, {2}, {3}})) == 0);
  CHECK(codimension(SetPartition(3, {{1, 2}, {3}})) == 1);
  CHECK(codimension(SetPartition(3, {{1, 2, 3}})) == 1);
  CHECK(codimension(SetPartition(7, {{1}, {4}, {2, 5}, {3, 6, 7}})) == 2);
}
