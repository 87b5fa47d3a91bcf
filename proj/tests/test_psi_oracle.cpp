#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <thread>

#include "taut/errors.hpp"
#include "taut/psi_oracle.hpp"

using namespace taut;
namespace fs = std::filesystem;

namespace {

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

// Genus 0 by the string equation alone, no memo.
Rational genus0_by_string(std::vector<int> k) {
  int n = static_cast<int>(k.size());
  int sum = 0;
  for (int x : k) sum += x;
  if (n < 3 || sum != n - 3) return Rational(0);
  if (n == 3) return Rational(1);
  auto zero = std::find(k.begin(), k.end(), 0);
  k.erase(zero);
  Rational total;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    auto lowered = k;
    --lowered[j];
    total += genus0_by_string(lowered);
  }
  return total;
}

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

fs::path temp_file(const std::string& name) {
  auto dir = fs::temp_directory_path() / "taut_tests";
  fs::create_directories(dir);
  auto path = dir / name;
  fs::remove(path);
  return path;
}

}  // namespace

TEST_CASE("seed and small values") {
  PsiOracle o;
  CHECK(o.psi_top(0, v({0, 0, 0})) == Rational(1));
  CHECK(o.psi_top(0, v({1, 1, 0, 0, 0})) == Rational(2));
  CHECK(o.psi_top(1, v({1})) == Rational(1, 24));
  CHECK(o.psi_top(2, v({4})) == Rational(1, 1152));
  CHECK(o.psi_top(1, v({0, 0})) == Rational(0));
  for (int n = 4; n <= 8; ++n) {
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    k[0] = n - 3;
    CHECK(o.psi_top(0, k) == Rational(1));
  }
}

TEST_CASE("published Witten-Kontsevich values") {
  for (auto strategy : {Recursion::string_dilaton_first, Recursion::dvv_first}) {
    PsiOracle o(strategy);
    CHECK(o.psi_top(2, v({2, 2, 2})) == Rational(7, 240));
    CHECK(o.psi_top(2, v({3, 2})) == Rational(29, 5760));
    CHECK(o.psi_top(3, v({7})) == Rational(1, 82944));
    CHECK(o.psi_top(1, v({1, 1})) == Rational(1, 24));
  }
}

TEST_CASE("one-point closed form <tau_{3g-2}>_g = 1/(24^g g!)") {
  PsiOracle o;
  for (int g = 1; g <= 5; ++g) {
    Rational expected(1);
    for (int i = 0; i < g; ++i) expected /= Rational(24);
    expected /= factorial(g);
    CHECK(o.psi_top(g, std::vector<int>{3 * g - 2}) == expected);
  }
}

TEST_CASE("genus one <tau_1^n>_1 = (n-1)!/24") {
  PsiOracle o(Recursion::dvv_first);
  for (int n = 1; n <= 7; ++n) {
    CHECK(o.psi_top(1, std::vector<int>(static_cast<std::size_t>(n), 1)) == factorial(n - 1) / Rational(24));
  }
}

TEST_CASE("genus zero agrees with a memo-free string recursion and the closed form") {
  PsiOracle o(Recursion::dvv_first);
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& k, int i, int left) {
    if (i + 1 == static_cast<int>(k.size())) {
      k[i] = left;
      CHECK(o.psi_top(0, k) == genus0_by_string(k));
      CHECK(psi_top_genus0_closed(k) == genus0_by_string(k));
      return;
    }
    for (int x = 0; x <= left; ++x) {
      k[i] = x;
      rec(k, i + 1, left - x);
    }
  };
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> k(static_cast<std::size_t>(n));
    rec(k, 0, n - 3);
  }
}

TEST_CASE("closed form domain") {
  CHECK(psi_top_genus0_closed(v({0, 0, 0})) == Rational(1));
  CHECK(psi_top_genus0_closed(v({1, 1, 0, 0, 0})) == Rational(2));
  CHECK(psi_top_genus0_closed(v({2, 0, 0, 0, 0})) == Rational(1));
  CHECK_THROWS_AS(psi_top_genus0_closed(v({1, 0, 0})), InvalidInput);
  CHECK_THROWS_AS(psi_top_genus0_closed(v({0, 0})), InvalidInput);
}

TEST_CASE("invalid input") {
  PsiOracle o;
  CHECK_THROWS_AS(o.psi_top(0, v({0, 0})), InvalidInput);
  CHECK_THROWS_AS(o.psi_top(1, std::vector<int>{}), InvalidInput);
  CHECK_THROWS_AS(o.psi_top(1, v({2, -1})), InvalidInput);
  CHECK_THROWS_AS(o.psi_top(-1, v({0, 0, 0, 0, 0})), InvalidInput);
}

TEST_CASE("order does not matter and keys are canonical") {
  PsiOracle o;
  CHECK(o.psi_top(2, v({0, 2, 5})) == o.psi_top(2, v({5, 0, 2})));
  auto key = IntersectionKey::make(2, v({5, 0, 2}));
  CHECK(key.exponents == v({0, 2, 5}));
  CHECK(key.dimension() == 6);
}

TEST_CASE("off-dimension values are not memoized") {
  PsiOracle o;
  o.psi_top(3, v({1, 1}));
  CHECK(o.cache().size() == 0);
}

TEST_CASE("cache get/put contract") {
  PsiCache c;
  auto key = IntersectionKey::make(2, v({4}));
  CHECK_FALSE(c.get(key).has_value());
  c.put(key, Rational(1, 1152));
  CHECK(c.get(key) == Rational(1, 1152));
  c.put(key, Rational(1, 1152));
  CHECK(c.size() == 1);
  CHECK_THROWS_AS(c.put(key, Rational(1, 1153)), IntegrityError);
}

TEST_CASE("cache file round trip") {
  auto path = temp_file("roundtrip.ndjson");
  PsiOracle o;
  o.psi_top(2, v({2, 2, 2}));
  o.cache().save(path);

  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == R"({"g":0,"k":[0,0,0],"num":"1","den":"1"})");

  PsiCache loaded;
  loaded.load(path);
  CHECK(loaded.size() == o.cache().size());
  CHECK(loaded.get(IntersectionKey::make(2, v({2, 2, 2}))) == Rational(7, 240));
}

TEST_CASE("cache file: missing tolerated, conflicts and garbage rejected") {
  PsiCache c;
  CHECK_NOTHROW(c.load(temp_file("absent.ndjson")));
  CHECK(c.size() == 0);

  auto conflict = temp_file("conflict.ndjson");
  std::ofstream(conflict) << R"({"g":2,"k":[4],"num":"1","den":"1152"})" << '\n'
                          << R"({"g":2,"k":[4],"num":"1","den":"1153"})" << '\n';
  CHECK_THROWS_AS(c.load(conflict), IntegrityError);

  auto garbage = temp_file("garbage.ndjson");
  std::ofstream(garbage) << "not json\n";
  PsiCache d;
  CHECK_THROWS_AS(d.load(garbage), IntegrityError);
}

TEST_CASE("warm cache gives identical values") {
  auto path = temp_file("warm.ndjson");
  PsiOracle cold;
  Rational a = cold.psi_top(3, v({2, 2, 3, 2}));
  cold.cache().save(path);
  PsiOracle warm;
  warm.cache().load(path);
  const auto before = warm.cache().size();
  CHECK(warm.psi_top(3, v({2, 2, 3, 2})) == a);
  CHECK(warm.cache().size() == before);
}

TEST_CASE("concurrent callers see consistent values") {
  PsiOracle shared;
  PsiOracle reference;
  const std::vector<std::vector<int>> inputs{{2, 2, 3, 3}, {3, 3, 3}, {7}, {4, 4, 1}, {5, 2, 2}, {2, 2, 2, 2, 3}};
  std::vector<std::thread> threads;
  std::vector<Rational> results(inputs.size() * 4);
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] { results[t] = shared.psi_top(3, inputs[t % inputs.size()]); });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < results.size(); ++t) CHECK(results[t] == reference.psi_top(3, inputs[t % inputs.size()]));
}
