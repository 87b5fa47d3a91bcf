#include <doctest.h>

#include "taut/errors.hpp"
#include "taut/omega_kappa.hpp"
#include "../src/parallel_sum.hpp"

using namespace taut;

TEST_CASE("omega_top examples") {
  CHECK(omega_top(OmegaMonomial(1, {1, 1})) == Rational(0));
  CHECK(omega_top(OmegaMonomial(2, {2, 2, 2})) == Rational(43, 2880));
  for (int g = 1; g <= 4; ++g) {
    CHECK(omega_top(OmegaMonomial(g, {3 * g - 2})) == psi_top(g, std::vector<int>{3 * g - 2}));
  }
}

TEST_CASE("omega_top with zero exponents") {
  // <tau_2 tau_0>_1 - <tau_1>_1; omega_1 is pulled back from Mbar_{1,1}, so omega_1^2 = 0.
  OmegaMonomial m(1, {2, 0});
  CHECK(omega_top(m) == integrate_expansion(m));
  CHECK(omega_top(m) == Rational(0));
  // {2,3} has weight zero and is skipped; the rest is checked against the expansion.
  OmegaMonomial z(2, {5, 0, 0});
  CHECK(omega_top(z) == integrate_expansion(z));
}

TEST_CASE("kappa_top examples") {
  CHECK(kappa_top(KappaMonomial(2, {3})) == Rational(1, 1152));
  CHECK(kappa_top(KappaMonomial(2, {1, 1, 1})) == Rational(43, 2880));
  CHECK(kappa_top(KappaMonomial(2, {1, 2})) == Rational(1, 240));
  // <tau_2 tau_3>_2 - <tau_4>_2 from published values
  CHECK(Rational(29, 5760) - Rational(1, 1152) == Rational(1, 240));
}

TEST_CASE("kappa monomial validation") {
  CHECK_THROWS_AS(KappaMonomial(1, {0}), InvalidInput);
  CHECK_THROWS_AS(KappaMonomial(2, {}), InvalidInput);
  CHECK_THROWS_AS(KappaMonomial(2, {-1, 4}), InvalidInput);
  CHECK(kappa_top(KappaMonomial(2, {1, 1})) == Rational(0));
}

TEST_CASE("kappa_0 entries follow the literal partition sum") {
  // Each l_i = 0 adds a mark; the result equals (2g - 2) times the monomial
  // without it, matching kappa_0 = 2g - 2.
  PsiOracle o;
  CHECK(kappa_top(KappaMonomial(2, {0, 3}), o) == Rational(2) * kappa_top(KappaMonomial(2, {3}), o));
  CHECK(kappa_top(KappaMonomial(3, {0, 2, 4}), o) == Rational(4) * kappa_top(KappaMonomial(3, {2, 4}), o));
}

TEST_CASE("pushforward identity") {
  CHECK(check_pushforward_identity(2, std::vector<int>{3}));
  CHECK(check_pushforward_identity(2, std::vector<int>{1, 1, 1}));
  CHECK(check_pushforward_identity(3, std::vector<int>{2, 2, 2}));
  CHECK(check_pushforward_identity(4, std::vector<int>{3, 3, 2, 1}));
}

TEST_CASE("off-dimension inputs never touch the oracle") {
  PsiOracle o;
  CHECK(omega_top(OmegaMonomial(2, {5, 5}), o) == Rational(0));
  CHECK(kappa_top(KappaMonomial(3, {1, 1}), o) == Rational(0));
  CHECK(o.cache().size() == 0);
}

TEST_CASE("parallel kernels match serial references") {
  PsiOracle o;
  for (auto k : std::vector<std::vector<int>>{{2, 2, 2}, {4, 2, 1, 0}, {1, 1, 1, 1, 1, 2}, {2, 1, 1, 1, 1, 1, 2}}) {
    OmegaMonomial m(2, k);
    CHECK(omega_top(m, o) == omega_top_serial(m, o));
  }
  for (auto l : std::vector<std::vector<int>>{{3, 3}, {1, 1, 2, 2}, {1, 1, 1, 1, 1, 1}, {0, 2, 2, 2}}) {
    KappaMonomial m(3, l);
    CHECK(kappa_top(m, o) == kappa_top_serial(m, o));
  }
}

TEST_CASE("errors inside the parallel kernel reach the caller") {
  auto sum = detail::parallel_sum(100, [](std::size_t i) { return Rational(static_cast<long>(i)); });
  CHECK(sum == Rational(4950));
  CHECK_THROWS_AS(detail::parallel_sum(100,
                                       [](std::size_t i) {
                                         if (i == 37) throw IntegrityError("boom");
                                         return Rational(1);
                                       }),
                  IntegrityError);
}
