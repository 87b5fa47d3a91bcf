#include "taut/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "taut/omega_kappa.hpp"
#include "taut/partitions.hpp"
#include "taut/pinwheel.hpp"
#include "taut/psi_oracle.hpp"
#include "taut/render.hpp"

namespace taut {

namespace {

std::string show(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Every vector of `parts` non-negative integers summing to `total`.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      v[i] = left;
      f(v);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (total >= 0 && parts > 0) rec(0, total);
}

std::vector<int> random_composition(std::mt19937_64& rng, int total, int parts) {
  std::vector<int> v(static_cast<std::size_t>(parts), 0);
  std::uniform_int_distribution<int> bin(0, parts - 1);
  for (int u = 0; u < total; ++u) ++v[bin(rng)];
  return v;
}

std::vector<int> insert_at(std::vector<int> v, std::size_t pos, int value) {
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), value);
  return v;
}

// The published worked expansion of omega_1^3 omega_2^2 on Mbar_{g,3}, exactly as printed.
std::vector<PinwheelTerm> worked_example_printed() {
  return {
      {SetPartition(3, {{1}, {2}, {3}}), +1, {3, 2, 0}, {0, 0, 0}},
      {SetPartition(3, {{1, 2}, {3}}), -1, {4, 0}, {0, 0}},
      {SetPartition(3, {{1, 3}, {2}}), -1, {4, 2}, {0, 0}},
      {SetPartition(3, {{1}, {2, 3}}), -1, {3, 2}, {0, 0}},
      {SetPartition(3, {{1, 2, 3}}), -1, {4}, {0}},
      {SetPartition(3, {{1, 2, 3}}), +1, {3}, {1}},
  };
}

// The same expression with the spine exponents of {1,3}{2} and {1}{2,3}
// set to alpha - 1 (2 and 1), the only values of total degree 5.
std::vector<PinwheelTerm> worked_example_degree_consistent() {
  auto terms = worked_example_printed();
  terms[2].spine_exponents = {2, 2};
  terms[3].spine_exponents = {3, 1};
  return terms;
}

std::multiset<std::string> term_multiset(const std::vector<PinwheelTerm>& terms) {
  std::multiset<std::string> out;
  for (const auto& t : terms) out.insert(render_terms_json({t}));
  return out;
}

std::string compare_worked_example(const std::vector<PinwheelTerm>& reference) {
  const auto expected = term_multiset(reference);
  for (int g = 1; g <= 4; ++g) {
    auto terms = expand_graph_formula(OmegaMonomial(g, {3, 2, 0}));
    if (terms.size() != 6) return "g=" + std::to_string(g) + ": " + std::to_string(terms.size()) + " terms, expected 6";
    std::set<std::vector<Part>> strata;
    for (const auto& t : terms) strata.insert(t.partition.parts());
    if (strata.size() != 5) return "expected 5 strata";
    const auto got = term_multiset(terms);
    if (got == expected) continue;
    std::string missing;
    for (const auto& t : reference) {
      if (!got.contains(render_terms_json({t}))) {
        missing += " " + render_terms_plain({t}) + " (degree " + std::to_string(t.degree()) + ", K = 5);";
      }
    }
    return "g=" + std::to_string(g) + ": reference terms not produced:" + missing;
  }
  return {};
}

std::string check_worked_example_printed() { return compare_worked_example(worked_example_printed()); }
std::string check_worked_example_consistent() { return compare_worked_example(worked_example_degree_consistent()); }

std::string check_genus0_normalization() {
  PsiOracle oracle;
  for (int n = 3; n <= 10; ++n) {
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    k[0] = n - 3;
    if (oracle.psi_top(0, k) != Rational(1)) return "psi_top(0," + show(k) + ") != 1";
  }
  return {};
}

std::string check_oracle_validation() {
  PsiOracle standard;
  PsiOracle dvv(Recursion::dvv_first);
  std::string failure;
  for (int n = 3; n <= 8 && failure.empty(); ++n) {
    for_each_composition(n - 3, n, [&](const std::vector<int>& k) {
      if (!failure.empty()) return;
      Rational closed = psi_top_genus0_closed(k);
      if (standard.psi_top(0, k) != closed || dvv.psi_top(0, k) != closed) {
        failure = "genus 0 " + show(k) + ": recursion disagrees with closed form " + closed.to_string();
      }
    });
  }
  if (!failure.empty()) return failure;

  // String and dilaton identities, evaluated on the DVV-first oracle so that
  // neither side is produced by the identity being tested.
  std::mt19937_64 rng(20240611);
  int string_checks = 0;
  int dilaton_checks = 0;
  while (string_checks + dilaton_checks < 200) {
    const bool use_string = (string_checks + dilaton_checks) % 2 == 0;
    const int g = std::uniform_int_distribution<int>(0, 3)(rng);
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);  // marks before adding the new one
    if (2 * g - 2 + n <= 0) continue;
    const int total = use_string ? 3 * g - 3 + n + 1 : 3 * g - 3 + n;
    if (total < 0) continue;
    const auto k = random_composition(rng, total, n);
    const auto pos = std::uniform_int_distribution<std::size_t>(0, k.size())(rng);

    if (use_string) {
      Rational lhs = dvv.psi_top(g, insert_at(k, pos, 0));
      Rational rhs;
      for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] == 0) continue;
        auto lowered = k;
        --lowered[j];
        rhs += dvv.psi_top(g, lowered);
      }
      if (lhs != rhs) return "string equation fails at g=" + std::to_string(g) + " k=" + show(k);
      if (lhs != standard.psi_top(g, insert_at(k, pos, 0))) return "oracle strategies disagree at " + show(k);
      ++string_checks;
    } else {
      Rational lhs = dvv.psi_top(g, insert_at(k, pos, 1));
      Rational rhs = Rational(2 * g - 2 + n) * dvv.psi_top(g, k);
      if (lhs != rhs) return "dilaton equation fails at g=" + std::to_string(g) + " k=" + show(k);
      if (lhs != standard.psi_top(g, insert_at(k, pos, 1))) return "oracle strategies disagree at " + show(k);
      ++dilaton_checks;
    }
  }
  return {};
}

std::string check_expansion_consistency() {
  PsiOracle oracle;
  std::string failure;
  for (int g = 1; g <= 2; ++g) {
    for (int n = 1; n <= 4; ++n) {
      for_each_composition(3 * g - 3 + n, n, [&](const std::vector<int>& k) {
        if (!failure.empty()) return;
        OmegaMonomial m(g, k);
        Rational direct = omega_top(m, oracle);
        if (integrate_expansion(m, oracle) != direct) {
          failure = "g=" + std::to_string(g) + " k=" + show(k) + ": expansion integral != omega_top " +
                    direct.to_string();
          return;
        }
        Rational full;
        for (const auto& t : expand_graph_formula(m, {.full_series = true})) {
          full += evaluate_pinwheel_term(g, n, t, oracle);
        }
        if (full != direct) failure = "g=" + std::to_string(g) + " k=" + show(k) + ": full series integral differs";
      });
    }
  }
  return failure;
}

std::string check_pushforward() {
  PsiOracle oracle;
  std::string failure;
  for (int g = 2; g <= 3; ++g) {
    for (int n = 1; n <= 3; ++n) {
      for_each_composition(3 * g - 3, n, [&](const std::vector<int>& l) {
        if (failure.empty() && !check_pushforward_identity(g, l, oracle)) {
          failure = "pushforward identity fails at g=" + std::to_string(g) + " l=" + show(l);
        }
      });
    }
  }
  return failure;
}

std::string expect_value(const char* what, const Rational& got, const Rational& want) {
  if (got == want) return {};
  return std::string(what) + " = " + got.to_string() + ", expected " + want.to_string();
}

std::string check_permutation_symmetry() {
  PsiOracle oracle;
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 100) {
    const int g = std::uniform_int_distribution<int>(0, 2)(rng);
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    if (2 * g - 2 + n <= 0) continue;
    const int dim = 3 * g - 3 + n;
    if (dim < 0) continue;
    auto k = random_composition(rng, dim, n);
    auto shuffled = k;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (oracle.psi_top(g, k) != oracle.psi_top(g, shuffled)) return "psi_top not symmetric at " + show(k);
    if (g >= 1 && omega_top(OmegaMonomial(g, k), oracle) != omega_top(OmegaMonomial(g, shuffled), oracle)) {
      return "omega_top not symmetric at " + show(k);
    }
    if (g == 2 && n <= 3) {
      auto l = random_composition(rng, 3, n);
      auto l2 = l;
      std::shuffle(l2.begin(), l2.end(), rng);
      if (kappa_top(KappaMonomial(g, l), oracle) != kappa_top(KappaMonomial(g, l2), oracle)) {
        return "kappa_top not symmetric at " + show(l);
      }
    }
    ++done;
  }
  return {};
}

std::string check_dimension_vanishing() {
  PsiOracle oracle;
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int g = std::uniform_int_distribution<int>(0, 3)(rng);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    if (2 * g - 2 + n <= 0) continue;
    const int dim = 3 * g - 3 + n;
    int total = std::uniform_int_distribution<int>(0, dim + 4)(rng);
    if (total == dim) ++total;
    auto k = random_composition(rng, total, n);
    if (!oracle.psi_top(g, k).is_zero()) return "psi_top nonzero off dimension at " + show(k);
    if (g >= 1) {
      const auto before = oracle.cache().size();
      if (!omega_top(OmegaMonomial(g, k), oracle).is_zero()) return "omega_top nonzero off dimension";
      if (!integrate_expansion(OmegaMonomial(g, k), oracle).is_zero()) return "integrate_expansion nonzero off dimension";
      if (oracle.cache().size() != before) return "omega_top consulted the oracle off dimension";
    }
    if (g >= 2) {
      const auto before = oracle.cache().size();
      auto l = random_composition(rng, 3 * g - 3 + 1 + trial % 3, n);
      if (!kappa_top(KappaMonomial(g, l), oracle).is_zero()) return "kappa_top nonzero off dimension";
      if (oracle.cache().size() != before) return "kappa_top consulted the oracle off dimension";
    }
  }
  return {};
}

std::string check_bell_numbers() {
  // Bell triangle, independent of the restricted-growth enumeration.
  std::vector<long> row{1};
  std::vector<long> bell{1};
  for (int i = 1; i <= 8; ++i) {
    std::vector<long> next{row.back()};
    for (long x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  const long frozen[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    auto parts = enumerate_set_partitions(n);
    const auto count = static_cast<long>(parts.size());
    if (count != frozen[n - 1] || count != bell[n]) {
      return "n=" + std::to_string(n) + ": " + std::to_string(count) + " partitions, expected " +
             std::to_string(frozen[n - 1]);
    }
    std::set<std::vector<Part>> distinct;
    for (const auto& p : parts) {
      if (canonicalize(p.parts()) != p.parts()) return "enumerated partition not canonical";
      SetPartition rebuilt(n, p.parts());  // validates cover and disjointness
      distinct.insert(rebuilt.parts());
    }
    if (static_cast<long>(distinct.size()) != count) return "duplicate partitions at n=" + std::to_string(n);
  }
  return {};
}

std::string check_term_invariants() {
  std::vector<OmegaMonomial> inputs{OmegaMonomial(2, {3, 2, 0}), OmegaMonomial(1, {0, 0, 0, 0})};
  for (int g = 1; g <= 2; ++g) {
    for (int n = 1; n <= 4; ++n) {
      for (int total = 0; total <= 3 * g - 3 + n; ++total) {
        for_each_composition(total, n, [&](const std::vector<int>& k) { inputs.emplace_back(g, k); });
      }
    }
  }
  for (const auto& m : inputs) {
    for (bool full : {false, true}) {
      const auto terms = expand_graph_formula(m, {.full_series = full});
      if (terms.empty()) return "empty expansion for " + show(m.exponents());
      for (const auto& t : terms) {
        if (auto why = term_invariant_violation(m, t)) return show(m.exponents()) + ": " + *why;
      }
      if (m.marks() == 1 && (terms.size() != 1 || terms[0].sign != 1)) return "n=1 expansion is not +psi_1^k";
    }
  }
  return {};
}

std::string check_lowest_terms() {
  PsiOracle oracle;
  for (int g = 0; g <= 3; ++g) {
    for (int n = 1; n <= 4; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      for_each_composition(3 * g - 3 + n, n, [&](const std::vector<int>& k) { oracle.psi_top(g, k); });
    }
  }
  for (const auto& [key, value] : oracle.cache().snapshot()) {
    mpz_class gcd;
    mpz_gcd(gcd.get_mpz_t(), value.raw().get_num_mpz_t(), value.raw().get_den_mpz_t());
    if (gcd != 1 || value.raw().get_den() <= 0) return "value not in lowest terms: " + value.to_string();
  }
  return {};
}

}  // namespace

std::vector<SelftestCheck> selftest_checks() {
  std::vector<SelftestCheck> checks{
      {"worked example omega_1^3 omega_2^2: printed terms", 1.0, check_worked_example_printed},
      {"worked example omega_1^3 omega_2^2: degree-consistent terms", 1.0, check_worked_example_consistent},
      {"genus-0 normalization n=3..10", 1.0, check_genus0_normalization},
      {"oracle validation: genus-0 closed form n<=8, string/dilaton x200", 30.0, check_oracle_validation},
      {"expansion integral == omega_top, g in {1,2}, n<=4", 60.0, check_expansion_consistency},
      {"pushforward identity, g in {2,3}, n<=3", 60.0, check_pushforward},
  };

  const std::vector<int> tau1{1}, tau4{4}, k111{1, 1, 1}, k12{1, 2}, k11{1, 1};
  checks.push_back({"golden psi_top(1,(1)) = 1/24", 1.0, [=] {
                      PsiOracle o;
                      return expect_value("psi_top(1,(1))", o.psi_top(1, tau1), Rational(1, 24));
                    }});
  checks.push_back({"golden psi_top(2,(4)) = 1/1152", 1.0, [=] {
                      PsiOracle o;
                      return expect_value("psi_top(2,(4))", o.psi_top(2, tau4), Rational(1, 1152));
                    }});
  checks.push_back({"golden kappa_top(2,(1,1,1)) = 43/2880", 1.0, [=] {
                      PsiOracle o;
                      return expect_value("kappa_top(2,(1,1,1))", kappa_top(KappaMonomial(2, k111), o),
                                          Rational(43, 2880));
                    }});
  checks.push_back({"golden kappa_top(2,(1,2)) = 1/240", 1.0, [=] {
                      PsiOracle o;
                      return expect_value("kappa_top(2,(1,2))", kappa_top(KappaMonomial(2, k12), o), Rational(1, 240));
                    }});
  checks.push_back({"golden omega_top(1,(1,1)) = 0", 1.0, [=] {
                      PsiOracle o;
                      return expect_value("omega_top(1,(1,1))", omega_top(OmegaMonomial(1, k11), o), Rational(0));
                    }});

  checks.push_back({"property: permutation symmetry x100", 30.0, check_permutation_symmetry});
  checks.push_back({"property: dimension vanishing", 30.0, check_dimension_vanishing});
  checks.push_back({"property: Bell numbers through n=8", 30.0, check_bell_numbers});
  checks.push_back({"property: pinwheel term invariants", 30.0, check_term_invariants});
  checks.push_back({"property: results in lowest terms", 30.0, check_lowest_terms});
  return checks;
}

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> results;
  for (const auto& check : selftest_checks()) {
    CheckResult r{check.name, false, {}, 0.0, check.budget_seconds};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = check.run();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.seconds > r.budget_seconds) {
      r.passed = false;
      std::ostringstream os;
      os << "took " << r.seconds << " s, budget " << r.budget_seconds << " s";
      r.detail = os.str();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace taut
