#include "taut/pinwheel.hpp"

#include <numeric>
#include <string>

#include "parallel_sum.hpp"
#include "taut/errors.hpp"

namespace taut {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

OmegaMonomial::OmegaMonomial(int genus, std::vector<int> exponents) : genus_(genus), exponents_(std::move(exponents)) {
  if (genus_ < 1) throw InvalidInput("omega monomials need genus >= 1");
  if (exponents_.empty()) throw InvalidInput("omega monomials need n >= 1");
  for (int k : exponents_) {
    if (k < 0) throw InvalidInput("negative omega exponent " + std::to_string(k));
  }
}

int OmegaMonomial::total_degree() const { return sum_of(exponents_); }

int PinwheelTerm::degree() const { return codimension(partition) + sum_of(spine_exponents) + sum_of(tail_exponents); }

std::vector<PinwheelTerm> expand_graph_formula(const OmegaMonomial& m, ExpandOptions options) {
  std::vector<PinwheelTerm> terms;
  for_each_set_partition(m.marks(), [&](const SetPartition& p) {
    const auto alpha = part_weights(p, m.exponents());
    const std::size_t parts = p.length();

    // Largest admissible tail exponent per part; -1 marks a singleton.
    std::vector<int> max_tail(parts, -1);
    for (std::size_t j = 0; j < parts; ++j) {
      if (p.part_size(j) == 1) continue;
      if (alpha[j] == 0) return;  // the series vanishes identically
      max_tail[j] = alpha[j] - 1;
      if (!options.full_series) max_tail[j] = std::min(max_tail[j], static_cast<int>(p.part_size(j)) - 2);
    }

    // Odometer over tail exponents, lexicographic with the first part most significant.
    std::vector<int> tails(parts, 0);
    for (;;) {
      PinwheelTerm t{p, 1, std::vector<int>(parts), tails};
      for (std::size_t j = 0; j < parts; ++j) {
        if (max_tail[j] < 0) {
          t.spine_exponents[j] = alpha[j];
        } else {
          t.spine_exponents[j] = alpha[j] - 1 - tails[j];
          if (tails[j] % 2 == 0) t.sign = -t.sign;  // (-1)^{b+1}
        }
      }
      const int spine_dim = 3 * m.genus() - 3 + static_cast<int>(parts);
      if (!options.simplify || sum_of(t.spine_exponents) <= spine_dim) terms.push_back(std::move(t));

      std::size_t j = parts;
      while (j > 0 && (max_tail[j - 1] < 0 || tails[j - 1] == max_tail[j - 1])) --j;
      if (j == 0) break;
      ++tails[j - 1];
      for (std::size_t i = j; i < parts; ++i) tails[i] = 0;
    }
  });
  return terms;
}

void validate_term(int n, const PinwheelTerm& t) {
  const std::size_t parts = t.partition.length();
  if (t.partition.n() != n) {
    throw InvalidInput("term is over [" + std::to_string(t.partition.n()) + "], expected [" + std::to_string(n) + "]");
  }
  if (t.sign != 1 && t.sign != -1) throw InvalidInput("term sign must be +1 or -1");
  if (t.spine_exponents.size() != parts || t.tail_exponents.size() != parts) {
    throw InvalidInput("term needs one spine and one tail exponent per part");
  }
  for (std::size_t j = 0; j < parts; ++j) {
    if (t.spine_exponents[j] < 0 || t.tail_exponents[j] < 0) throw InvalidInput("negative exponent in term");
    if (t.partition.part_size(j) == 1 && t.tail_exponents[j] != 0) {
      throw InvalidInput("singleton part " + std::to_string(j + 1) + " has no tail flag");
    }
  }
}

std::optional<std::string> term_invariant_violation(const OmegaMonomial& m, const PinwheelTerm& t) {
  try {
    validate_term(m.marks(), t);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  const auto alpha = part_weights(t.partition, m.exponents());
  int sign = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const int a = t.spine_exponents[j];
    const int b = t.tail_exponents[j];
    const std::string where = "part " + std::to_string(j + 1) + ": ";
    if (t.partition.part_size(j) == 1) {
      if (a != alpha[j]) return where + "singleton spine exponent differs from its weight";
      continue;
    }
    if (alpha[j] == 0) return where + "zero-weight tail is outside the support";
    if (a + b != alpha[j] - 1) return where + "a + b != alpha - 1";
    if (b % 2 == 0) sign = -sign;
  }
  if (sign != t.sign) return std::string("sign does not match prod (-1)^{b_j+1}");
  if (t.degree() != m.total_degree()) return std::string("term degree differs from the monomial degree");
  return std::nullopt;
}

Rational evaluate_pinwheel_term(int genus, int n, const PinwheelTerm& t, PsiOracle& oracle) {
  validate_term(n, t);
  if (genus < 0) throw InvalidInput("negative genus");
  if (t.degree() != 3 * genus - 3 + n) return Rational(0);
  // Each tail Mbar_{0,|P_j|+1} has dimension |P_j| - 2; only psi_tail^{|P_j|-2}
  // integrates to something nonzero, and that integral is one.
  for (std::size_t j = 0; j < t.partition.length(); ++j) {
    const auto size = static_cast<int>(t.partition.part_size(j));
    if (size > 1 && t.tail_exponents[j] != size - 2) return Rational(0);
  }
  Rational spine = oracle.psi_top(genus, t.spine_exponents);
  return t.sign > 0 ? spine : -spine;
}

Rational integrate_expansion(const OmegaMonomial& m, PsiOracle& oracle) {
  if (!m.is_top_degree()) return Rational(0);
  const auto terms = expand_graph_formula(m);
  return detail::parallel_sum(terms.size(), [&](std::size_t i) {
    return evaluate_pinwheel_term(m.genus(), m.marks(), terms[i], oracle);
  });
}

Rational integrate_expansion_serial(const OmegaMonomial& m, PsiOracle& oracle) {
  if (!m.is_top_degree()) return Rational(0);
  Rational total;
  for (const auto& t : expand_graph_formula(m)) total += evaluate_pinwheel_term(m.genus(), m.marks(), t, oracle);
  return total;
}

}  // namespace taut
