#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taut/partitions.hpp"
#include "taut/psi_oracle.hpp"
#include "taut/rational.hpp"

namespace taut {

/// prod_i omega_i^{k_i} on Mbar_{g,n}; g >= 1 and n >= 1.
class OmegaMonomial {
 public:
  OmegaMonomial(int genus, std::vector<int> exponents);

  int genus() const { return genus_; }
  int marks() const { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponents() const { return exponents_; }
  int total_degree() const;
  bool is_top_degree() const { return total_degree() == 3 * genus_ - 3 + marks(); }

 private:
  int genus_;
  std::vector<int> exponents_;
};

/// One summand of the pinwheel expansion:
///   sign * prod_j psi_{spine_j}^{a_j} psi_{tail_j}^{b_j} [Delta_P].
/// For a singleton part the spine flag is the mark itself and b_j = 0.
struct PinwheelTerm {
  SetPartition partition;
  int sign = 1;
  std::vector<int> spine_exponents;
  std::vector<int> tail_exponents;

  /// codim(P) + sum_j (a_j + b_j)
  int degree() const;

  friend bool operator==(const PinwheelTerm&, const PinwheelTerm&) = default;
};

struct ExpandOptions {
  /// Keep every series term b = 0..alpha_j-1. By default the series stops at
  /// b = |P_j| - 2, since psi_tail^b vanishes on Mbar_{0,|P_j|+1} beyond that.
  bool full_series = false;
  /// Also drop terms whose spine monomial has degree above dim Mbar_{g,l(P)}.
  bool simplify = false;
};

/// Expands prod omega_i^{k_i} over pinwheel strata. A non-singleton part with
/// weight alpha contributes sum_b (-1)^{b+1} psi_spine^{alpha-1-b} psi_tail^b;
/// partitions with a zero-weight non-singleton part are omitted. Terms come in
/// partition enumeration order, then lexicographically by tail exponents.
std::vector<PinwheelTerm> expand_graph_formula(const OmegaMonomial& m, ExpandOptions options = {});

/// Throws InvalidInput if `t` is not a well-formed term over [n].
void validate_term(int n, const PinwheelTerm& t);

/// Describes the first violated term invariant relative to `m` (weights,
/// degree, sign law, singleton law), or nullopt if the term is consistent.
std::optional<std::string> term_invariant_violation(const OmegaMonomial& m, const PinwheelTerm& t);

/// Integral of `t` over Mbar_{g,n}. Zero unless the degree is 3g-3+n and every
/// tail carries exactly psi^{|P_j|-2}; then sign * <prod tau_{a_j}>_g.
Rational evaluate_pinwheel_term(int genus, int n, const PinwheelTerm& t,
                                PsiOracle& oracle = default_oracle());

/// Sum of evaluate_pinwheel_term over the expansion; zero off top degree.
/// Terms are evaluated in parallel.
Rational integrate_expansion(const OmegaMonomial& m, PsiOracle& oracle = default_oracle());
/// Serial reference for integrate_expansion.
Rational integrate_expansion_serial(const OmegaMonomial& m, PsiOracle& oracle = default_oracle());

}  // namespace taut
