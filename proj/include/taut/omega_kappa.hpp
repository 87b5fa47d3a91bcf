#pragma once

#include <span>
#include <vector>

#include "taut/pinwheel.hpp"
#include "taut/psi_oracle.hpp"
#include "taut/rational.hpp"

namespace taut {

/// prod_i kappa_{l_i} on Mbar_g; g >= 2 and at least one index.
class KappaMonomial {
 public:
  KappaMonomial(int genus, std::vector<int> indices);

  int genus() const { return genus_; }
  int size() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  int total_degree() const;
  bool is_top_degree() const { return total_degree() == 3 * genus_ - 3; }

 private:
  int genus_;
  std::vector<int> indices_;
};

// The partition sums below run over all set partitions of the marks. The
// plain versions split the partitions across OpenMP threads; the _serial
// versions walk them in order and are kept as the reference.

/// int prod omega_i^{k_i} = sum_P (-1)^{n+l(P)} <prod_j tau_{alpha_j-|P_j|+1}>_g,
/// skipping partitions with a negative exponent. Zero off top degree.
Rational omega_top(const OmegaMonomial& m, PsiOracle& oracle = default_oracle());
Rational omega_top_serial(const OmegaMonomial& m, PsiOracle& oracle = default_oracle());

/// int prod kappa_{l_i} = sum_P (-1)^{n+l(P)} <prod_j tau_{beta_j+1}>_g. Zero off top degree.
Rational kappa_top(const KappaMonomial& m, PsiOracle& oracle = default_oracle());
Rational kappa_top_serial(const KappaMonomial& m, PsiOracle& oracle = default_oracle());

/// Whether int prod omega_i^{l_i+1} over Mbar_{g,n} equals int prod kappa_{l_i} over Mbar_g.
bool check_pushforward_identity(int genus, std::span<const int> indices,
                                PsiOracle& oracle = default_oracle());

}  // namespace taut
