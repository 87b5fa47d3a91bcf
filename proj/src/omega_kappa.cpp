#include "taut/omega_kappa.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "parallel_sum.hpp"
#include "taut/errors.hpp"

namespace taut {

namespace {

// Spine exponents for partition p, or nullopt when some part gets a negative
// power of psi. `shift(size)` is added to each part weight.
template <class Shift>
std::optional<std::vector<int>> spine_exponents(const SetPartition& p, std::span<const int> weights, Shift shift) {
  auto exps = part_weights(p, weights);
  for (std::size_t j = 0; j < exps.size(); ++j) {
    exps[j] += shift(static_cast<int>(p.part_size(j)));
    if (exps[j] < 0) return std::nullopt;
  }
  return exps;
}

// (-1)^{n + l(P)} <prod tau_{e_j}>_g
template <class Shift>
Rational partition_summand(int genus, const SetPartition& p, std::span<const int> weights, Shift shift,
                           PsiOracle& oracle) {
  auto exps = spine_exponents(p, weights, shift);
  if (!exps) return Rational(0);
  Rational value = oracle.psi_top(genus, *exps);
  return (p.n() + static_cast<int>(p.length())) % 2 == 0 ? value : -value;
}

auto omega_shift = [](int size) { return 1 - size; };
auto kappa_shift = [](int) { return 1; };

template <class Shift>
Rational partition_sum(int genus, std::span<const int> weights, Shift shift, PsiOracle& oracle) {
  const auto partitions = enumerate_set_partitions(static_cast<int>(weights.size()));
  return detail::parallel_sum(partitions.size(), [&](std::size_t i) {
    return partition_summand(genus, partitions[i], weights, shift, oracle);
  });
}

template <class Shift>
Rational partition_sum_serial(int genus, std::span<const int> weights, Shift shift, PsiOracle& oracle) {
  Rational total;
  for_each_set_partition(static_cast<int>(weights.size()), [&](const SetPartition& p) {
    total += partition_summand(genus, p, weights, shift, oracle);
  });
  return total;
}

}  // namespace

KappaMonomial::KappaMonomial(int genus, std::vector<int> indices) : genus_(genus), indices_(std::move(indices)) {
  if (genus_ < 2) throw InvalidInput("kappa monomials on Mbar_g need genus >= 2");
  if (indices_.empty()) throw InvalidInput("kappa monomials need at least one index");
  for (int l : indices_) {
    if (l < 0) throw InvalidInput("negative kappa index " + std::to_string(l));
  }
}

int KappaMonomial::total_degree() const { return std::accumulate(indices_.begin(), indices_.end(), 0); }

Rational omega_top(const OmegaMonomial& m, PsiOracle& oracle) {
  if (!m.is_top_degree()) return Rational(0);
  return partition_sum(m.genus(), m.exponents(), omega_shift, oracle);
}

Rational omega_top_serial(const OmegaMonomial& m, PsiOracle& oracle) {
  if (!m.is_top_degree()) return Rational(0);
  return partition_sum_serial(m.genus(), m.exponents(), omega_shift, oracle);
}

Rational kappa_top(const KappaMonomial& m, PsiOracle& oracle) {
  if (!m.is_top_degree()) return Rational(0);
  return partition_sum(m.genus(), m.indices(), kappa_shift, oracle);
}

Rational kappa_top_serial(const KappaMonomial& m, PsiOracle& oracle) {
  if (!m.is_top_degree()) return Rational(0);
  return partition_sum_serial(m.genus(), m.indices(), kappa_shift, oracle);
}

bool check_pushforward_identity(int genus, std::span<const int> indices, PsiOracle& oracle) {
  KappaMonomial kappa(genus, {indices.begin(), indices.end()});
  std::vector<int> shifted(indices.begin(), indices.end());
  for (int& l : shifted) ++l;
  return omega_top(OmegaMonomial(genus, std::move(shifted)), oracle) == kappa_top(kappa, oracle);
}

}  // namespace taut
