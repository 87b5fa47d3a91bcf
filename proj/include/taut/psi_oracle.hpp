#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

/// Memo key for <tau_{k_1} ... tau_{k_n}>_g: genus plus the sorted exponent multiset.
struct IntersectionKey {
  int genus = 0;
  std::vector<int> exponents;  // ascending

  /// Sorts the exponents. Throws InvalidInput on negative genus or exponents,
  /// n == 0, or an unstable (g, n).
  static IntersectionKey make(int genus, std::span<const int> exponents);

  std::size_t marks() const { return exponents.size(); }
  /// 3g - 3 + n
  int dimension() const { return 3 * genus - 3 + static_cast<int>(exponents.size()); }

  friend bool operator==(const IntersectionKey&, const IntersectionKey&) = default;
};

struct IntersectionKeyHash {
  std::size_t operator()(const IntersectionKey& key) const noexcept;
};

/// Thread-safe memo table. Puts are idempotent; a put that disagrees with a
/// stored value throws IntegrityError.
class PsiCache {
 public:
  std::optional<Rational> get(const IntersectionKey& key) const;
  void put(const IntersectionKey& key, const Rational& value);

  std::size_t size() const;
  void clear();
  /// Entries sorted by (genus, n, exponents), for deterministic output.
  std::vector<std::pair<IntersectionKey, Rational>> snapshot() const;

  /// Merges newline-delimited JSON records from `path` into the table. A
  /// missing file is not an error; malformed or conflicting records throw
  /// IntegrityError.
  void load(const std::filesystem::path& path);
  /// Writes every entry, one record per line, replacing `path` atomically.
  void save(const std::filesystem::path& path) const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<IntersectionKey, Rational, IntersectionKeyHash> table_;
};

/// Order in which the recursions are tried for a key.
enum class Recursion {
  /// string equation if some k_i = 0, else dilaton if some k_i = 1, else DVV
  string_dilaton_first,
  /// DVV on the largest exponent whenever it is >= 2; string/dilaton only otherwise
  dvv_first,
};

/// Top intersections of psi classes on Mbar_{g,n}, computed from the single
/// seed <tau_0^3>_0 = 1 by the string, dilaton, and Dijkgraaf-Verlinde-Verlinde
/// recursions:
///
///   <tau_{k+1} tau_D>_g = 1/(2k+3)!! [ sum_j (2k+2d_j+1)!!/(2d_j-1)!! <tau_{d_j+k} tau_{D-d_j}>_g
///       + 1/2 sum_{r+s=k-1} (2r+1)!!(2s+1)!! ( <tau_r tau_s tau_D>_{g-1}
///       + sum_{g1+g2=g, I+J=D} <tau_r tau_I>_{g1} <tau_s tau_J>_{g2} ) ]
///
/// with (-1)!! = 1 and unstable factors equal to zero.
class PsiOracle {
 public:
  explicit PsiOracle(Recursion strategy = Recursion::string_dilaton_first) : strategy_(strategy) {}

  PsiOracle(const PsiOracle&) = delete;
  PsiOracle& operator=(const PsiOracle&) = delete;

  /// <tau_{k_1} ... tau_{k_n}>_g. Zero when sum k_i != 3g-3+n. Throws
  /// InvalidInput for unstable (g, n), n == 0, or negative exponents.
  Rational psi_top(int genus, std::span<const int> exponents);
  Rational psi_top(const IntersectionKey& key);

  Recursion strategy() const { return strategy_; }
  PsiCache& cache() { return cache_; }
  const PsiCache& cache() const { return cache_; }

 private:
  Rational compute(const IntersectionKey& key);
  Rational lookup(int genus, std::vector<int> exponents);
  Rational string_equation(const IntersectionKey& key);
  Rational dilaton_equation(const IntersectionKey& key);
  Rational dvv(const IntersectionKey& key);
  Rational genus_one_tau_one();

  // DVV right-hand side for tau_{k+1} times `rest`. Terms whose key equals
  // `unknown` are not evaluated; their coefficient is added to `*unknown_coef`.
  Rational dvv_rhs(int genus, int k, const std::vector<int>& rest,
                   const IntersectionKey* unknown, Rational* unknown_coef);

  Recursion strategy_;
  PsiCache cache_;
};

/// Process-wide oracle used by the evaluators when none is passed.
PsiOracle& default_oracle();

/// psi_top on default_oracle().
Rational psi_top(int genus, std::span<const int> exponents);

/// Genus-0 closed form (n-3)! / prod k_i!. Requires n >= 3 and sum k_i = n-3;
/// anything else throws InvalidInput.
Rational psi_top_genus0_closed(std::span<const int> exponents);

}  // namespace taut
