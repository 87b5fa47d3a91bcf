#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace taut {

using Part = std::vector<int>;

/// Sorts labels within each part and orders parts by their minimum label.
/// Does not validate; see SetPartition for that.
std::vector<Part> canonicalize(std::vector<Part> parts);

/// An unordered partition of the marks {1,...,n}, stored canonically, so two
/// partitions are equal iff their part lists are equal.
class SetPartition {
 public:
  /// Throws InvalidInput unless `parts` are non-empty, disjoint, and cover [n].
  SetPartition(int n, std::vector<Part> parts);

  /// Builds the partition whose block of mark i+1 is rgs[i]. The string must
  /// be a restricted growth string (rgs[0] == 0, rgs[i] <= 1 + max(rgs[0..i))).
  static SetPartition from_restricted_growth(std::span<const int> rgs);

  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  const std::vector<Part>& parts() const { return parts_; }
  const Part& part(std::size_t j) const { return parts_[j]; }
  std::size_t part_size(std::size_t j) const { return parts_[j].size(); }

  bool is_trivial() const { return parts_.size() == static_cast<std::size_t>(n_); }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  SetPartition() = default;
  int n_ = 0;
  std::vector<Part> parts_;
};

/// Calls f(const SetPartition&) once per partition of [n], in restricted
/// growth string order (lexicographic on block assignments). The one-block
/// partition comes first and the all-singletons partition last.
template <class F>
void for_each_set_partition(int n, F&& f);

/// Every partition of [n], in the order of for_each_set_partition. n >= 1.
std::vector<SetPartition> enumerate_set_partitions(int n);

/// Per-part sums of `weights`, where weights[i] belongs to mark i+1.
std::vector<int> part_weights(const SetPartition& p, std::span<const int> weights);

/// Number of parts of size greater than one.
int codimension(const SetPartition& p);

namespace detail {
void require_positive_marks(int n);
}

template <class F>
void for_each_set_partition(int n, F&& f) {
  detail::require_positive_marks(n);
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  // prefix_max[i] = max(rgs[0..i])
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  for (;;) {
    f(SetPartition::from_restricted_growth(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace taut
