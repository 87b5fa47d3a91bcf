#include "taut/partitions.hpp"

#include <algorithm>
#include <string>

#include "taut/errors.hpp"

namespace taut {

void detail::require_positive_marks(int n) {
  if (n < 1) throw InvalidInput("set partitions need n >= 1, got " + std::to_string(n));
}

std::vector<Part> canonicalize(std::vector<Part> parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return parts;
}

SetPartition::SetPartition(int n, std::vector<Part> parts) : n_(n), parts_(canonicalize(std::move(parts))) {
  detail::require_positive_marks(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::size_t covered = 0;
  for (const auto& part : parts_) {
    if (part.empty()) throw InvalidInput("empty part in set partition");
    for (int label : part) {
      if (label < 1 || label > n) {
        throw InvalidInput("label " + std::to_string(label) + " outside [1," + std::to_string(n) + "]");
      }
      if (seen[label]) throw InvalidInput("label " + std::to_string(label) + " appears twice");
      seen[label] = true;
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(n)) throw InvalidInput("parts do not cover [n]");
}

SetPartition SetPartition::from_restricted_growth(std::span<const int> rgs) {
  SetPartition p;
  p.n_ = static_cast<int>(rgs.size());
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    auto block = static_cast<std::size_t>(rgs[i]);
    if (rgs[i] < 0 || block > p.parts_.size()) throw InvalidInput("not a restricted growth string");
    if (block == p.parts_.size()) p.parts_.emplace_back();
    p.parts_[block].push_back(static_cast<int>(i) + 1);
  }
  detail::require_positive_marks(p.n_);
  return p;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<int> part_weights(const SetPartition& p, std::span<const int> weights) {
  if (weights.size() != static_cast<std::size_t>(p.n())) {
    throw InvalidInput("weight vector has length " + std::to_string(weights.size()) + ", expected " +
                       std::to_string(p.n()));
  }
  std::vector<int> sums;
  sums.reserve(p.length());
  for (const auto& part : p.parts()) {
    int s = 0;
    for (int label : part) s += weights[label - 1];
    sums.push_back(s);
  }
  return sums;
}

int codimension(const SetPartition& p) {
  return static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(),
                                        [](const Part& part) { return part.size() > 1; }));
}

}  // namespace taut
