#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cpold/rational.hpp"

namespace cpold {

/// Weakly decreasing list of non-negative integers. Zero parts are allowed
/// unless the object came through Partition's validation.
class WeakPartition {
 public:
  WeakPartition() = default;
  /// Throws invalid_input unless weakly decreasing and non-negative.
  explicit WeakPartition(std::vector<int> parts);
  /// Sorts an arbitrary non-negative vector into a weak partition.
  static WeakPartition sorted(std::vector<int> values);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// (m_0, m_1, ..., m_max): how often each value occurs.
  std::vector<int> multiplicities() const;
  /// prod_i m_i!
  BigInt multiplicity_factorial() const;
  int zero_count() const;
  /// The nonzero part.
  WeakPartition nonzero_part() const;

  std::string to_string() const;

  friend auto operator<=>(const WeakPartition&, const WeakPartition&) = default;
  friend bool operator==(const WeakPartition&, const WeakPartition&) = default;

 protected:
  std::vector<int> parts_;
};

/// Weakly decreasing list of positive integers.
class Partition : public WeakPartition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  Partition conjugate() const;
  /// Dominance order: true when this >= other (same weight required).
  bool dominates(const Partition& other) const;
};

/// Partitions of `weight` in lexicographically decreasing order, e.g.
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(int weight, std::optional<int> max_length = std::nullopt,
                                            std::optional<int> max_part = std::nullopt);

}  // namespace cpold
