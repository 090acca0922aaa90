#include "cpold/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cpold/error.hpp"

namespace cpold {

WeakPartition::WeakPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorKind::invalid_input, "partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::invalid_input, "partition parts must be weakly decreasing");
  }
}

WeakPartition WeakPartition::sorted(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return WeakPartition(std::move(values));
}

int WeakPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> WeakPartition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
  for (int p : parts_) m[static_cast<std::size_t>(p)]++;
  return m;
}

BigInt WeakPartition::multiplicity_factorial() const {
  BigInt r = 1;
  for (int m : multiplicities()) r *= factorial(m);
  return r;
}

int WeakPartition::zero_count() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 0));
}

WeakPartition WeakPartition::nonzero_part() const {
  std::vector<int> nz;
  for (int p : parts_)
    if (p != 0) nz.push_back(p);
  return WeakPartition(std::move(nz));
}

std::string WeakPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition::Partition(std::vector<int> parts) : WeakPartition(std::move(parts)) {
  if (!parts_.empty() && parts_.back() == 0)
    throw Error(ErrorKind::invalid_input, "partition parts must be positive");
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int i = 0; i < p; ++i) c[static_cast<std::size_t>(i)]++;
  return Partition(std::move(c));
}

bool Partition::dominates(const Partition& other) const {
  int a = 0, b = 0;
  const std::size_t len = std::max(length(), other.length());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < length() ? parts_[i] : 0;
    b += i < other.length() ? other.parts_[i] : 0;
    if (a < b) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(int weight, std::optional<int> max_length, std::optional<int> max_part) {
  if (weight < 0) throw Error(ErrorKind::invalid_input, "negative partition weight");
  std::vector<Partition> out;
  std::vector<int> current;
  const int max_len = max_length.value_or(weight);
  std::function<void(int, int)> rec = [&](int remaining, int ceiling) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) >= max_len) return;
    for (int p = std::min(remaining, ceiling); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(weight, max_part.value_or(weight));
  return out;
}

}  // namespace cpold
