#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tnlu/error.hpp"

namespace tnlu {

/// A strictly ascending list of 1-based row or column indices. May be empty.
class IndexSet {
 public:
  using value_type = std::size_t;
  using const_iterator = std::vector<std::size_t>::const_iterator;

  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices) : IndexSet(std::vector<std::size_t>(indices)) {}
  explicit IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      detail::require(indices_[k] >= 1, "index sets hold 1-based indices");
      detail::require(k == 0 || indices_[k - 1] < indices_[k], "index set must be strictly ascending");
    }
  }

  /// {first, first+1, ..., last}; empty when last < first.
  static IndexSet range(std::size_t first, std::size_t last) {
    IndexSet out;
    for (std::size_t i = first; i <= last && last >= 1; ++i) out.indices_.push_back(i);
    return out;
  }

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  const_iterator begin() const noexcept { return indices_.begin(); }
  const_iterator end() const noexcept { return indices_.end(); }
  /// Element at 0-based position `pos` (the index itself stays 1-based).
  std::size_t operator[](std::size_t pos) const { return indices_.at(pos); }
  std::size_t front() const { return indices_.at(0); }
  std::size_t back() const { return indices_.at(indices_.size() - 1); }
  const std::vector<std::size_t>& values() const noexcept { return indices_; }

  bool contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

  /// The first `s` elements.
  IndexSet prefix(std::size_t s) const {
    detail::require(s <= size(), "prefix longer than index set");
    IndexSet out;
    out.indices_.assign(indices_.begin(), indices_.begin() + static_cast<std::ptrdiff_t>(s));
    return out;
  }

  IndexSet with(std::size_t i) const {
    detail::require(i >= 1, "index sets hold 1-based indices");
    IndexSet out = *this;
    auto it = std::lower_bound(out.indices_.begin(), out.indices_.end(), i);
    if (it == out.indices_.end() || *it != i) out.indices_.insert(it, i);
    return out;
  }

  IndexSet without(std::size_t i) const {
    IndexSet out = *this;
    std::erase(out.indices_, i);
    return out;
  }

  IndexSet unite(const IndexSet& other) const {
    IndexSet out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.indices_));
    return out;
  }

  IndexSet minus(const IndexSet& other) const {
    IndexSet out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.indices_));
    return out;
  }

  bool disjoint_with(const IndexSet& other) const {
    std::vector<std::size_t> common;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(common));
    return common.empty();
  }

  bool is_subset_of(const IndexSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }

  /// Every index lies in {1..n}.
  bool within(std::size_t n) const { return empty() || back() <= n; }

  /// Each index shifted by `delta` (may be negative; result must stay >= 1).
  IndexSet shifted(std::ptrdiff_t delta) const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t i : indices_) {
      const auto moved = static_cast<std::ptrdiff_t>(i) + delta;
      detail::require(moved >= 1, "shift moves an index below 1");
      out.push_back(static_cast<std::size_t>(moved));
    }
    return IndexSet(std::move(out));
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(indices_[k]);
    }
    return out + "}";
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) { return a.indices_ <=> b.indices_; }

 private:
  std::vector<std::size_t> indices_;
};

/// Componentwise partial order on equal-cardinality index sets.
inline bool indexset_leq(const IndexSet& lhs, const IndexSet& rhs) {
  detail::require(lhs.size() == rhs.size(), "indexset_leq needs equal cardinalities, got " +
                                                lhs.to_string() + " and " + rhs.to_string());
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (lhs[k] > rhs[k]) return false;
  return true;
}

/// |{(i,j) in I x J : i > j}|.
struct InversionCount {
  std::size_t value = 0;
  bool odd() const noexcept { return value % 2 == 1; }
  friend bool operator==(InversionCount, InversionCount) = default;
};

inline InversionCount inversion_count(const IndexSet& lhs, const IndexSet& rhs) {
  InversionCount count;
  for (std::size_t i : lhs)
    for (std::size_t j : rhs)
      if (i > j) ++count.value;
  return count;
}

/// Calls `visit(subset)` for every `k`-element subset of `universe`, in
/// lexicographic order. `visit` returns false to stop early; the function
/// then returns false as well.
template <class Visitor>
bool for_each_subset(const IndexSet& universe, std::size_t k, Visitor&& visit) {
  const std::size_t n = universe.size();
  if (k > n) return true;
  std::vector<std::size_t> pos(k);
  for (std::size_t p = 0; p < k; ++p) pos[p] = p;
  std::vector<std::size_t> chosen(k);
  while (true) {
    for (std::size_t p = 0; p < k; ++p) chosen[p] = universe[pos[p]];
    if (!std::invoke(visit, IndexSet(chosen))) return false;
    std::size_t p = k;
    while (p > 0 && pos[p - 1] == n - k + (p - 1)) --p;
    if (p == 0) return true;
    ++pos[p - 1];
    for (std::size_t q = p; q < k; ++q) pos[q] = pos[q - 1] + 1;
  }
}

inline std::vector<IndexSet> subsets(const IndexSet& universe, std::size_t k) {
  std::vector<IndexSet> out;
  for_each_subset(universe, k, [&](const IndexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace tnlu
