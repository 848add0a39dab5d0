#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace interlock {

/// Competition ("1224") ranks, largest value first:
/// rank(v) = 1 + |{u : value(u) > value(v)}|.
template <typename T>
std::vector<std::int64_t> competition_ranks(std::span<const T> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<std::int64_t> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && !(values[order[j]] < values[order[i]]) &&
           !(values[order[i]] < values[order[j]])) {
      ++j;
    }
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = static_cast<std::int64_t>(i + 1);
    i = j;
  }
  return ranks;
}

/// Mid-ranks, largest value first: tied values share the mean of the ranks
/// they span, so the ranks always sum to n(n+1)/2.
template <typename T>
std::vector<double> midranks(std::span<const T> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && !(values[order[j]] < values[order[i]]) &&
           !(values[order[i]] < values[order[j]])) {
      ++j;
    }
    // Positions i..j-1 hold ranks i+1..j; their mean is (i+1+j)/2.
    const double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = mid;
    i = j;
  }
  return ranks;
}

/// Sizes of the groups of equal values (including groups of size 1).
template <typename T>
std::vector<std::size_t> tie_groups(std::span<const T> values) {
  std::vector<T> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> groups;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && !(sorted[i] < sorted[j])) ++j;
    groups.push_back(j - i);
    i = j;
  }
  return groups;
}

}  // namespace interlock
