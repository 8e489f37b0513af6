#ifndef HOFFMAN_COMBINATORICS_HPP
#define HOFFMAN_COMBINATORICS_HPP

#include <cstddef>
#include <vector>

namespace hoffman {

/// Calls f(indices) for every size-r subset of {0..n-1} in lexicographic
/// order. f returns false to stop early; the function then returns false.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace hoffman

#endif  // HOFFMAN_COMBINATORICS_HPP
