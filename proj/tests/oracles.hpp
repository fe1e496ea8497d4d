#ifndef EKR_TESTS_ORACLES_HPP
#define EKR_TESTS_ORACLES_HPP

// Brute-force references for the tests. Nothing here goes through the
// library's enumeration, recurrence or search code.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

// Number of cycles of a 0-based one-line permutation.
inline std::size_t cycle_count(const std::vector<int> &p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j]))
      seen[j] = true;
  }
  return c;
}

// counts[k] = number of permutations of [n] with k cycles, via all n!
// permutations.
inline std::vector<std::uint64_t> cycle_count_histogram(std::size_t n) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    ++counts[cycle_count(p)];
  } while (std::next_permutation(p.begin(), p.end()));
  return counts;
}

// All permutations of [n] with k cycles as 1-based one-line images.
inline std::vector<std::vector<std::uint32_t>> brute_snk(std::size_t n,
                                                         std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (cycle_count(p) == k) {
      std::vector<std::uint32_t> image;
      for (int v : p)
        image.push_back(static_cast<std::uint32_t>(v + 1));
      out.push_back(image);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Maximum clique size by checking every vertex subset: is_clique[mask] is
// built from is_clique[mask without its lowest vertex].
inline std::size_t max_clique_by_subsets(
    const std::vector<std::uint32_t> &adjacency) {
  const std::size_t n = adjacency.size();
  if (n == 0)
    return 0;
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<std::uint8_t> is_clique(std::size_t{full} + 1, 0);
  is_clique[0] = 1;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
    const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
    const std::uint32_t rest = mask & (mask - 1);
    if (is_clique[rest] && (adjacency[low] & rest) == rest) {
      is_clique[mask] = 1;
      best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    if (mask == full)
      break;
  }
  return best;
}

inline long double harmonic_direct(std::size_t m) {
  long double s = 0;
  for (std::size_t r = m; r >= 1; --r)
    s += 1.0L / static_cast<long double>(r);
  return s;
}

} // namespace oracle

#endif
