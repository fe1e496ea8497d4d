#ifndef EKR_PERMUTATIONS_HPP
#define EKR_PERMUTATIONS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ekr {

/// A point of the ground set. Ground sets are subsets of [n] = {1, ..., n}.
using Element = std::uint32_t;

/// A cycle in canonical rotation: the smallest element comes first.
///
/// Equality is equality of the cyclic sequence, so (2 4 3) and (2 3 4) are
/// different cycles even though they move the same points.
class Cycle {
public:
  /// Rotates `raw` so its minimum leads. Throws std::invalid_argument on
  /// empty input or repeated elements.
  static Cycle canonicalize(std::span<const Element> raw);
  static Cycle canonicalize(std::initializer_list<Element> raw) {
    return canonicalize(std::span<const Element>(raw.begin(), raw.size()));
  }

  std::span<const Element> elements() const { return elements_; }
  std::size_t length() const { return elements_.size(); }
  Element min() const { return elements_.front(); }
  bool is_fixed_point() const { return elements_.size() == 1; }

  /// N(c): the support, sorted ascending.
  std::vector<Element> support() const;

  /// "(1 3 4)"
  std::string to_string() const;

  friend bool operator==(const Cycle &, const Cycle &) = default;
  /// Orders by minimum element first, then by the remaining sequence.
  friend auto operator<=>(const Cycle &a, const Cycle &b) {
    return a.elements_ <=> b.elements_;
  }

private:
  explicit Cycle(std::vector<Element> elements)
      : elements_(std::move(elements)) {}
  std::vector<Element> elements_;
};

struct CycleHash {
  std::size_t operator()(const Cycle &c) const noexcept;
};

/// A permutation stored as its set of disjoint cycles M(pi), sorted by
/// minimum element. Fixed points are explicit 1-cycles.
///
/// The ground set is the union of the cycle supports. Permutations of [n]
/// have ground set {1..n}; permutations produced by remove_cycles keep their
/// original labels on the reduced ground set.
class CyclePermutation {
public:
  CyclePermutation() = default;

  /// Validates pairwise-disjoint supports and sorts the cycles.
  static CyclePermutation from_cycles(std::vector<Cycle> cycles);

  /// image[i] is pi(i + 1). Throws std::invalid_argument unless `image` is a
  /// bijection on [image.size()].
  static CyclePermutation from_one_line(std::span<const Element> image);
  static CyclePermutation from_one_line(std::initializer_list<Element> image) {
    return from_one_line(std::span<const Element>(image.begin(), image.size()));
  }

  /// Parses "(1 3 4)(2)(5 6)". Any cycle order and rotation is accepted on
  /// input; the result is canonical.
  static CyclePermutation parse(std::string_view text);

  const std::vector<Cycle> &cycles() const { return cycles_; }
  std::size_t cycle_count() const { return cycles_.size(); }
  /// Size of the ground set.
  std::size_t size() const { return ground_.size(); }
  const std::vector<Element> &ground() const { return ground_; }

  bool contains(const Cycle &c) const;

  /// Inverse of from_one_line. Only defined when the ground set is [n].
  std::vector<Element> to_one_line() const;

  /// Canonical text: single spaces, min-first, cycles sorted ascending.
  std::string to_string() const;

  friend bool operator==(const CyclePermutation &a,
                         const CyclePermutation &b) {
    return a.cycles_ == b.cycles_;
  }
  friend auto operator<=>(const CyclePermutation &a,
                          const CyclePermutation &b) {
    return a.cycles_ <=> b.cycles_;
  }

private:
  std::vector<Cycle> cycles_;
  std::vector<Element> ground_;
};

struct PermutationHash {
  std::size_t operator()(const CyclePermutation &p) const noexcept;
};

/// {1, ..., n}
std::vector<Element> iota_ground(std::size_t n);

/// Streams every permutation of `ground` with exactly k cycles, in a fixed
/// order. The construction follows the Stirling recurrence: the next element
/// either opens a new 1-cycle or is inserted after an element already placed.
///
/// Throws std::invalid_argument when k > |ground|, or k == 0 with a nonempty
/// ground set.
void for_each_snk(std::span<const Element> ground, std::size_t k,
                  const std::function<void(const CyclePermutation &)> &visit);

/// S_{n,k} over [n], materialized in the order of for_each_snk.
std::vector<CyclePermutation> enumerate_snk(std::size_t n, std::size_t k);
std::vector<CyclePermutation> enumerate_snk(std::span<const Element> ground,
                                            std::size_t k);

/// Deletes the cycles of `removed` from pi; the result lives on the ground set
/// minus their supports, with the original labels. Throws
/// std::invalid_argument if some cycle of `removed` is not a cycle of pi.
CyclePermutation remove_cycles(const CyclePermutation &pi,
                               std::span<const Cycle> removed);

} // namespace ekr

#endif // EKR_PERMUTATIONS_HPP
