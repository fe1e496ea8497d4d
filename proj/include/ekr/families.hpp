#ifndef EKR_FAMILIES_HPP
#define EKR_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ekr/permutations.hpp"
#include "ekr/stirling.hpp"

namespace ekr {

/// Cycles with pairwise disjoint supports, sorted by minimum element.
class CycleSet {
public:
  CycleSet() = default;
  /// Throws std::invalid_argument if two supports overlap.
  explicit CycleSet(std::vector<Cycle> cycles);

  /// t fixed points (p) for each p in `points`.
  static CycleSet fixed_points(std::span<const Element> points);

  const std::vector<Cycle> &cycles() const { return cycles_; }
  std::size_t size() const { return cycles_.size(); }
  bool empty() const { return cycles_.empty(); }

  /// P: the union of the supports, sorted.
  const std::vector<Element> &support() const { return support_; }

  friend bool operator==(const CycleSet &, const CycleSet &) = default;

private:
  std::vector<Cycle> cycles_;
  std::vector<Element> support_;
};

/// A set of permutations sharing one ground set and one cycle count k.
/// Members keep their insertion order; greedy scans follow it.
class Family {
public:
  Family() = default;
  /// Throws std::invalid_argument on a member with the wrong ground set or
  /// cycle count, or on a duplicate member.
  Family(std::vector<Element> ground, std::size_t k,
         std::vector<CyclePermutation> members = {});

  /// All of S_{n,k} in enumeration order.
  static Family all(std::size_t n, std::size_t k);

  const std::vector<Element> &ground() const { return ground_; }
  std::size_t ground_n() const { return ground_.size(); }
  std::size_t k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<CyclePermutation> &members() const { return members_; }
  const CyclePermutation &operator[](std::size_t i) const {
    return members_[i];
  }

  /// Set equality: same ground set, same k, same members in any order.
  friend bool operator==(const Family &a, const Family &b);

private:
  std::vector<Element> ground_;
  std::size_t k_ = 0;
  std::vector<CyclePermutation> members_;
};

/// |M(a) ∩ M(b)|. Throws std::invalid_argument on different ground sets.
std::size_t common_cycles(const CyclePermutation &a, const CyclePermutation &b);

/// Every two members share at least t cycles. Throws for t == 0.
bool is_t_intersecting(const Family &fam, std::size_t t);

/// Every two distinct members share no cycle.
bool is_independent(const Family &fam);

/// Scans members in order, keeping each one that is cycle-disjoint from all
/// kept so far.
Family greedy_maximal_independent(const Family &fam);

struct CoverBoundReport {
  std::size_t size = 0;  // |fam|
  std::size_t l = 0;     // greedy maximal independent subfamily size
  BigNat bound_rhs;      // k * l * [n-1, k-1]
  bool holds = false;    // size <= bound_rhs
};

/// |fam| <= k l [n-1 k-1] with l from greedy_maximal_independent.
/// Throws std::invalid_argument for k < 2.
CoverBoundReport cover_bound_check(const Family &fam);

/// {pi in S_{ground,k} : T ⊆ M(pi)}, built by enumerating the permutations of
/// ground \ P with k - |T| cycles and adjoining T. Throws
/// std::invalid_argument unless |T| <= k, P ⊆ ground and
/// k - |T| <= |ground| - |P|.
Family stabilizer_family(std::span<const Element> ground, std::size_t k,
                         const CycleSet &fixed);
Family stabilizer_family(std::size_t n, std::size_t k, const CycleSet &fixed);

/// A(T): members containing every cycle of T.
Family restrict(const Family &fam, const CycleSet &fixed);

/// A*(T): restrict(fam, T) with the cycles of T deleted from each member,
/// over ground \ P with k - |T| cycles.
Family star(const Family &fam, const CycleSet &fixed);

/// The points {p_1..p_t} such that fam is exactly the stabilizer of the fixed
/// points (p_1)...(p_t), if any. Throws for t == 0.
std::optional<std::vector<Element>>
is_stabilizer_of_t_fixed_points(const Family &fam, std::size_t t);

} // namespace ekr

#endif // EKR_FAMILIES_HPP
