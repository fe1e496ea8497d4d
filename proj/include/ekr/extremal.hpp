#ifndef EKR_EXTREMAL_HPP
#define EKR_EXTREMAL_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ekr/clique.hpp"
#include "ekr/families.hpp"
#include "ekr/permutations.hpp"
#include "ekr/stirling.hpp"

namespace ekr {

inline constexpr std::size_t kDefaultVertexCap = 200000;
inline constexpr std::chrono::seconds kDefaultBudget{300};

/// The graph on S_{n,k} joining permutations with at least t common cycles.
/// Its cliques are exactly the t-intersecting families.
class IntersectionGraph {
public:
  std::size_t n = 0, k = 0, t = 0;
  std::vector<CyclePermutation> vertices; // enumeration order
  BitGraph graph;

  std::optional<std::size_t> index_of(const CyclePermutation &p) const;

  Family family(const std::vector<std::size_t> &vertex_ids) const;
  Family family_of_all() const;

private:
  friend IntersectionGraph build_graph(std::size_t, std::size_t, std::size_t,
                                       std::size_t);
  std::unordered_map<CyclePermutation, std::size_t, PermutationHash> index_;
};

/// Requires 1 <= t <= k <= n and |S_{n,k}| <= vertex_cap; throws
/// std::invalid_argument otherwise. Pairs are found through a cycle ->
/// vertices index rather than by testing all pairs.
IntersectionGraph build_graph(std::size_t n, std::size_t k, std::size_t t,
                              std::size_t vertex_cap = kDefaultVertexCap);

struct SearchResult {
  std::size_t best_size = 0;
  Family witness;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Maximum t-intersecting family in g. `seed` must be a clique of g; the
/// search only looks beyond it.
SearchResult max_clique(const IntersectionGraph &g, const Family &seed,
                        std::chrono::milliseconds budget, unsigned threads = 1);

/// Same, seeded only by a size known to be attainable.
SearchResult max_clique(const IntersectionGraph &g,
                        std::size_t seed_lower_bound,
                        std::chrono::milliseconds budget, unsigned threads = 1);

enum class Relation { below, equal, above };
const char *to_string(Relation r);

enum class Uniqueness {
  checked,        // every maximum family was enumerated and classified
  not_checked,    // enumeration skipped (too many vertices, or disabled)
  incomplete,     // enumeration hit its budget or count limit
  not_applicable, // max_size != bound or the search was not optimal
};
const char *to_string(Uniqueness u);

struct VerifyOptions {
  std::chrono::milliseconds budget = kDefaultBudget;
  unsigned threads = 1;
  bool check_uniqueness = true;
  std::size_t uniqueness_vertex_cap = 5000;
  std::size_t uniqueness_limit = 100000;
  std::size_t vertex_cap = kDefaultVertexCap;
};

struct TheoremReport {
  std::size_t n = 0, k = 0, t = 0;
  std::size_t vertex_count = 0;
  BigNat bound;         // [n-t, k-t]
  std::size_t max_size = 0;
  bool optimal = false;
  Relation relation = Relation::below;
  /// Points fixed by the witness when it is a stabilizer of t fixed points.
  std::optional<std::vector<Element>> stabilizer_points;
  Uniqueness uniqueness = Uniqueness::not_applicable;
  std::size_t maxima_enumerated = 0;
  std::optional<bool> all_maxima_stabilizers;
  std::vector<std::string> witness_cycles;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};

  bool is_stabilizer() const { return stabilizer_points.has_value(); }
};

/// Exact maximum t-intersecting family of S_{n,k}, compared against
/// [n-t, k-t] and, on equality, classified against the stabilizers of t
/// fixed points. Requires 1 <= t < k <= n.
TheoremReport verify_theorem(std::size_t n, std::size_t k, std::size_t t,
                             const VerifyOptions &options = {});

struct ThresholdReport {
  std::size_t k = 0, t = 0, n_max = 0;
  std::vector<TheoremReport> rows; // n = k .. n_max
  /// Smallest n from which every scanned instance is optimal with
  /// max_size == bound.
  std::optional<std::size_t> bound_from;
  /// Smallest n from which, additionally, every maximum family was checked to
  /// be a stabilizer of t fixed points.
  std::optional<std::size_t> stabilizer_from;
};

/// verify_theorem for n = k .. n_max. Requires 1 <= t < k <= n_max.
ThresholdReport find_n0(std::size_t k, std::size_t t, std::size_t n_max,
                        const VerifyOptions &options = {});

} // namespace ekr

#endif // EKR_EXTREMAL_HPP
