#ifndef EKR_CLIQUE_HPP
#define EKR_CLIQUE_HPP

#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ekr {

/// Fixed-size bitset over 64-bit words.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= bit(i); }
  void reset(std::size_t i) { words_[i >> 6] &= ~bit(i); }
  bool test(std::size_t i) const { return words_[i >> 6] & bit(i); }

  void set_all() {
    for (auto &w : words_)
      w = ~std::uint64_t{0};
    trim();
  }

  bool any() const {
    for (auto w : words_)
      if (w)
        return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit, or size() if none.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w])
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  Bitset &operator&=(const Bitset &o) {
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] &= o.words_[w];
    return *this;
  }

  /// this &= ~o
  Bitset &subtract(const Bitset &o) {
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] &= ~o.words_[w];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend bool operator==(const Bitset &, const Bitset &) = default;

  template <class F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  }

private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }
  void trim() {
    if (size_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected loop-free graph with bitset adjacency rows.
class BitGraph {
public:
  explicit BitGraph(std::size_t n = 0) : adj_(n, Bitset(n)) {}

  std::size_t order() const { return adj_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bitset &neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::size_t edge_count() const;

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  BitGraph induced(const std::vector<std::size_t> &vertices) const;

  bool is_clique(const std::vector<std::size_t> &vertices) const;

private:
  std::vector<Bitset> adj_;
};

/// Repeatedly removes a vertex of minimum remaining degree (ties: smallest
/// index). Returns the removal order.
std::vector<std::size_t> degeneracy_order(const BitGraph &g);

struct CliqueOptions {
  /// A known clique; the search only looks for strictly larger ones.
  std::vector<std::size_t> seed_clique;
  /// Cliques smaller than this are not reported. Ignored when it does not
  /// exceed the seed clique size.
  std::size_t lower_bound = 0;
  /// Zero means unlimited.
  std::chrono::milliseconds budget{0};
  unsigned threads = 1;
};

struct CliqueResult {
  std::vector<std::size_t> clique; // sorted vertex indices
  bool optimal = false;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Exact maximum clique by branch and bound with greedy colouring bounds on
/// bitset candidate sets, vertices ordered by reverse degeneracy order.
///
/// Root branches run on `threads` workers sharing one incumbent size. When
/// the search completes, the returned clique is the first maximum clique in
/// sequential search order, so it does not depend on the thread count. If
/// the budget runs out the incumbent is returned with optimal = false.
CliqueResult max_clique(const BitGraph &g, const CliqueOptions &options = {});

struct CliqueEnumeration {
  std::vector<std::vector<std::size_t>> cliques; // each sorted; list sorted
  bool complete = false;
};

/// All cliques with exactly `size` vertices, assuming no larger clique
/// exists. Stops early (complete = false) past `limit` cliques or the budget.
CliqueEnumeration enumerate_cliques_of_size(const BitGraph &g, std::size_t size,
                                            std::chrono::milliseconds budget,
                                            std::size_t limit);

} // namespace ekr

#endif // EKR_CLIQUE_HPP
