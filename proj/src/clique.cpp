#include "ekr/clique.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ekr {

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v)
    throw std::invalid_argument("loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t BitGraph::edge_count() const {
  std::size_t twice = 0;
  for (const Bitset &row : adj_)
    twice += row.count();
  return twice / 2;
}

BitGraph BitGraph::induced(const std::vector<std::size_t> &vertices) const {
  BitGraph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        h.add_edge(i, j);
  return h;
}

bool BitGraph::is_clique(const std::vector<std::size_t> &vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !adjacent(vertices[i], vertices[j]))
        return false;
  return true;
}

std::vector<std::size_t> degeneracy_order(const BitGraph &g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v)
    degree[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best == n || degree[v] < degree[best]))
        best = v;
    removed[best] = true;
    order.push_back(best);
    g.neighbours(best).for_each([&](std::size_t u) {
      if (!removed[u])
        --degree[u];
    });
  }
  return order;
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Mode {
  maximize,  // prune when |C| + colours <= incumbent
  find_size, // stop at the first clique of the target size
  enumerate, // collect every clique of the target size
};

struct Coloured {
  std::vector<std::size_t> vertex;
  std::vector<std::size_t> colour; // non-decreasing
};

// Search state over a renumbered copy of the graph in which internal vertex
// i is original vertex order_[i].
class Solver {
public:
  explicit Solver(const BitGraph &g) : n_(g.order()) {
    std::vector<std::size_t> removal = degeneracy_order(g);
    order_.assign(removal.rbegin(), removal.rend());
    std::vector<std::size_t> position(n_);
    for (std::size_t i = 0; i < n_; ++i)
      position[order_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i)
      g.neighbours(order_[i]).for_each(
          [&](std::size_t u) { adj_[i].set(position[u]); });
  }

  std::size_t order() const { return n_; }
  std::size_t original(std::size_t internal) const { return order_[internal]; }

  std::vector<std::size_t> to_original(const std::vector<std::size_t> &c) const {
    std::vector<std::size_t> out;
    for (std::size_t v : c)
      out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> to_internal(const std::vector<std::size_t> &c) const {
    std::vector<std::size_t> position(n_);
    for (std::size_t i = 0; i < n_; ++i)
      position[order_[i]] = i;
    std::vector<std::size_t> out;
    for (std::size_t v : c)
      out.push_back(position[v]);
    return out;
  }

  Bitset all() const {
    Bitset b(n_);
    b.set_all();
    return b;
  }

  const Bitset &adj(std::size_t v) const { return adj_[v]; }

  // Greedy sequential colouring in index order; vertices come out grouped
  // by colour class.
  void colour(const Bitset &p, Coloured &out) const {
    out.vertex.clear();
    out.colour.clear();
    Bitset uncoloured = p;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      for (std::size_t v = q.first(); v < n_; v = q.first()) {
        uncoloured.reset(v);
        q.reset(v);
        q.subtract(adj_[v]);
        out.vertex.push_back(v);
        out.colour.push_back(c);
      }
    }
  }

private:
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> adj_;
};

// Shared between workers of one search.
struct SharedState {
  Mode mode = Mode::maximize;
  std::size_t target = 0; // find_size / enumerate
  std::atomic<std::size_t> best{0};
  std::mutex mutex;
  std::vector<std::size_t> incumbent;
  std::vector<std::vector<std::size_t>> found;
  std::size_t limit = 0;
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false}; // budget or limit hit
  std::atomic<std::uint64_t> nodes{0};
  std::optional<Clock::time_point> deadline;
};

class Worker {
public:
  Worker(const Solver &s, SharedState &st) : solver_(s), state_(st) {}

  ~Worker() { state_.nodes += nodes_; }

  void expand(std::vector<std::size_t> &clique, Bitset p) {
    if (state_.stop.load(std::memory_order_relaxed))
      return;
    if ((++nodes_ & 1023) == 0 && state_.deadline &&
        Clock::now() >= *state_.deadline) {
      state_.exhausted = true;
      state_.stop = true;
      return;
    }
    Coloured list;
    solver_.colour(p, list);
    for (std::size_t i = list.vertex.size(); i-- > 0;) {
      if (state_.stop.load(std::memory_order_relaxed))
        return;
      if (pruned(clique.size() + list.colour[i]))
        return;
      const std::size_t v = list.vertex[i];
      clique.push_back(v);
      visit(clique, p & solver_.adj(v));
      clique.pop_back();
      p.reset(v);
    }
  }

  // Handles the clique just extended by one vertex with candidates p.
  void visit(std::vector<std::size_t> &clique, const Bitset &p) {
    if (state_.mode != Mode::maximize && clique.size() == state_.target) {
      record(clique);
      return;
    }
    if (state_.mode == Mode::maximize && clique.size() > state_.best.load())
      record(clique);
    if (p.any())
      expand(clique, p);
  }

private:
  bool pruned(std::size_t bound) const {
    if (state_.mode == Mode::maximize)
      return bound <= state_.best.load(std::memory_order_relaxed);
    return bound < state_.target;
  }

  void record(const std::vector<std::size_t> &clique) {
    std::lock_guard lock(state_.mutex);
    switch (state_.mode) {
    case Mode::maximize:
      if (clique.size() > state_.best) {
        state_.best = clique.size();
        state_.incumbent = clique;
      }
      break;
    case Mode::find_size:
      state_.incumbent = clique;
      state_.stop = true;
      break;
    case Mode::enumerate:
      state_.found.push_back(clique);
      if (state_.found.size() > state_.limit) {
        state_.exhausted = true;
        state_.stop = true;
      }
      break;
    }
  }

  const Solver &solver_;
  SharedState &state_;
  std::uint64_t nodes_ = 0;
};

// Runs the root level of the search, splitting root branches over threads.
void run_search(const Solver &solver, SharedState &state, unsigned threads) {
  if (solver.order() == 0)
    return;
  Coloured root;
  solver.colour(solver.all(), root);
  const std::size_t count = root.vertex.size();

  // candidates[i] = vertices before position i in the colour list, which is
  // what sequential search leaves in P when it reaches branch i
  auto candidates = [&](std::size_t i) {
    Bitset p(solver.order());
    for (std::size_t j = 0; j < i; ++j)
      p.set(root.vertex[j]);
    return p & solver.adj(root.vertex[i]);
  };
  auto pruned = [&](std::size_t bound) {
    if (state.mode == Mode::maximize)
      return bound <= state.best.load();
    return bound < state.target;
  };

  if (threads <= 1 || state.mode != Mode::maximize) {
    Worker w(solver, state);
    std::vector<std::size_t> clique;
    for (std::size_t i = count; i-- > 0;) {
      if (state.stop || pruned(root.colour[i]))
        break;
      clique.assign(1, root.vertex[i]);
      w.visit(clique, candidates(i));
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      Worker w(solver, state);
      std::vector<std::size_t> clique;
      for (std::size_t taken = next++; taken < count; taken = next++) {
        const std::size_t i = count - 1 - taken;
        if (state.stop || pruned(root.colour[i]))
          break;
        clique.assign(1, root.vertex[i]);
        w.visit(clique, candidates(i));
      }
    });
}

std::optional<Clock::time_point> deadline_after(std::chrono::milliseconds b,
                                                Clock::time_point start) {
  if (b.count() <= 0)
    return std::nullopt;
  return start + b;
}

} // namespace

CliqueResult max_clique(const BitGraph &g, const CliqueOptions &options) {
  const auto start = Clock::now();
  if (!g.is_clique(options.seed_clique))
    throw std::invalid_argument("seed is not a clique");
  for (std::size_t v : options.seed_clique)
    if (v >= g.order())
      throw std::invalid_argument("seed vertex out of range");
  if (options.lower_bound > g.order())
    throw std::invalid_argument("lower bound exceeds the vertex count");

  const Solver solver(g);
  CliqueResult result;
  const auto deadline = deadline_after(options.budget, start);

  // Phase 1: size of a maximum clique.
  const std::size_t seed_size = options.seed_clique.size();
  const bool numeric_bound = options.lower_bound > seed_size;
  std::size_t best = 0;
  std::vector<std::size_t> incumbent;
  bool optimal = false;
  for (int attempt = 0; attempt < 2; ++attempt) {
    SharedState st;
    st.deadline = deadline;
    if (numeric_bound && attempt == 0) {
      st.best = options.lower_bound - 1;
    } else {
      st.best = seed_size;
      st.incumbent = solver.to_internal(options.seed_clique);
    }
    const std::size_t start_best = st.best;
    run_search(solver, st, std::max(1u, options.threads));
    result.nodes += st.nodes;
    optimal = !st.exhausted;
    best = st.best;
    incumbent = st.incumbent;
    // A numeric lower bound above the true maximum leaves nothing found;
    // rerun from the seed.
    if (numeric_bound && attempt == 0 && optimal && best == start_best)
      continue;
    break;
  }

  // Phase 2: first clique of that size in sequential order.
  if (optimal && best > 0) {
    SharedState st;
    st.deadline = deadline;
    st.mode = Mode::find_size;
    st.target = best;
    run_search(solver, st, 1);
    result.nodes += st.nodes;
    if (st.incumbent.size() == best)
      incumbent = st.incumbent;
  }

  result.clique = solver.to_original(incumbent);
  result.optimal = optimal;
  result.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return result;
}

CliqueEnumeration enumerate_cliques_of_size(const BitGraph &g, std::size_t size,
                                            std::chrono::milliseconds budget,
                                            std::size_t limit) {
  CliqueEnumeration out;
  if (size == 0) {
    out.cliques.push_back({});
    out.complete = true;
    return out;
  }
  const Solver solver(g);
  SharedState st;
  st.mode = Mode::enumerate;
  st.target = size;
  st.limit = std::max<std::size_t>(limit, 1);
  st.deadline = deadline_after(budget, Clock::now());
  run_search(solver, st, 1);
  for (const auto &c : st.found)
    if (out.cliques.size() < st.limit)
      out.cliques.push_back(solver.to_original(c));
  std::sort(out.cliques.begin(), out.cliques.end());
  out.complete = !st.exhausted;
  return out;
}

} // namespace ekr
