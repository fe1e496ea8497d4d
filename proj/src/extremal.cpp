#include "ekr/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ekr {

std::optional<std::size_t>
IntersectionGraph::index_of(const CyclePermutation &p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Family IntersectionGraph::family(const std::vector<std::size_t> &ids) const {
  std::vector<CyclePermutation> members;
  members.reserve(ids.size());
  for (std::size_t v : ids)
    members.push_back(vertices.at(v));
  return Family(iota_ground(n), k, std::move(members));
}

Family IntersectionGraph::family_of_all() const {
  return Family(iota_ground(n), k, vertices);
}

IntersectionGraph build_graph(std::size_t n, std::size_t k, std::size_t t,
                              std::size_t vertex_cap) {
  if (t < 1 || t > k || k > n)
    throw std::invalid_argument("build_graph requires 1 <= t <= k <= n");
  if (stirling_recurrence(n, k) > vertex_cap)
    throw std::invalid_argument("|S_{" + std::to_string(n) + "," +
                                std::to_string(k) + "}| exceeds the cap of " +
                                std::to_string(vertex_cap) + " vertices");

  IntersectionGraph g;
  g.n = n;
  g.k = k;
  g.t = t;
  g.vertices = enumerate_snk(n, k);
  const std::size_t count = g.vertices.size();
  g.graph = BitGraph(count);

  std::unordered_map<Cycle, std::vector<std::size_t>, CycleHash> holders;
  for (std::size_t v = 0; v < count; ++v) {
    g.index_.emplace(g.vertices[v], v);
    for (const Cycle &c : g.vertices[v].cycles())
      holders[c].push_back(v);
  }

  std::vector<std::size_t> shared(count, 0);
  std::vector<std::size_t> touched;
  for (std::size_t v = 0; v < count; ++v) {
    touched.clear();
    for (const Cycle &c : g.vertices[v].cycles())
      for (std::size_t u : holders[c])
        if (u > v && shared[u]++ == 0)
          touched.push_back(u);
    for (std::size_t u : touched) {
      if (shared[u] >= t)
        g.graph.add_edge(v, u);
      shared[u] = 0;
    }
  }
  return g;
}

namespace {

SearchResult to_search_result(const IntersectionGraph &g,
                              const CliqueResult &r) {
  SearchResult out{r.clique.size(), g.family(r.clique), r.optimal, r.nodes,
                   r.elapsed};
  return out;
}

} // namespace

SearchResult max_clique(const IntersectionGraph &g, const Family &seed,
                        std::chrono::milliseconds budget, unsigned threads) {
  CliqueOptions opt;
  for (const CyclePermutation &p : seed.members()) {
    auto id = g.index_of(p);
    if (!id)
      throw std::invalid_argument("seed member " + p.to_string() +
                                  " is not a vertex");
    opt.seed_clique.push_back(*id);
  }
  opt.budget = budget;
  opt.threads = threads;
  return to_search_result(g, max_clique(g.graph, opt));
}

SearchResult max_clique(const IntersectionGraph &g,
                        std::size_t seed_lower_bound,
                        std::chrono::milliseconds budget, unsigned threads) {
  CliqueOptions opt;
  opt.lower_bound = seed_lower_bound;
  opt.budget = budget;
  opt.threads = threads;
  return to_search_result(g, max_clique(g.graph, opt));
}

const char *to_string(Relation r) {
  switch (r) {
  case Relation::below:
    return "below";
  case Relation::equal:
    return "equal";
  case Relation::above:
    return "above";
  }
  return "?";
}

const char *to_string(Uniqueness u) {
  switch (u) {
  case Uniqueness::checked:
    return "checked";
  case Uniqueness::not_checked:
    return "not_checked";
  case Uniqueness::incomplete:
    return "incomplete";
  case Uniqueness::not_applicable:
    return "not_applicable";
  }
  return "?";
}

TheoremReport verify_theorem(std::size_t n, std::size_t k, std::size_t t,
                             const VerifyOptions &options) {
  if (t < 1 || t >= k || k > n)
    throw std::invalid_argument("verify_theorem requires 1 <= t < k <= n");
  const auto start = std::chrono::steady_clock::now();

  TheoremReport report;
  report.n = n;
  report.k = k;
  report.t = t;
  report.bound = stirling_recurrence(n - t, k - t);

  const IntersectionGraph g = build_graph(n, k, t, options.vertex_cap);
  report.vertex_count = g.vertices.size();

  std::vector<Element> first_points = iota_ground(t);
  const Family seed =
      stabilizer_family(n, k, CycleSet::fixed_points(first_points));
  const SearchResult best =
      max_clique(g, seed, options.budget, std::max(1u, options.threads));

  report.max_size = best.best_size;
  report.optimal = best.optimal;
  report.nodes_explored = best.nodes_explored;
  const BigNat size(best.best_size);
  report.relation = size < report.bound    ? Relation::below
                    : size == report.bound ? Relation::equal
                                           : Relation::above;
  report.stabilizer_points = is_stabilizer_of_t_fixed_points(best.witness, t);
  for (const CyclePermutation &p : best.witness.members())
    report.witness_cycles.push_back(p.to_string());

  if (report.optimal && report.relation == Relation::equal) {
    if (!options.check_uniqueness ||
        report.vertex_count > options.uniqueness_vertex_cap) {
      report.uniqueness = Uniqueness::not_checked;
    } else {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      auto left = options.budget - elapsed;
      if (options.budget.count() > 0 && left.count() <= 0)
        left = std::chrono::milliseconds(1);
      const CliqueEnumeration all = enumerate_cliques_of_size(
          g.graph, report.max_size, options.budget.count() > 0 ? left : options.budget,
          options.uniqueness_limit);
      report.maxima_enumerated = all.cliques.size();
      bool every = true;
      for (const auto &clique : all.cliques)
        if (!is_stabilizer_of_t_fixed_points(g.family(clique), t)) {
          every = false;
          break;
        }
      if (all.complete) {
        report.uniqueness = Uniqueness::checked;
        report.all_maxima_stabilizers = every;
      } else {
        report.uniqueness = Uniqueness::incomplete;
        // a counterexample among a partial list is still conclusive
        if (!every)
          report.all_maxima_stabilizers = false;
      }
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

ThresholdReport find_n0(std::size_t k, std::size_t t, std::size_t n_max,
                        const VerifyOptions &options) {
  if (t < 1 || t >= k || k > n_max)
    throw std::invalid_argument("find_n0 requires 1 <= t < k <= n_max");
  ThresholdReport out;
  out.k = k;
  out.t = t;
  out.n_max = n_max;
  for (std::size_t n = k; n <= n_max; ++n)
    out.rows.push_back(verify_theorem(n, k, t, options));

  for (const TheoremReport &row : out.rows) {
    const bool meets_bound = row.optimal && row.relation == Relation::equal;
    const bool stabilizers_only =
        meets_bound && row.uniqueness == Uniqueness::checked &&
        row.all_maxima_stabilizers.value_or(false);
    if (!meets_bound)
      out.bound_from.reset();
    else if (!out.bound_from)
      out.bound_from = row.n;
    if (!stabilizers_only)
      out.stabilizer_from.reset();
    else if (!out.stabilizer_from)
      out.stabilizer_from = row.n;
  }
  return out;
}

} // namespace ekr
