#include "ekr/families.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <unordered_set>

namespace ekr {

CycleSet::CycleSet(std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
  std::sort(cycles_.begin(), cycles_.end());
  for (const Cycle &c : cycles_)
    for (Element e : c.elements())
      support_.push_back(e);
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
    throw std::invalid_argument("cycle set supports are not disjoint");
}

CycleSet CycleSet::fixed_points(std::span<const Element> points) {
  std::vector<Cycle> cycles;
  for (Element p : points)
    cycles.push_back(Cycle::canonicalize({p}));
  return CycleSet(std::move(cycles));
}

Family::Family(std::vector<Element> ground, std::size_t k,
               std::vector<CyclePermutation> members)
    : ground_(std::move(ground)), k_(k), members_(std::move(members)) {
  std::sort(ground_.begin(), ground_.end());
  std::unordered_set<CyclePermutation, PermutationHash> seen;
  for (const CyclePermutation &p : members_) {
    if (p.ground() != ground_)
      throw std::invalid_argument("member " + p.to_string() +
                                  " is on a different ground set");
    if (p.cycle_count() != k_)
      throw std::invalid_argument("member " + p.to_string() + " does not have " +
                                  std::to_string(k_) + " cycles");
    if (!seen.insert(p).second)
      throw std::invalid_argument("duplicate member " + p.to_string());
  }
}

Family Family::all(std::size_t n, std::size_t k) {
  return Family(iota_ground(n), k, enumerate_snk(n, k));
}

bool operator==(const Family &a, const Family &b) {
  if (a.ground_ != b.ground_ || a.k_ != b.k_ || a.size() != b.size())
    return false;
  std::unordered_set<CyclePermutation, PermutationHash> lhs(
      a.members_.begin(), a.members_.end());
  return std::all_of(b.members_.begin(), b.members_.end(),
                     [&](const CyclePermutation &p) { return lhs.count(p); });
}

std::size_t common_cycles(const CyclePermutation &a,
                          const CyclePermutation &b) {
  if (a.ground() != b.ground())
    throw std::invalid_argument("common_cycles needs a common ground set");
  // both cycle lists are sorted
  std::size_t count = 0;
  auto i = a.cycles().begin(), j = b.cycles().begin();
  while (i != a.cycles().end() && j != b.cycles().end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool is_t_intersecting(const Family &fam, std::size_t t) {
  if (t == 0)
    throw std::invalid_argument("t must be at least 1");
  if (!fam.empty() && fam.k() < t)
    return false;
  const auto &m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (common_cycles(m[i], m[j]) < t)
        return false;
  return true;
}

bool is_independent(const Family &fam) {
  const auto &m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (common_cycles(m[i], m[j]) != 0)
        return false;
  return true;
}

Family greedy_maximal_independent(const Family &fam) {
  std::unordered_set<Cycle, CycleHash> used;
  std::vector<CyclePermutation> chosen;
  for (const CyclePermutation &p : fam.members()) {
    const bool disjoint =
        std::none_of(p.cycles().begin(), p.cycles().end(),
                     [&](const Cycle &c) { return used.count(c); });
    if (!disjoint)
      continue;
    used.insert(p.cycles().begin(), p.cycles().end());
    chosen.push_back(p);
  }
  return Family(fam.ground(), fam.k(), std::move(chosen));
}

CoverBoundReport cover_bound_check(const Family &fam) {
  if (fam.k() < 2)
    throw std::invalid_argument("cover bound requires k >= 2");
  if (fam.ground_n() < 1)
    throw std::invalid_argument("cover bound requires a nonempty ground set");
  CoverBoundReport r;
  r.size = fam.size();
  r.l = greedy_maximal_independent(fam).size();
  r.bound_rhs = BigNat(fam.k()) * r.l *
                stirling_recurrence(fam.ground_n() - 1, fam.k() - 1);
  r.holds = BigNat(r.size) <= r.bound_rhs;
  return r;
}

Family stabilizer_family(std::span<const Element> ground, std::size_t k,
                         const CycleSet &fixed) {
  std::vector<Element> g(ground.begin(), ground.end());
  std::sort(g.begin(), g.end());
  const auto &p = fixed.support();
  if (!std::includes(g.begin(), g.end(), p.begin(), p.end()))
    throw std::invalid_argument("cycle set is not inside the ground set");
  if (fixed.size() > k)
    throw std::invalid_argument("cycle set has more than k cycles");
  std::vector<Element> rest;
  std::set_difference(g.begin(), g.end(), p.begin(), p.end(),
                      std::back_inserter(rest));
  const std::size_t k_rest = k - fixed.size();
  if (k_rest > rest.size())
    throw std::invalid_argument("too many cycles for the remaining points");

  std::vector<CyclePermutation> members;
  // [m 0] = 0 for m > 0: nothing to enumerate
  if (k_rest > 0 || rest.empty()) {
    for_each_snk(rest, k_rest, [&](const CyclePermutation &sub) {
      std::vector<Cycle> cycles = sub.cycles();
      cycles.insert(cycles.end(), fixed.cycles().begin(),
                    fixed.cycles().end());
      members.push_back(CyclePermutation::from_cycles(std::move(cycles)));
    });
  }
  return Family(std::move(g), k, std::move(members));
}

Family stabilizer_family(std::size_t n, std::size_t k, const CycleSet &fixed) {
  return stabilizer_family(iota_ground(n), k, fixed);
}

Family restrict(const Family &fam, const CycleSet &fixed) {
  std::vector<CyclePermutation> kept;
  for (const CyclePermutation &p : fam.members())
    if (std::all_of(fixed.cycles().begin(), fixed.cycles().end(),
                    [&](const Cycle &c) { return p.contains(c); }))
      kept.push_back(p);
  return Family(fam.ground(), fam.k(), std::move(kept));
}

Family star(const Family &fam, const CycleSet &fixed) {
  std::vector<Element> rest;
  std::set_difference(fam.ground().begin(), fam.ground().end(),
                      fixed.support().begin(), fixed.support().end(),
                      std::back_inserter(rest));
  if (fixed.size() > fam.k())
    return Family(std::move(rest), 0);
  std::vector<CyclePermutation> reduced;
  const Family restricted = restrict(fam, fixed);
  for (const CyclePermutation &p : restricted.members())
    reduced.push_back(remove_cycles(p, fixed.cycles()));
  return Family(std::move(rest), fam.k() - fixed.size(), std::move(reduced));
}

namespace {

// Calls visit on each t-subset of `items` in lexicographic order until it
// returns true.
template <class Visit>
bool any_subset(const std::vector<Element> &items, std::size_t t,
                Visit &&visit) {
  if (t > items.size())
    return false;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i)
    idx[i] = i;
  std::vector<Element> pick(t);
  for (;;) {
    for (std::size_t i = 0; i < t; ++i)
      pick[i] = items[idx[i]];
    if (visit(pick))
      return true;
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == items.size() - t + (i - 1))
      --i;
    if (i == 0)
      return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

std::optional<std::vector<Element>>
is_stabilizer_of_t_fixed_points(const Family &fam, std::size_t t) {
  if (t == 0)
    throw std::invalid_argument("t must be at least 1");
  if (fam.empty() || t > fam.k())
    return std::nullopt;
  const std::size_t n = fam.ground_n();
  if (fam.k() - t > n - t ||
      BigNat(fam.size()) != stirling_recurrence(n - t, fam.k() - t))
    return std::nullopt;

  std::vector<Cycle> common = fam[0].cycles();
  for (const CyclePermutation &p : fam.members()) {
    std::erase_if(common, [&](const Cycle &c) { return !p.contains(c); });
    if (common.empty())
      return std::nullopt;
  }
  std::vector<Element> fixed_points;
  for (const Cycle &c : common)
    if (c.is_fixed_point())
      fixed_points.push_back(c.min());

  std::optional<std::vector<Element>> witness;
  any_subset(fixed_points, t, [&](const std::vector<Element> &pick) {
    if (stabilizer_family(fam.ground(), fam.k(),
                          CycleSet::fixed_points(pick)) == fam) {
      witness = pick;
      return true;
    }
    return false;
  });
  return witness;
}

} // namespace ekr
