#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ekr/families.hpp"

using namespace ekr;

namespace {

CyclePermutation P(const char *text) { return CyclePermutation::parse(text); }
Cycle C(std::initializer_list<Element> e) { return Cycle::canonicalize(e); }

Family family_of(std::initializer_list<const char *> texts) {
  std::vector<CyclePermutation> members;
  for (const char *t : texts)
    members.push_back(P(t));
  auto ground = members.front().ground();
  auto k = members.front().cycle_count();
  return Family(ground, k, members);
}

Family random_subfamily(const Family &all, std::mt19937_64 &rng) {
  std::vector<CyclePermutation> pick;
  const double keep = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
  std::bernoulli_distribution coin(keep);
  for (const auto &p : all.members())
    if (coin(rng))
      pick.push_back(p);
  return Family(all.ground(), all.k(), pick);
}

} // namespace

TEST_CASE("family construction rejects inconsistent members") {
  CHECK_THROWS_AS(Family(iota_ground(3), 2, {P("(1 2)(3)"), P("(1 2)(3)")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Family(iota_ground(3), 2, {P("(1 2 3)")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Family(iota_ground(4), 2, {P("(1 2)(3)")}),
                  std::invalid_argument);
  CHECK(Family::all(5, 2).size() == 50);
}

TEST_CASE("cycle sets must be disjoint") {
  CHECK_THROWS_AS(CycleSet({C({1, 2}), C({2, 3})}), std::invalid_argument);
  CycleSet t({C({4, 5}), C({1})});
  CHECK(t.support() == std::vector<Element>{1, 4, 5});
  CHECK(t.cycles().front() == C({1}));
}

TEST_CASE("common_cycles") {
  auto pi = P("(1)(2)(3 4 5)");
  CHECK(common_cycles(pi, pi) == 3);
  CHECK(common_cycles(P("(1)(2)(3 4 5)"), P("(1)(2)(3 5 4)")) == 2);
  CHECK(common_cycles(P("(1 2)(3)(4)"), P("(3)(4)(1 2)")) == 3);
  CHECK_THROWS_AS(common_cycles(P("(1 2)"), P("(1 2)(3)")),
                  std::invalid_argument);
}

TEST_CASE("common_cycles is symmetric with self value k") {
  const auto all = enumerate_snk(5, 3);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(common_cycles(all[i], all[i]) == 3);
    for (std::size_t j = 0; j < all.size(); j += 3)
      CHECK(common_cycles(all[i], all[j]) == common_cycles(all[j], all[i]));
  }
}

TEST_CASE("t-intersection") {
  CHECK(is_t_intersecting(family_of({"(1)(2 3)"}), 1));
  CHECK(is_t_intersecting(family_of({"(1)(2 3)"}), 2));
  CHECK_FALSE(is_t_intersecting(family_of({"(1)(2 3)"}), 3));
  CHECK_FALSE(is_t_intersecting(family_of({"(1)(2 3)", "(2)(1 3)", "(3)(1 2)"}), 1));
  auto stab = stabilizer_family(6, 3, CycleSet::fixed_points(std::vector<Element>{1, 2}));
  CHECK(is_t_intersecting(stab, 2));
  CHECK_THROWS_AS(is_t_intersecting(stab, 0), std::invalid_argument);
}

TEST_CASE("t-intersection is inherited by subfamilies") {
  std::mt19937_64 rng(5);
  auto stab = stabilizer_family(7, 3, CycleSet({C({1}), C({2, 3})}));
  REQUIRE(is_t_intersecting(stab, 2));
  for (int trial = 0; trial < 50; ++trial)
    CHECK(is_t_intersecting(random_subfamily(stab, rng), 2));
}

TEST_CASE("independence") {
  CHECK(is_independent(family_of({"(1)(2 3)"})));
  CHECK(is_independent(family_of({"(1)(2 3)", "(2)(1 3)", "(3)(1 2)"})));
  CHECK_FALSE(is_independent(family_of({"(1)(2 3 4)", "(1)(2 4 3)"})));
}

TEST_CASE("greedy maximal independent subfamily") {
  auto indep = family_of({"(1)(2 3)", "(2)(1 3)", "(3)(1 2)"});
  CHECK(greedy_maximal_independent(indep) == indep);

  auto sharing = family_of({"(1)(2 3 4)", "(1)(2 4 3)"});
  auto g = greedy_maximal_independent(sharing);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == P("(1)(2 3 4)"));

  auto mixed = family_of({"(1)(2 3 4)", "(1)(2 4 3)", "(1 2)(3 4)"});
  CHECK(greedy_maximal_independent(mixed) ==
        family_of({"(1)(2 3 4)", "(1 2)(3 4)"}));

  auto stab = stabilizer_family(6, 3, CycleSet::fixed_points(std::vector<Element>{1, 2}));
  auto gs = greedy_maximal_independent(stab);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0] == stab[0]);
}

TEST_CASE("greedy output is independent and maximal") {
  std::mt19937_64 rng(17);
  const Family all = Family::all(6, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Family fam = random_subfamily(all, rng);
    const Family chosen = greedy_maximal_independent(fam);
    CHECK(is_independent(chosen));
    for (const auto &p : fam.members()) {
      bool blocked = false;
      for (const auto &q : chosen.members())
        if (common_cycles(p, q) > 0)
          blocked = true;
      CHECK(blocked); // members of chosen block themselves
    }
  }
}

TEST_CASE("cover bound") {
  const Family all = Family::all(4, 2);
  const CoverBoundReport r = cover_bound_check(all);
  CHECK(r.size == 11);
  // greedy pass over S_{4,2}: hand-run oracle below
  std::size_t l = 0;
  std::vector<CyclePermutation> kept;
  for (const auto &p : all.members()) {
    bool ok = true;
    for (const auto &q : kept)
      for (const auto &c : p.cycles())
        if (q.contains(c))
          ok = false;
    if (ok) {
      kept.push_back(p);
      ++l;
    }
  }
  CHECK(r.l == l);
  CHECK(r.bound_rhs == BigNat(2 * l * 2));
  CHECK(r.holds);

  const CoverBoundReport single = cover_bound_check(family_of({"(1)(2 3 4)"}));
  CHECK(single.size == 1);
  CHECK(single.l == 1);
  CHECK(single.bound_rhs == 4);
  CHECK(single.holds);

  CHECK_THROWS_AS(cover_bound_check(Family::all(4, 1)), std::invalid_argument);
}

TEST_CASE("cover bound holds on random subfamilies of S_{6,3}") {
  std::mt19937_64 rng(23);
  const Family all = Family::all(6, 3);
  for (int trial = 0; trial < 200; ++trial)
    CHECK(cover_bound_check(random_subfamily(all, rng)).holds);
}

TEST_CASE("stabilizer families") {
  auto two_points = stabilizer_family(5, 3, CycleSet::fixed_points(std::vector<Element>{1, 2}));
  CHECK(two_points.size() == 2);
  for (const auto &p : two_points.members()) {
    CHECK(p.contains(C({1})));
    CHECK(p.contains(C({2})));
  }

  auto transposition = stabilizer_family(4, 2, CycleSet({C({1, 2})}));
  REQUIRE(transposition.size() == 1);
  CHECK(transposition[0] == P("(1 2)(3 4)"));

  // k = |T| with points left over has no members
  CHECK(stabilizer_family(4, 1, CycleSet({C({1, 2})})).size() == 0);
  CHECK(stabilizer_family(3, 1, CycleSet({C({1, 3, 2})})).size() == 1);

  CHECK_THROWS_AS(stabilizer_family(4, 1, CycleSet({C({1}), C({2})})),
                  std::invalid_argument);
  CHECK_THROWS_AS(stabilizer_family(4, 2, CycleSet({C({5})})),
                  std::invalid_argument);
  CHECK_THROWS_AS(stabilizer_family(4, 4, CycleSet({C({1, 2})})),
                  std::invalid_argument);
}

TEST_CASE("stabilizer size law over every cycle set of small permutations") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (const auto &pi : enumerate_snk(n, k)) {
        // every subset of M(pi) is a valid disjoint cycle set
        const auto &cycles = pi.cycles();
        for (std::size_t mask = 0; mask < (std::size_t{1} << cycles.size());
             mask += 1 + (mask % 3)) {
          std::vector<Cycle> chosen;
          for (std::size_t i = 0; i < cycles.size(); ++i)
            if (mask >> i & 1)
              chosen.push_back(cycles[i]);
          CycleSet t(chosen);
          for (std::size_t kk = std::max<std::size_t>(t.size(), 1); kk <= n; ++kk) {
            if (kk - t.size() > n - t.support().size())
              continue;
            auto fam = stabilizer_family(n, kk, t);
            CHECK(stirling_recurrence(n - t.support().size(), kk - t.size()) ==
                  fam.size());
            if (!t.empty())
              CHECK(is_t_intersecting(fam, t.size()));
          }
        }
      }
}

TEST_CASE("restrict and star") {
  const Family all = Family::all(4, 2);
  CHECK(restrict(all, CycleSet()) == all);

  auto r = restrict(all, CycleSet({C({1})}));
  CHECK(r == family_of({"(1)(2 3 4)", "(1)(2 4 3)"}));

  auto t = CycleSet({C({1}), C({3, 4})});
  auto stab = stabilizer_family(7, 4, t);
  CHECK(restrict(stab, t) == stab);

  auto s = star(stab, t);
  CHECK(s.ground() == std::vector<Element>{2, 5, 6, 7});
  CHECK(s.k() == 2);
  CHECK(s == Family(s.ground(), 2, enumerate_snk(s.ground(), 2)));

  auto none = star(family_of({"(1 2)(3 4)"}), CycleSet({C({1})}));
  CHECK(none.empty());
}

TEST_CASE("|star| == |restrict|") {
  std::mt19937_64 rng(31);
  const Family all = Family::all(6, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Family fam = random_subfamily(all, rng);
    const auto &pi = all[rng() % all.size()];
    std::vector<Cycle> chosen;
    for (const auto &c : pi.cycles())
      if (rng() % 2)
        chosen.push_back(c);
    const CycleSet t(chosen);
    CHECK(star(fam, t).size() == restrict(fam, t).size());
  }
}

TEST_CASE("stabilizer recognition") {
  auto stab = stabilizer_family(6, 3, CycleSet::fixed_points(std::vector<Element>{1, 2}));
  auto w = is_stabilizer_of_t_fixed_points(stab, 2);
  REQUIRE(w);
  CHECK(*w == std::vector<Element>{1, 2});

  auto by_transposition = stabilizer_family(6, 3, CycleSet({C({1, 2})}));
  CHECK_FALSE(is_stabilizer_of_t_fixed_points(by_transposition, 1));

  auto smaller = family_of({"(1)(2)(3 4 5 6)", "(1)(2)(3 4 6 5)"});
  CHECK_FALSE(is_stabilizer_of_t_fixed_points(smaller, 2));

  // right size, common fixed point, but not the stabilizer
  auto one = stabilizer_family(5, 2, CycleSet::fixed_points(std::vector<Element>{1}));
  std::vector<CyclePermutation> swapped = one.members();
  swapped.back() = P("(2)(1 3 4 5)");
  CHECK_FALSE(is_stabilizer_of_t_fixed_points(
      Family(iota_ground(5), 2, swapped), 1));

  CHECK(is_stabilizer_of_t_fixed_points(one, 1) == std::vector<Element>{1});
  CHECK_FALSE(is_stabilizer_of_t_fixed_points(Family(iota_ground(5), 2), 1));
  CHECK_THROWS_AS(is_stabilizer_of_t_fixed_points(one, 0), std::invalid_argument);
}
