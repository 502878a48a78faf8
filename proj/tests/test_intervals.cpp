#include <map>
#include <random>

#include "catch_amalgamated.hpp"

#include "atomkit/bounds.hpp"
#include "atomkit/error.hpp"
#include "atomkit/intervals.hpp"
#include "atomkit/search.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace atomkit;

namespace {

StateSet S(std::initializer_list<State> m) { return StateSet(3, m); }

std::vector<StateSet> oracle_successors(Dfa const& d, StateSet const& s, Letter a) {
  auto const map = d.delta(a).map();
  std::vector<StateSet> out;
  for (auto const& t : oracle::preimage_collection(oracle::Map(map.begin(), map.end()),
                                                   helpers::membership(s))) {
    out.push_back(helpers::from_membership(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Tarjan-free SCC test: same-type states of the reach graph reach each other.
bool same_type_mutually_reachable(IntervalReach const& reach) {
  std::size_t const m = reach.states.size();
  std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> todo{i};
    r[i][i] = true;
    while (!todo.empty()) {
      std::size_t q = todo.back();
      todo.pop_back();
      for (std::size_t next : reach.next[q]) {
        if (!r[i][next]) {
          r[i][next] = true;
          todo.push_back(next);
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (reach.states[i].empty() || reach.states[j].empty()) {
        continue;
      }
      if (reach.states[i].type() == reach.states[j].type() && !(r[i][j] && r[j][i])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("intervals as collections") {
  Interval const iv{S({1}), S({0, 1, 2})};
  CHECK(iv.count() == 4);
  CHECK(iv.members() == std::vector<StateSet>{S({1}), S({0, 1}), S({1, 2}), S({0, 1, 2})});
  CHECK(iv.type() == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(Interval{S({0}), S({1})}.empty());
  CHECK(Interval{S({0}), S({1})} == Interval::empty_interval(3));
  CHECK(as_interval({S({1}), S({0, 1})}, 3) == Interval{S({1}), S({0, 1})});
  CHECK_FALSE(as_interval({S({0}), S({1})}, 3));
  CHECK(as_interval({}, 3)->empty());
}

TEST_CASE("letter transitions of the example DFA") {
  IntervalCalculus const calc(example1());
  Letter const a = 0, c = 2, d = 3;
  CHECK(calc.eta_letter(S({0, 1, 2}), d) == Interval{S({1}), S({0, 1, 2})});
  CHECK(calc.eta_letter(S({0}), d).empty());
  CHECK(calc.eta_letter(S({0, 2}), c) == Interval{S({0}), S({0, 2})});
  for (std::uint64_t m = 0; m < 8; ++m) {
    StateSet const s = StateSet::from_mask(3, m);
    for (Letter x = 0; x < 4; ++x) {
      if (!is_preimage(example1().delta(x), s)) {
        CHECK(calc.eta_letter(s, x).empty());
        CHECK_THROWS_AS(calc.eta_letter_on_interval(Interval::singleton(s), x), Error);
        continue;
      }
      CHECK(calc.eta_letter_on_interval(Interval::singleton(s), x) == calc.eta_letter(s, x));
    }
  }
  Interval const iv{S({1}), S({0, 1, 2})};
  Interval const out = calc.eta_letter_on_interval(iv, a);
  CHECK(out == Interval{S({0}), S({0, 1, 2})});
  std::vector<StateSet> mapped;
  for (auto const& t : iv.members()) {
    mapped.push_back(apply_to_set(example1().delta(a), t));
  }
  CHECK(as_interval(mapped, 3) == out);
  CHECK(calc.eta_letter_on_interval(Interval::empty_interval(3), d).empty());
  CHECK_THROWS_WITH(calc.eta_letter_on_interval(iv, d),
                    Catch::Matchers::ContainsSubstring("is not a preimage"));
}

TEST_CASE("permutation words") {
  Dfa const e = example1();
  IntervalCalculus const calc(e);
  Interval const iv{S({0}), S({0, 1})};
  CHECK(calc.eta_word_perm(iv, {}) == iv);
  CHECK(calc.eta_word_perm(iv, parse_word(e.alphabet(), "a")) == Interval{S({1}), S({0, 1})});
  CHECK(calc.eta_word_perm(iv, parse_word(e.alphabet(), "aa")) == iv);
  CHECK_THROWS_AS(calc.eta_word_perm(iv, parse_word(e.alphabet(), "c")), Error);
}

TEST_CASE("the calculus needs a full semigroup") {
  Dfa const swap({"a"}, {make_transposition(2, 0, 1)}, 0, StateSet(2, {1}));
  CHECK_THROWS_WITH(IntervalCalculus(swap), Catch::Matchers::ContainsSubstring("deficit 2"));
  Dfa const dup({"a"}, {Transformation{1, 2, 1}}, 0, StateSet(3, {1, 2}));
  CHECK_THROWS_AS(IntervalCalculus(dup), Error);
}

TEST_CASE("letter transitions match the preimage oracle (n = 3, all full instances)") {
  std::size_t instances = 0;
  for (Dfa const& d : helpers::full_semigroup_n3()) {
    IntervalCalculus const calc(d);
    Atomaton const& atomaton = calc.atomaton();
    for (std::uint64_t m = 0; m < 8; ++m) {
      StateSet const s = StateSet::from_mask(3, m);
      for (Letter a = 0; a < 3; ++a) {
        auto const expected = oracle_successors(d, s, a);
        Interval const iv = calc.eta_letter(s, a);
        REQUIRE(iv.members() == expected);
        REQUIRE(atomaton_successors(atomaton, s, a) == expected);
      }
    }
    ++instances;
  }
  CHECK(instances == 5832);
}

TEST_CASE("letter transitions match the preimage oracle (n = 4, sampled)") {
  for (Dfa const& d : helpers::sampled_full_semigroup(4, 3, 100, 47)) {
    IntervalCalculus const calc(d);
    for (std::uint64_t m = 0; m < 16; ++m) {
      StateSet const s = StateSet::from_mask(4, m);
      for (Letter a = 0; a < 3; ++a) {
        REQUIRE(calc.eta_letter(s, a).members() == oracle_successors(d, s, a));
        REQUIRE(atomaton_successors(calc.atomaton(), s, a) == oracle_successors(d, s, a));
      }
    }
  }
}

TEST_CASE("reach counts equal atom complexities") {
  std::vector<Dfa> instances = helpers::full_semigroup_n3();
  instances.resize(500);
  auto const n4 = helpers::sampled_full_semigroup(4, 3, 50, 53);
  instances.insert(instances.end(), n4.begin(), n4.end());
  instances.push_back(witness_max_semigroup(4));
  for (Dfa const& d : instances) {
    IntervalCalculus const calc(d);
    std::size_t const n = d.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      StateSet const s = StateSet::from_mask(n, m);
      IntervalReach const reach = calc.reach(s);
      REQUIRE(reach.count() == atom_quotient_complexity(d, s));
      REQUIRE(reach.count() == max_atom_complexity(n, n - s.size()));
      // the empty collection is reached exactly for 0 < r < n
      CHECK(reach.sink_reached == (s.size() > 0 && s.size() < n));
      std::set<std::pair<std::size_t, std::size_t>> types = reach.types();
      CHECK(types == type_reachability(n, s.size()));
      CHECK(same_type_mutually_reachable(reach));
    }
  }
}

TEST_CASE("witness reach counts") {
  Dfa const w3 = witness_max_semigroup(3);
  CHECK(interval_reach_count(w3, S({0, 1})) == 10);
  CHECK(interval_reach_count(w3, S({0, 1, 2})) == 7);
  CHECK(interval_reach_count(witness_max_semigroup(4), StateSet(4, {0, 2})) == 43);
}

TEST_CASE("type reachability") {
  using T = std::set<std::pair<std::size_t, std::size_t>>;
  CHECK(type_reachability(3, 2) == T{{2, 2}, {1, 2}});
  CHECK(type_reachability(3, 3) == T{{3, 3}, {2, 3}, {1, 3}});
  CHECK(type_reachability(3, 0) == T{{0, 0}, {0, 1}, {0, 2}});
  CHECK_THROWS_AS(type_reachability(3, 4), Error);
}

TEST_CASE("counting from types") {
  CHECK(count_from_types(3, 2) == 10);
  CHECK(count_from_types(3, 3) == 7);
  CHECK(count_from_types(4, 2) == 43);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t s = 0; s <= n; ++s) {
      CHECK(count_from_types(n, s) == max_atom_complexity(n, n - s));
    }
  }
}

TEST_CASE("kernel criterion agrees with enumeration") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t const n = 1 + trial % 7;
    std::vector<State> map(n);
    for (auto& v : map) {
      v = static_cast<State>(rng() % n);
    }
    Transformation const t(map);
    std::uint64_t const full = (std::uint64_t{1} << n) - 1;
    StateSet const upper = StateSet::from_mask(n, rng() & full);
    StateSet const lower = upper & StateSet::from_mask(n, rng() & full);
    Interval const iv{lower, upper};
    auto const by_enum = non_preimage_member_by_enumeration(t, iv);
    auto const by_kernel = non_preimage_member_by_kernel(t, iv);
    REQUIRE(by_enum.has_value() == by_kernel.has_value());
    if (by_kernel) {
      CHECK(iv.contains(*by_kernel));
      CHECK_FALSE(is_preimage(t, *by_kernel));
    }
  }
}

TEST_CASE("large intervals use the kernel criterion") {
  std::size_t const n = 20;
  std::vector<State> map(n);
  for (State q = 0; q < n; ++q) {
    map[q] = q;
  }
  map[19] = 0;
  Transformation const t(map);
  Interval const ok{StateSet(n, {0, 19}), StateSet::full(n)};
  CHECK_FALSE(non_preimage_member(t, ok));
  Interval const bad{StateSet(n, {0}), StateSet::full(n)};
  auto const witness = non_preimage_member(t, bad);
  REQUIRE(witness);
  CHECK_FALSE(is_preimage(t, *witness));
}
