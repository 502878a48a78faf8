#include "catch_amalgamated.hpp"

#include "atomkit/atoms.hpp"
#include "atomkit/bounds.hpp"
#include "atomkit/error.hpp"
#include "atomkit/search.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace atomkit;

namespace {

StateSet S(std::initializer_list<State> m) { return StateSet(3, m); }

std::vector<StateSet> successors(Atomaton const& a, StateSet const& label, Letter x) {
  auto const q = a.state_of(label);
  REQUIRE(q);
  std::vector<StateSet> out;
  a.nfa.eta[x][*q].for_each([&](State p) { out.push_back(a.nfa.labels[p]); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("átomaton of the example DFA") {
  Atomaton const a = build_atomaton(example1());
  CHECK_FALSE(a.minimized_input);
  CHECK(a.nfa.size == 8);
  std::vector<StateSet> initials;
  a.nfa.initials.for_each([&](State q) { initials.push_back(a.nfa.labels[q]); });
  std::sort(initials.begin(), initials.end());
  CHECK(initials == std::vector<StateSet>{S({0}), S({0, 1}), S({0, 2}), S({0, 1, 2})});
  CHECK(a.nfa.finals.size() == 1);
  a.nfa.finals.for_each([&](State q) { CHECK(a.nfa.labels[q] == S({2})); });

  Letter const la = 0, lb = 1, lc = 2, ld = 3;
  CHECK(successors(a, S({0, 1, 2}), ld) ==
        std::vector<StateSet>{S({1}), S({0, 1}), S({1, 2}), S({0, 1, 2})});
  CHECK(successors(a, S({}), lc) == std::vector<StateSet>{S({}), S({2})});
  CHECK(successors(a, S({}), ld) == std::vector<StateSet>{S({}), S({0}), S({2}), S({0, 2})});
  CHECK(successors(a, S({0}), la) == std::vector<StateSet>{S({1})});
  CHECK(successors(a, S({0}), ld).empty());
  CHECK(successors(a, S({1}), lc) == std::vector<StateSet>{S({1}), S({1, 2})});
  CHECK(successors(a, S({0, 2}), lc) == std::vector<StateSet>{S({0}), S({0, 2})});
  CHECK(successors(a, S({0, 1, 2}), lc) == std::vector<StateSet>{S({0, 1}), S({0, 1, 2})});
  CHECK(successors(a, S({1, 2}), lb) == std::vector<StateSet>{S({1, 2})});
}

TEST_CASE("one-state universal language") {
  Dfa const d({"a"}, {identity(1)}, 0, StateSet(1, {0}));
  Atomaton const a = build_atomaton(d);
  CHECK(a.nfa.size == 1);
  CHECK(a.nfa.initials.contains(0));
  CHECK(a.nfa.finals.contains(0));
  auto const reports = atoms_of(d);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].is_final);
  CHECK(reports[0].is_initial);
  CHECK(reports[0].complexity == 1);
}

TEST_CASE("empty language") {
  Dfa const d({"a"}, {identity(1)}, 0, StateSet(1));
  auto const reports = atoms_of(d);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].is_negative);
  CHECK_FALSE(reports[0].is_final);
  CHECK(reports[0].r == 1);
}

TEST_CASE("atoms of the example DFA") {
  auto const reports = atoms_of(example1());
  REQUIRE(reports.size() == 8);
  std::vector<std::uint64_t> complexities;
  for (auto const& r : reports) {
    complexities.push_back(r.complexity);
    CHECK(r.is_maximal);
    CHECK(r.complexity == r.bound);
    CHECK(r.r == 3 - r.label.size());
    CHECK(r.determinized_states == r.complexity);
  }
  CHECK(complexities == std::vector<std::uint64_t>{7, 10, 10, 10, 10, 10, 10, 7});
  CHECK(reports.front().is_negative);
  std::size_t finals = 0;
  for (auto const& r : reports) {
    finals += r.is_final;
    CHECK(r.is_initial == r.label.contains(0));
  }
  CHECK(finals == 1);
}

TEST_CASE("atom DFAs") {
  Dfa const e = example1();
  Dfa const all = atom_minimal_dfa(e, S({0, 1, 2}));
  for (auto const& w : helpers::words_up_to(4, 6)) {
    CHECK(accepts(all, w) == membership_in_atom(e, S({0, 1, 2}), w));
  }
  CHECK(atom_quotient_complexity(witness_max_semigroup(3), S({0, 1})) == 10);
  CHECK(atom_quotient_complexity(witness_max_semigroup(3), S({0, 1, 2})) == 7);
  CHECK(atom_quotient_complexity(witness_max_semigroup(4), StateSet(4, {1, 3})) == 43);
  // the language of a b* has no atom with S = {0}
  Dfa const ab({"a", "b"}, {Transformation{1, 2, 2}, Transformation{2, 1, 2}}, 0,
               StateSet(3, {1}));
  CHECK_THROWS_AS(atom_minimal_dfa(ab, S({0, 1})), Error);
}

TEST_CASE("direct membership") {
  Dfa const e = example1();
  CHECK(membership_in_atom(e, S({2}), {}));
  for (std::uint64_t m = 0; m < 8; ++m) {
    if (m != 4) {
      CHECK_FALSE(membership_in_atom(e, StateSet::from_mask(3, m), {}));
    }
  }
  CHECK(membership_in_atom(e, S({1}), parse_word(e.alphabet(), "b")));
  CHECK_THROWS_AS(membership_in_atom(e, S({1}), {9}), Error);
}

TEST_CASE("atom languages agree with the definition on random DFAs") {
  auto const words = helpers::words_up_to(2, 6);
  for (std::uint64_t i = 0; i < 60; ++i) {
    Dfa const d = minimize(sample_dfa(1 + i % 4, 2, 31, i));
    auto const labels = atom_labels(d);
    for (auto const& label : labels) {
      Dfa const atom = atom_minimal_dfa(d, label);
      for (auto const& w : words) {
        REQUIRE(accepts(atom, w) == membership_in_atom(d, label, w));
      }
    }
    for (auto const& w : words) {
      std::size_t hits = 0;
      for (auto const& label : labels) {
        hits += membership_in_atom(d, label, w);
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("atom complexities agree with the transformation-automaton oracle") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Dfa const d = minimize(sample_dfa(1 + i % 4, 1 + i % 3, 37, i));
    for (auto const& r : atoms_of(d)) {
      CHECK(r.complexity == oracle::atom_complexity(d, helpers::membership(r.label)));
      CHECK(r.complexity <= r.bound);
      CHECK(r.determinized_states == r.complexity);
    }
  }
}

TEST_CASE("atom count equals the complexity of the reverse") {
  for (std::uint64_t i = 0; i < 10'000; ++i) {
    Dfa const d = sample_dfa(1 + i % 5, 1 + i % 3, 41, i);
    std::size_t const atoms = atom_labels(d).size();
    REQUIRE(atoms == quotient_complexity(reverse(d)));
    if (i % 20 == 0) {
      CHECK(atoms == oracle::atom_count(d));
      CHECK(atoms == oracle::reverse_complexity(d));
    }
  }
}

TEST_CASE("the negative atom is unreachable from the initial atoms") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Atomaton const a = build_atomaton(sample_dfa(1 + i % 4, 1 + i % 3, 43, i));
    auto const phi = a.state_of(StateSet(a.quotient_count()));
    if (!phi) {
      continue;
    }
    // forward closure of the initials
    StateSet reached = a.nfa.initials;
    for (StateSet frontier = reached; !frontier.empty();) {
      StateSet next(a.nfa.size);
      for (Letter x = 0; x < a.nfa.alphabet.size(); ++x) {
        next |= a.nfa.step(frontier, x);
      }
      frontier = next - reached;
      reached |= next;
    }
    CHECK_FALSE(reached.contains(*phi));
  }
}

TEST_CASE("non-minimal input is minimized first") {
  Dfa const d({"a"}, {Transformation{1, 2, 1}}, 0, StateSet(3, {1, 2}));
  Atomaton const a = build_atomaton(d);
  CHECK(a.minimized_input);
  CHECK(a.quotient_count() == 2);
  CHECK(atoms_of(d).size() == atom_labels(d).size());
}
