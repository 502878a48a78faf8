#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "atomkit/automata.hpp"
#include "atomkit/error.hpp"
#include "atomkit/search.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace atomkit;

namespace {

StateSet S(std::initializer_list<State> m) { return StateSet(3, m); }

std::string row(SubsetDfa const& rd, StateSet const& label) {
  auto const q = rd.find_label(label);
  REQUIRE(q);
  std::string out;
  for (Letter a = 0; a < rd.dfa.alphabet_size(); ++a) {
    out += (out.empty() ? "" : " ") + format_set(rd.labels[rd.dfa.step(*q, a)], "Φ");
  }
  return out;
}

bool same_language(Dfa const& d, Nfa const& m, std::size_t max_len) {
  for (auto const& w : helpers::words_up_to(d.alphabet_size(), max_len)) {
    if (accepts(d, w) != m.accepts(w)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Dfa validates its parts") {
  CHECK_THROWS_AS(Dfa({"a"}, {identity(2)}, 2, StateSet(2)), Error);
  CHECK_THROWS_AS(Dfa({"a", "b"}, {identity(2)}, 0, StateSet(2)), Error);
  CHECK_THROWS_AS(Dfa({"a"}, {identity(3)}, 0, StateSet(2)), Error);
  CHECK_THROWS_AS(Dfa({}, {}, 0, StateSet(2)), Error);
}

TEST_CASE("reverse of the example DFA") {
  Dfa const d = example1();
  Nfa const r = reverse(d);
  CHECK(r.initials == S({2}));
  CHECK(r.finals == S({0}));
  // rows 0, 1, 2; columns a b c d
  std::vector<std::vector<StateSet>> const expected{
      {S({1}), S({0}), S({0, 2}), S({})},
      {S({0}), S({2}), S({1}), S({0, 1, 2})},
      {S({2}), S({1}), S({}), S({})}};
  for (State q = 0; q < 3; ++q) {
    for (Letter a = 0; a < 4; ++a) {
      CHECK(r.eta[a][q] == expected[q][a]);
    }
  }
}

TEST_CASE("reversing a one-state DFA") {
  Dfa const d({"a"}, {identity(1)}, 0, StateSet(1, {0}));
  Nfa const r = reverse(d);
  CHECK(r.initials == StateSet(1, {0}));
  CHECK(r.finals == StateSet(1, {0}));
  CHECK(r.eta[0][0] == StateSet(1, {0}));
}

TEST_CASE("determinized reverse of the example DFA") {
  SubsetDfa const rd = determinize(reverse(example1()));
  CHECK(rd.dfa.size() == 8);
  CHECK(rd.labels[rd.dfa.initial()] == S({2}));
  std::set<std::string> finals;
  rd.dfa.finals().for_each([&](State q) { finals.insert(format_set(rd.labels[q], "Φ")); });
  CHECK(finals == std::set<std::string>{"0", "01", "02", "012"});
  CHECK(row(rd, S({})) == "Φ Φ Φ Φ");
  CHECK(row(rd, S({0})) == "1 0 02 Φ");
  CHECK(row(rd, S({1})) == "0 2 1 012");
  CHECK(row(rd, S({2})) == "2 1 Φ Φ");
  CHECK(row(rd, S({0, 1})) == "01 02 012 012");
  CHECK(row(rd, S({0, 2})) == "12 01 02 Φ");
  CHECK(row(rd, S({1, 2})) == "02 12 1 012");
  CHECK(row(rd, S({0, 1, 2})) == "012 012 012 012");
}

TEST_CASE("determinize with no initial state") {
  Nfa m = as_nfa(example1());
  m.initials = StateSet(3);
  SubsetDfa const d = determinize(m);
  CHECK(d.dfa.size() == 1);
  CHECK(d.labels[0].empty());
  CHECK(d.dfa.finals().empty());
}

TEST_CASE("determinize of a DFA is its reachable part") {
  // state 2 unreachable
  Dfa const d({"a"}, {Transformation{1, 0, 0}}, 0, StateSet(3, {1}));
  SubsetDfa const sd = determinize(as_nfa(d));
  CHECK(sd.dfa.size() == 2);
  CHECK(is_isomorphic(sd.dfa, d));
}

TEST_CASE("subset labels are distinct and closed") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Dfa const d = sample_dfa(1 + i % 5, 1 + i % 3, 11, i);
    SubsetDfa const rd = determinize(reverse(d));
    Nfa const r = reverse(d);
    std::set<std::vector<State>> seen;
    for (State q = 0; q < rd.dfa.size(); ++q) {
      CHECK(seen.insert(rd.labels[q].members()).second);
      for (Letter a = 0; a < d.alphabet_size(); ++a) {
        CHECK(rd.labels[rd.dfa.step(q, a)] == r.step(rd.labels[q], a));
      }
    }
  }
}

TEST_CASE("minimize") {
  Dfa const e = example1();
  CHECK(minimize(e).size() == 3);
  CHECK(is_minimal(e));
  CHECK(is_isomorphic(minimize(e), e));

  // states 1 and 2 are duplicates
  Dfa const dup({"a"}, {Transformation{1, 2, 1}}, 0, StateSet(3, {1, 2}));
  CHECK(minimize(dup).size() == 2);

  Dfa const empty({"a", "b"}, {identity(2), Transformation{1, 0}}, 0, StateSet(2));
  CHECK(quotient_complexity(empty) == 1);
  CHECK(quotient_complexity(e) == 3);
  CHECK(quotient_complexity(reverse(e)) == 8);
}

TEST_CASE("minimize agrees with table filling and is idempotent") {
  for (std::uint64_t i = 0; i < 400; ++i) {
    Dfa const d = sample_dfa(1 + i % 6, 1 + i % 3, 5, i);
    Dfa const m = minimize(d);
    CHECK(m.size() == oracle::quotient_complexity(d));
    CHECK(minimize(m) == m);
    CHECK(is_minimal(m));
    CHECK(is_minimal(d) == (m.size() == d.size()));
    CHECK(canonical_numbering(m) == m);
    CHECK(same_language(m, as_nfa(d), 5));
  }
}

TEST_CASE("minimal DFAs are numbered breadth-first") {
  Dfa const d({"a"}, {Transformation{2, 0, 1}}, 1, StateSet(3, {2}));
  Dfa const m = minimize(d);
  CHECK(m.initial() == 0);
  CHECK(m.delta(0) == Transformation{1, 2, 0});
  CHECK(m.finals() == StateSet(3, {2}));
}

TEST_CASE("isomorphism") {
  Dfa const e = example1();
  // swap the names of states 0 and 2
  std::vector<Transformation> delta;
  for (auto const& t : e.delta()) {
    std::vector<State> m(3);
    for (State q = 0; q < 3; ++q) {
      m[2 - q] = 2 - t(q);
    }
    delta.emplace_back(m);
  }
  Dfa const renamed(e.alphabet(), delta, 2, StateSet(3, {0}));
  CHECK(is_isomorphic(e, renamed));
  CHECK_FALSE(is_isomorphic(e, determinize(reverse(e)).dfa));
  Dfa const other({"a"}, {identity(1)}, 0, StateSet(1));
  CHECK_FALSE(is_isomorphic(other, Dfa({"a", "b"}, {identity(1), identity(1)}, 0, StateSet(1))));
}

TEST_CASE("the reverse of the átomaton is the determinized reverse") {
  Dfa const e = example1();
  SubsetDfa const rd = determinize(reverse(e));
  Nfa const atomaton = reverse(as_nfa(rd.dfa));
  CHECK(is_isomorphic(minimize(determinize(reverse(atomaton)).dfa), rd.dfa));
}

TEST_CASE("acceptance") {
  Dfa const e = example1();
  CHECK(accepts(e, parse_word(e.alphabet(), "ab")));
  CHECK_FALSE(accepts(e, parse_word(e.alphabet(), "a")));
  CHECK_FALSE(accepts(e, {}));
  CHECK_THROWS_AS(parse_word(e.alphabet(), "ax"), Error);
  CHECK_THROWS_AS(e.run(0, {7}), Error);
  CHECK(format_word(e.alphabet(), {0, 3}) == "ad");
  Dfa const words({"ab", "c"}, {identity(1), identity(1)}, 0, StateSet(1, {0}));
  CHECK(parse_word(words.alphabet(), "ab c ab") == Word{0, 1, 0});
}

TEST_CASE("double reversal preserves the language") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::size_t const n = 1 + i % 5;
    Dfa const d = sample_dfa(n, 1 + i % 3, 17, i);
    Nfa const rr = reverse(reverse(d));
    CHECK(same_language(d, rr, 2 * n));
    CHECK(is_isomorphic(minimize(determinize(rr).dfa), minimize(d)));
  }
}
