#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "atomkit/atoms.hpp"
#include "atomkit/automata.hpp"
#include "atomkit/semigroup.hpp"
#include "atomkit/state_set.hpp"

namespace atomkit {

/// [V, U]: the collection of all sets T with V ⊆ T ⊆ U. Empty unless V ⊆ U.
/// Equality is equality of collections, so all empty intervals compare equal.
struct Interval {
  StateSet lower;
  StateSet upper;

  static Interval singleton(StateSet const& s) { return {s, s}; }
  /// The canonical empty interval [Q, ∅] over a universe of n.
  static Interval empty_interval(std::size_t n) {
    return {StateSet::full(n), StateSet(n)};
  }

  bool empty() const { return !lower.is_subset_of(upper); }
  bool contains(StateSet const& t) const {
    return !empty() && lower.is_subset_of(t) && t.is_subset_of(upper);
  }
  /// (|V|, |U|); only meaningful for non-empty intervals.
  std::pair<std::size_t, std::size_t> type() const { return {lower.size(), upper.size()}; }
  /// Number of member sets, 2^{|U \ V|} (0 when empty).
  std::uint64_t count() const;
  /// Members in increasing StateSet order.
  std::vector<StateSet> members() const;

  friend bool operator==(Interval const& a, Interval const& b) {
    if (a.empty() || b.empty()) {
      return a.empty() && b.empty();
    }
    return a.lower == b.lower && a.upper == b.upper;
  }
};

/// The interval a collection of sets forms, or nullopt if it is not one. The
/// empty collection is the empty interval.
std::optional<Interval> as_interval(std::vector<StateSet> const& collection,
                                    std::size_t universe);

/// One letter's transition in the átomaton read as a collection of atom
/// labels, taken straight from the átomaton's transition table.
std::vector<StateSet> atomaton_successors(Atomaton const& atomaton,
                                          StateSet const& label, Letter a);

/// States of the minimal DFA of an atom explored from [S, S], each checked to
/// be an interval. The empty collection, when reached, is stored as an empty
/// interval.
struct IntervalReach {
  std::vector<Interval> states;
  /// next[i][a]: index of the successor of states[i] under letter a.
  std::vector<std::vector<std::size_t>> next;
  bool sink_reached = false;

  std::size_t count() const noexcept { return states.size(); }
  /// Types of the non-empty intervals reached.
  std::set<std::pair<std::size_t, std::size_t>> types() const;
};

/// Closed-form átomaton transitions for a minimal DFA whose transition
/// semigroup is the full transformation monoid. The constructor verifies that
/// precondition once.
class IntervalCalculus {
 public:
  explicit IntervalCalculus(Dfa const& d, SemigroupOptions const& options = {});

  Dfa const& dfa() const noexcept { return dfa_; }
  Atomaton const& atomaton() const noexcept { return atomaton_; }
  std::size_t n() const noexcept { return dfa_.size(); }

  /// η_a(S): [δ_a(S), δ_a(S) ∪ coim δ_a] if S is a preimage of δ_a, else empty.
  Interval eta_letter(StateSet const& s, Letter a) const;
  /// η_a([V, U]) = [δ_a(V), δ_a(U) ∪ coim δ_a]; every member of [V, U] must be
  /// a preimage of δ_a.
  Interval eta_letter_on_interval(Interval const& iv, Letter a) const;
  /// η_w([V, U]) = [δ_w(V), δ_w(U)] for words inducing a permutation.
  Interval eta_word_perm(Interval const& iv, Word const& w) const;

  /// Breadth-first exploration of the subset construction over the átomaton
  /// started at {S}.
  IntervalReach reach(StateSet const& s) const;

 private:
  Dfa dfa_;
  Atomaton atomaton_;
};

/// A member of `iv` that is not a preimage of t, if there is one. Enumerates
/// the members when |U \ V| <= 12 and uses non_preimage_member_by_kernel
/// otherwise.
std::optional<StateSet> non_preimage_member(Transformation const& t, Interval const& iv);
std::optional<StateSet> non_preimage_member_by_enumeration(Transformation const& t,
                                                           Interval const& iv);
/// Every member of [V, U] is a preimage of t iff each kernel class of t with
/// two or more elements lies inside V or outside U.
std::optional<StateSet> non_preimage_member_by_kernel(Transformation const& t,
                                                      Interval const& iv);

Interval eta_letter(Dfa const& d, StateSet const& s, Letter a);
Interval eta_letter_on_interval(Dfa const& d, Interval const& iv, Letter a);
Interval eta_word_perm(Dfa const& d, Interval const& iv, Word const& w);
std::size_t interval_reach_count(Dfa const& d, StateSet const& s);

/// Closure of {(s, s)} under (v, u) -> (v-1, u) for v >= 2 and
/// (v, u) -> (v, u+1) for u <= n-2.
std::set<std::pair<std::size_t, std::size_t>> type_reachability(std::size_t n,
                                                                std::size_t s);

/// Sum over reachable types (v, u) of C(n,u) * C(u,v), plus one for the empty
/// sink when 0 < n - s < n.
std::uint64_t count_from_types(std::size_t n, std::size_t s);

}  // namespace atomkit
