#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "atomkit/automata.hpp"
#include "atomkit/state_set.hpp"

namespace atomkit {

/// The átomaton of a language, obtained as the reverse of the determinized
/// reverse of its minimal DFA. State q stands for the atom whose label
/// nfa.labels[q] = S lists the quotients taken uncomplemented; labels are
/// subsets of the states of `minimal`, which is the input DFA itself (same
/// numbering) when that is already minimal.
struct Atomaton {
  Nfa nfa;
  /// Determinized reverse of `minimal`; its states and labels coincide with
  /// those of `nfa`.
  SubsetDfa reversed;
  Dfa minimal;
  /// True when the input DFA was not minimal.
  bool minimized_input = false;

  std::size_t quotient_count() const noexcept { return minimal.size(); }
  std::optional<State> state_of(StateSet const& label) const { return nfa.find_label(label); }
};

Atomaton build_atomaton(Dfa const& d);

/// Labels of all atoms, i.e. of the states of the determinized reverse of the
/// minimal DFA, in breadth-first order.
std::vector<StateSet> atom_labels(Dfa const& d);

struct AtomDfa {
  /// Minimal DFA of the atom.
  Dfa dfa;
  /// States of the raw determinization before minimization. Expected to equal
  /// dfa.size(); a difference is a diagnostic, not an error.
  std::size_t determinized_states = 0;
};

/// Determinizes the átomaton started at the single state labelled S, then
/// minimizes. Throws when S labels no atom.
AtomDfa atom_dfa(Atomaton const& atomaton, StateSet const& label);

Dfa atom_minimal_dfa(Dfa const& d, StateSet const& label);
std::size_t atom_quotient_complexity(Dfa const& d, StateSet const& label);

struct AtomReport {
  StateSet label;
  /// Number of complemented quotients, n - |S|.
  std::size_t r = 0;
  bool is_negative = false;
  bool is_initial = false;
  /// S = F and the language is non-empty.
  bool is_final = false;
  std::uint64_t complexity = 0;
  std::uint64_t bound = 0;
  bool is_maximal = false;
  std::size_t determinized_states = 0;
};

/// One report per atom, sorted by label (cardinality, then members). Labels
/// refer to the states of d when d is minimal, of minimize(d) otherwise.
std::vector<AtomReport> atoms_of(Dfa const& d);
std::vector<AtomReport> atoms_of(Atomaton const& atomaton);

/// Direct test of w ∈ A_S: w is accepted from every state in S and rejected
/// from every state outside S.
bool membership_in_atom(Dfa const& d, StateSet const& label, Word const& w);

}  // namespace atomkit
