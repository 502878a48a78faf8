#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomkit/state_set.hpp"
#include "atomkit/transformation.hpp"

namespace atomkit {

using Letter = std::size_t;
/// A word as a sequence of letter indices into an alphabet.
using Word = std::vector<Letter>;

/// Complete DFA over states {0, ..., n-1}; one transformation per letter.
class Dfa {
 public:
  Dfa() = default;
  Dfa(std::vector<std::string> alphabet, std::vector<Transformation> delta,
      State initial, StateSet finals);

  std::size_t size() const noexcept { return finals_.universe(); }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::vector<std::string> const& alphabet() const noexcept { return alphabet_; }
  std::vector<Transformation> const& delta() const noexcept { return delta_; }
  Transformation const& delta(Letter a) const { return delta_.at(a); }
  State initial() const noexcept { return initial_; }
  StateSet const& finals() const noexcept { return finals_; }

  State step(State q, Letter a) const { return delta_[a](q); }
  State run(State q, Word const& w) const;
  /// δ_w as a transformation; the empty word gives the identity.
  Transformation induced(Word const& w) const;

  friend bool operator==(Dfa const&, Dfa const&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<Transformation> delta_;
  State initial_ = 0;
  StateSet finals_;
};

/// NFA with η stored letter-major: eta[a][q] is the set of successors of q
/// under letter a. States may carry subset labels (see determinize).
struct Nfa {
  std::size_t size = 0;
  std::vector<std::string> alphabet;
  std::vector<std::vector<StateSet>> eta;
  StateSet initials;
  StateSet finals;
  /// Either empty or one label per state.
  std::vector<StateSet> labels;

  StateSet step(StateSet const& from, Letter a) const;
  bool accepts(Word const& w) const;
  /// Index of the state carrying `label`, if any.
  std::optional<State> find_label(StateSet const& label) const;

  friend bool operator==(Nfa const&, Nfa const&) = default;
};

/// Determinization result. labels[q] is the set of NFA states that DFA state
/// q stands for; the empty label is the Φ state.
struct SubsetDfa {
  Dfa dfa;
  std::vector<StateSet> labels;

  std::optional<State> find_label(StateSet const& label) const;
};

Nfa as_nfa(Dfa const& d);

/// Swaps initial and final states and reverses every transition.
Nfa reverse(Dfa const& d);
/// Labels, if present, are carried over unchanged.
Nfa reverse(Nfa const& m);

/// Subset construction restricted to the subsets reachable from the initial
/// set, explored breadth-first with letters in alphabet order. The empty
/// subset is kept as an ordinary non-final state when it is reached.
SubsetDfa determinize(Nfa const& m);

/// Minimal equivalent DFA, states numbered breadth-first from the initial
/// state with letters in alphabet order.
Dfa minimize(Dfa const& d);

/// Reachable part renumbered breadth-first (no merging of states).
Dfa canonical_numbering(Dfa const& d);

bool is_minimal(Dfa const& d);

/// Number of left quotients of the language.
std::size_t quotient_complexity(Dfa const& d);
std::size_t quotient_complexity(Nfa const& m);

/// True iff the minimal DFAs of the two languages are isomorphic. Letters are
/// matched by position; alphabets of different size are never isomorphic.
bool is_isomorphic(Dfa const& d1, Dfa const& d2);

bool accepts(Dfa const& d, Word const& w);

/// Splits `text` into letters of `alphabet`: character by character when every
/// letter name is a single character, on whitespace otherwise.
Word parse_word(std::vector<std::string> const& alphabet, std::string_view text);
std::string format_word(std::vector<std::string> const& alphabet, Word const& w);

/// Alphabet "a", "b", ... of size k.
std::vector<std::string> default_alphabet(std::size_t k);

}  // namespace atomkit
