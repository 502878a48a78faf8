#include "atomkit/atoms.hpp"

#include <algorithm>

#include "atomkit/bounds.hpp"
#include "atomkit/error.hpp"

namespace atomkit {

namespace {

/// d itself when it is already minimal (keeping its numbering), else minimize(d).
Dfa minimal_form(Dfa const& d, bool* minimized = nullptr) {
  Dfa m = minimize(d);
  bool const changed = m.size() != d.size();
  if (minimized != nullptr) {
    *minimized = changed;
  }
  return changed ? m : d;
}

}  // namespace

Atomaton build_atomaton(Dfa const& d) {
  Atomaton a;
  a.minimal = minimal_form(d, &a.minimized_input);
  a.reversed = determinize(reverse(a.minimal));
  a.nfa = reverse(as_nfa(a.reversed.dfa));
  a.nfa.labels = a.reversed.labels;
  return a;
}

std::vector<StateSet> atom_labels(Dfa const& d) {
  return determinize(reverse(minimal_form(d))).labels;
}

AtomDfa atom_dfa(Atomaton const& atomaton, StateSet const& label) {
  auto const state = atomaton.state_of(label);
  if (!state) {
    throw Error("'" + format_set(label, "Φ") + "' is not the label of an atom");
  }
  Nfa started = atomaton.nfa;
  started.initials = StateSet(started.size, {*state});
  Dfa const raw = determinize(started).dfa;
  AtomDfa out{minimize(raw), raw.size()};
  return out;
}

Dfa atom_minimal_dfa(Dfa const& d, StateSet const& label) {
  return atom_dfa(build_atomaton(d), label).dfa;
}

std::size_t atom_quotient_complexity(Dfa const& d, StateSet const& label) {
  return atom_minimal_dfa(d, label).size();
}

std::vector<AtomReport> atoms_of(Atomaton const& atomaton) {
  std::size_t const n = atomaton.quotient_count();
  Dfa const& m = atomaton.minimal;
  bool const nonempty_language = !m.finals().empty();
  std::vector<AtomReport> reports;
  reports.reserve(atomaton.nfa.size);
  for (StateSet const& label : atomaton.nfa.labels) {
    AtomReport rep;
    rep.label = label;
    rep.r = n - label.size();
    rep.is_negative = label.empty();
    rep.is_initial = label.contains(m.initial());
    rep.is_final = nonempty_language && label == m.finals();
    AtomDfa const ad = atom_dfa(atomaton, label);
    rep.complexity = ad.dfa.size();
    rep.determinized_states = ad.determinized_states;
    rep.bound = max_atom_complexity(n, rep.r);
    rep.is_maximal = rep.complexity == rep.bound;
    reports.push_back(std::move(rep));
  }
  std::sort(reports.begin(), reports.end(),
            [](AtomReport const& x, AtomReport const& y) { return x.label < y.label; });
  return reports;
}

std::vector<AtomReport> atoms_of(Dfa const& d) { return atoms_of(build_atomaton(d)); }

bool membership_in_atom(Dfa const& d, StateSet const& label, Word const& w) {
  if (label.universe() != d.size()) {
    throw Error("atom label over " + std::to_string(label.universe()) +
                " states for a DFA with " + std::to_string(d.size()));
  }
  for (State q = 0; q < d.size(); ++q) {
    bool const accepted = d.finals().contains(d.run(q, w));
    if (accepted != label.contains(q)) {
      return false;
    }
  }
  return true;
}

}  // namespace atomkit
