#include "atomkit/automata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "atomkit/error.hpp"

namespace atomkit {

Dfa::Dfa(std::vector<std::string> alphabet, std::vector<Transformation> delta,
         State initial, StateSet finals)
    : alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      finals_(std::move(finals)) {
  std::size_t const n = finals_.universe();
  if (n == 0) {
    throw Error("a DFA needs at least one state");
  }
  if (alphabet_.empty()) {
    throw Error("a DFA needs a non-empty alphabet");
  }
  if (alphabet_.size() != delta_.size()) {
    throw Error("alphabet has " + std::to_string(alphabet_.size()) +
                " letters but " + std::to_string(delta_.size()) +
                " transition functions were given");
  }
  for (std::size_t a = 0; a < delta_.size(); ++a) {
    if (delta_[a].degree() != n) {
      throw Error("transition function of letter '" + alphabet_[a] + "' has degree " +
                  std::to_string(delta_[a].degree()) + ", expected " +
                  std::to_string(n));
    }
  }
  if (initial_ >= n) {
    throw Error("initial state " + std::to_string(initial_) + " out of range");
  }
}

State Dfa::run(State q, Word const& w) const {
  for (Letter a : w) {
    if (a >= delta_.size()) {
      throw Error("letter index " + std::to_string(a) + " not in the alphabet");
    }
    q = delta_[a](q);
  }
  return q;
}

Transformation Dfa::induced(Word const& w) const {
  auto t = identity(size());
  for (Letter a : w) {
    t = compose(delta_.at(a), t);
  }
  return t;
}

StateSet Nfa::step(StateSet const& from, Letter a) const {
  StateSet out(size);
  from.for_each([&](State q) { out |= eta[a][q]; });
  return out;
}

bool Nfa::accepts(Word const& w) const {
  StateSet current = initials;
  for (Letter a : w) {
    if (a >= alphabet.size()) {
      throw Error("letter index " + std::to_string(a) + " not in the alphabet");
    }
    current = step(current, a);
  }
  return current.intersects(finals);
}

std::optional<State> Nfa::find_label(StateSet const& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    return std::nullopt;
  }
  return static_cast<State>(it - labels.begin());
}

std::optional<State> SubsetDfa::find_label(StateSet const& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    return std::nullopt;
  }
  return static_cast<State>(it - labels.begin());
}

Nfa as_nfa(Dfa const& d) {
  Nfa m;
  m.size = d.size();
  m.alphabet = d.alphabet();
  m.eta.assign(d.alphabet_size(), {});
  for (Letter a = 0; a < d.alphabet_size(); ++a) {
    m.eta[a].reserve(m.size);
    for (State q = 0; q < m.size; ++q) {
      m.eta[a].push_back(StateSet(m.size, {d.step(q, a)}));
    }
  }
  m.initials = StateSet(m.size, {d.initial()});
  m.finals = d.finals();
  return m;
}

Nfa reverse(Dfa const& d) {
  Nfa m;
  m.size = d.size();
  m.alphabet = d.alphabet();
  m.eta.assign(d.alphabet_size(), std::vector<StateSet>(m.size, StateSet(m.size)));
  for (Letter a = 0; a < d.alphabet_size(); ++a) {
    for (State q = 0; q < m.size; ++q) {
      m.eta[a][d.step(q, a)].insert(q);
    }
  }
  m.initials = d.finals();
  m.finals = StateSet(m.size, {d.initial()});
  return m;
}

Nfa reverse(Nfa const& m) {
  Nfa r;
  r.size = m.size;
  r.alphabet = m.alphabet;
  r.eta.assign(m.alphabet.size(), std::vector<StateSet>(m.size, StateSet(m.size)));
  for (Letter a = 0; a < m.alphabet.size(); ++a) {
    for (State p = 0; p < m.size; ++p) {
      m.eta[a][p].for_each([&](State q) { r.eta[a][q].insert(p); });
    }
  }
  r.initials = m.finals;
  r.finals = m.initials;
  r.labels = m.labels;
  return r;
}

SubsetDfa determinize(Nfa const& m) {
  std::vector<StateSet> labels{m.initials};
  std::unordered_map<StateSet, State, StateSetHash> index{{m.initials, 0}};
  std::size_t const k = m.alphabet.size();
  std::vector<std::vector<State>> rows;  // rows[q][a]
  for (std::size_t q = 0; q < labels.size(); ++q) {
    std::vector<State> row(k);
    for (Letter a = 0; a < k; ++a) {
      StateSet next = m.step(labels[q], a);
      auto [it, inserted] = index.try_emplace(next, static_cast<State>(labels.size()));
      if (inserted) {
        labels.push_back(std::move(next));
      }
      row[a] = it->second;
    }
    rows.push_back(std::move(row));
  }
  std::size_t const n = labels.size();
  std::vector<Transformation> delta;
  delta.reserve(k);
  for (Letter a = 0; a < k; ++a) {
    std::vector<State> map(n);
    for (std::size_t q = 0; q < n; ++q) {
      map[q] = rows[q][a];
    }
    delta.emplace_back(std::move(map));
  }
  StateSet finals(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (labels[q].intersects(m.finals)) {
      finals.insert(static_cast<State>(q));
    }
  }
  return {Dfa(m.alphabet, std::move(delta), 0, std::move(finals)), std::move(labels)};
}

namespace {

/// Keeps the states reachable from the initial one, numbered breadth-first.
Dfa renumber_bfs(Dfa const& d) {
  std::size_t const n = d.size();
  std::size_t const k = d.alphabet_size();
  constexpr State kUnseen = ~State{0};
  std::vector<State> new_id(n, kUnseen);
  std::vector<State> order{d.initial()};
  new_id[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      State const next = d.step(order[i], a);
      if (new_id[next] == kUnseen) {
        new_id[next] = static_cast<State>(order.size());
        order.push_back(next);
      }
    }
  }
  std::size_t const m = order.size();
  std::vector<Transformation> delta;
  delta.reserve(k);
  for (Letter a = 0; a < k; ++a) {
    std::vector<State> map(m);
    for (std::size_t i = 0; i < m; ++i) {
      map[i] = new_id[d.step(order[i], a)];
    }
    delta.emplace_back(std::move(map));
  }
  StateSet finals(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (d.finals().contains(order[i])) {
      finals.insert(static_cast<State>(i));
    }
  }
  return Dfa(d.alphabet(), std::move(delta), 0, std::move(finals));
}

}  // namespace

Dfa canonical_numbering(Dfa const& d) { return renumber_bfs(d); }

Dfa minimize(Dfa const& d) {
  // Moore-style partition refinement on the reachable part.
  Dfa const r = renumber_bfs(d);
  std::size_t const n = r.size();
  std::size_t const k = r.alphabet_size();

  std::vector<std::size_t> cls(n);
  bool const has_final = !r.finals().empty();
  bool const has_nonfinal = r.finals().size() != n;
  for (State q = 0; q < n; ++q) {
    // Class 0 is the class of state 0; keeps ids compact when only one class exists.
    cls[q] = (has_final && has_nonfinal &&
              r.finals().contains(q) != r.finals().contains(0))
                 ? 1
                 : 0;
  }
  std::size_t classes = (has_final && has_nonfinal) ? 2 : 1;

  std::vector<std::size_t> signature(k + 1);
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (State q = 0; q < n; ++q) {
      signature[0] = cls[q];
      for (Letter a = 0; a < k; ++a) {
        signature[a + 1] = cls[r.step(q, a)];
      }
      next[q] = ids.try_emplace(signature, ids.size()).first->second;
    }
    cls = std::move(next);
    if (ids.size() == classes) {
      break;
    }
    classes = ids.size();
  }

  std::vector<Transformation> delta;
  delta.reserve(k);
  for (Letter a = 0; a < k; ++a) {
    std::vector<State> map(classes);
    for (State q = 0; q < n; ++q) {
      map[cls[q]] = static_cast<State>(cls[r.step(q, a)]);
    }
    delta.emplace_back(std::move(map));
  }
  StateSet finals(classes);
  r.finals().for_each([&](State q) { finals.insert(static_cast<State>(cls[q])); });
  Dfa quotient(r.alphabet(), std::move(delta), static_cast<State>(cls[0]),
               std::move(finals));
  return renumber_bfs(quotient);
}

bool is_minimal(Dfa const& d) { return minimize(d).size() == d.size(); }

std::size_t quotient_complexity(Dfa const& d) { return minimize(d).size(); }

std::size_t quotient_complexity(Nfa const& m) {
  return quotient_complexity(determinize(m).dfa);
}

bool is_isomorphic(Dfa const& d1, Dfa const& d2) {
  if (d1.alphabet_size() != d2.alphabet_size()) {
    return false;
  }
  Dfa const m1 = minimize(d1);
  Dfa const m2 = minimize(d2);
  return m1.size() == m2.size() && m1.delta() == m2.delta() &&
         m1.initial() == m2.initial() && m1.finals() == m2.finals();
}

bool accepts(Dfa const& d, Word const& w) {
  return d.finals().contains(d.run(d.initial(), w));
}

Word parse_word(std::vector<std::string> const& alphabet, std::string_view text) {
  bool const single_chars = std::all_of(alphabet.begin(), alphabet.end(),
                                        [](auto const& s) { return s.size() == 1; });
  auto lookup = [&](std::string_view name) -> Letter {
    auto it = std::find(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end()) {
      throw Error("unknown letter '" + std::string(name) + "'");
    }
    return static_cast<Letter>(it - alphabet.begin());
  };
  Word w;
  if (single_chars) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        w.push_back(lookup(std::string_view(&c, 1)));
      }
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) {
      w.push_back(lookup(text.substr(i, j - i)));
    }
    i = j;
  }
  return w;
}

std::string format_word(std::vector<std::string> const& alphabet, Word const& w) {
  bool const single_chars = std::all_of(alphabet.begin(), alphabet.end(),
                                        [](auto const& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_chars && i > 0) {
      out.push_back(' ');
    }
    out += alphabet.at(w[i]);
  }
  return out;
}

std::vector<std::string> default_alphabet(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                         : "x" + std::to_string(i));
  }
  return out;
}

}  // namespace atomkit
