#include "atomkit/intervals.hpp"

#include <algorithm>
#include <unordered_map>

#include "atomkit/bounds.hpp"
#include "atomkit/error.hpp"

namespace atomkit {

std::uint64_t Interval::count() const {
  if (empty()) {
    return 0;
  }
  std::size_t const free = (upper - lower).size();
  if (free >= 64) {
    throw Error("interval too large to count");
  }
  return std::uint64_t{1} << free;
}

std::vector<StateSet> Interval::members() const {
  std::vector<StateSet> out;
  if (empty()) {
    return out;
  }
  std::vector<State> const free = (upper - lower).members();
  if (free.size() >= 32) {
    throw Error("interval too large to enumerate");
  }
  std::uint64_t const total = std::uint64_t{1} << free.size();
  out.reserve(total);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    StateSet t = lower;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((bits >> i) & 1U) {
        t.insert(free[i]);
      }
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Interval> as_interval(std::vector<StateSet> const& collection,
                                    std::size_t universe) {
  if (collection.empty()) {
    return Interval::empty_interval(universe);
  }
  StateSet lower = StateSet::full(universe);
  StateSet upper(universe);
  for (auto const& t : collection) {
    lower &= t;
    upper |= t;
  }
  std::vector<StateSet> sorted = collection;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Interval iv{lower, upper};
  std::size_t const free = (upper - lower).size();
  // Every member already lies in [lower, upper]; it is the whole interval iff
  // the count matches.
  if (free >= 63 || sorted.size() != (std::uint64_t{1} << free)) {
    return std::nullopt;
  }
  return iv;
}

std::vector<StateSet> atomaton_successors(Atomaton const& atomaton,
                                          StateSet const& label, Letter a) {
  auto const state = atomaton.state_of(label);
  if (!state) {
    throw Error("'" + format_set(label, "Φ") + "' is not the label of an atom");
  }
  std::vector<StateSet> out;
  atomaton.nfa.eta.at(a)[*state].for_each(
      [&](State q) { out.push_back(atomaton.nfa.labels[q]); });
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::pair<std::size_t, std::size_t>> IntervalReach::types() const {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (auto const& iv : states) {
    if (!iv.empty()) {
      out.insert(iv.type());
    }
  }
  return out;
}

std::optional<StateSet> non_preimage_member_by_enumeration(Transformation const& t,
                                                           Interval const& iv) {
  for (auto const& member : iv.members()) {
    if (!is_preimage(t, member)) {
      return member;
    }
  }
  return std::nullopt;
}

std::optional<StateSet> non_preimage_member_by_kernel(Transformation const& t,
                                                      Interval const& iv) {
  if (iv.empty()) {
    return std::nullopt;
  }
  std::size_t const n = t.degree();
  for (State value = 0; value < n; ++value) {
    StateSet const fiber = preimage_of_set(t, StateSet(n, {value}));
    if (fiber.size() < 2 || fiber.is_subset_of(iv.lower) || !fiber.intersects(iv.upper)) {
      continue;
    }
    if (fiber.intersects(iv.lower)) {
      return iv.lower;  // holds part of the class but not all of it
    }
    StateSet witness = iv.lower;
    witness.insert((fiber & iv.upper).members().front());
    return witness;
  }
  return std::nullopt;
}

std::optional<StateSet> non_preimage_member(Transformation const& t, Interval const& iv) {
  if (iv.empty()) {
    return std::nullopt;
  }
  if ((iv.upper - iv.lower).size() <= 12) {
    return non_preimage_member_by_enumeration(t, iv);
  }
  return non_preimage_member_by_kernel(t, iv);
}

IntervalCalculus::IntervalCalculus(Dfa const& d, SemigroupOptions const& options)
    : dfa_(d) {
  if (!is_minimal(d)) {
    throw Error("interval calculus needs a minimal DFA");
  }
  SemigroupOptions opts = options;
  opts.witnesses = false;
  std::uint64_t const size = TransformationSemigroup(d.delta(), opts).size();
  auto const full = full_monoid_size(d.size());
  if (!full || size != *full) {
    throw Error("interval calculus needs the full transformation monoid: the "
                "transition semigroup has " +
                std::to_string(size) + " of " +
                (full ? std::to_string(*full) : std::string("n^n")) +
                " transformations (deficit " +
                (full ? std::to_string(*full - size) : std::string("?")) + ")");
  }
  atomaton_ = build_atomaton(d);
}

Interval IntervalCalculus::eta_letter(StateSet const& s, Letter a) const {
  Transformation const& t = dfa_.delta(a);
  if (!is_preimage(t, s)) {
    return Interval::empty_interval(n());
  }
  StateSet const lower = apply_to_set(t, s);
  return {lower, lower | coimage(t)};
}

Interval IntervalCalculus::eta_letter_on_interval(Interval const& iv, Letter a) const {
  if (iv.empty()) {
    return Interval::empty_interval(n());
  }
  Transformation const& t = dfa_.delta(a);
  if (auto bad = non_preimage_member(t, iv)) {
    throw Error("set " + format_set(*bad) + " of the interval [" + format_set(iv.lower) +
                ", " + format_set(iv.upper) + "] is not a preimage of letter '" +
                dfa_.alphabet()[a] + "'");
  }
  return {apply_to_set(t, iv.lower), apply_to_set(t, iv.upper) | coimage(t)};
}

Interval IntervalCalculus::eta_word_perm(Interval const& iv, Word const& w) const {
  Transformation const t = dfa_.induced(w);
  if (!is_permutation(t)) {
    throw Error("word '" + format_word(dfa_.alphabet(), w) +
                "' does not induce a permutation");
  }
  if (iv.empty()) {
    return Interval::empty_interval(n());
  }
  return {apply_to_set(t, iv.lower), apply_to_set(t, iv.upper)};
}

IntervalReach IntervalCalculus::reach(StateSet const& s) const {
  Nfa const& nfa = atomaton_.nfa;
  auto const start = atomaton_.state_of(s);
  if (!start) {
    throw Error("'" + format_set(s, "Φ") + "' is not the label of an atom");
  }
  IntervalReach out;
  std::vector<StateSet> collections{StateSet(nfa.size, {*start})};
  std::unordered_map<StateSet, std::size_t, StateSetHash> index{{collections[0], 0}};

  auto to_interval = [&](StateSet const& collection) {
    std::vector<StateSet> sets;
    collection.for_each([&](State q) { sets.push_back(nfa.labels[q]); });
    auto iv = as_interval(sets, n());
    if (!iv) {
      std::string listed;
      for (auto const& t : sets) {
        listed += (listed.empty() ? "" : ",") + format_set(t, "Φ");
      }
      throw Error("internal consistency: reachable collection {" + listed +
                  "} is not an interval");
    }
    return *iv;
  };

  out.states.push_back(to_interval(collections[0]));
  for (std::size_t i = 0; i < collections.size(); ++i) {
    std::vector<std::size_t> row(nfa.alphabet.size());
    for (Letter a = 0; a < nfa.alphabet.size(); ++a) {
      StateSet next = nfa.step(collections[i], a);
      auto [it, inserted] = index.try_emplace(next, collections.size());
      if (inserted) {
        out.states.push_back(to_interval(next));
        out.sink_reached = out.sink_reached || next.empty();
        collections.push_back(std::move(next));
      }
      row[a] = it->second;
    }
    out.next.push_back(std::move(row));
  }
  return out;
}

Interval eta_letter(Dfa const& d, StateSet const& s, Letter a) {
  return IntervalCalculus(d).eta_letter(s, a);
}

Interval eta_letter_on_interval(Dfa const& d, Interval const& iv, Letter a) {
  return IntervalCalculus(d).eta_letter_on_interval(iv, a);
}

Interval eta_word_perm(Dfa const& d, Interval const& iv, Word const& w) {
  return IntervalCalculus(d).eta_word_perm(iv, w);
}

std::size_t interval_reach_count(Dfa const& d, StateSet const& s) {
  return IntervalCalculus(d).reach(s).count();
}

std::set<std::pair<std::size_t, std::size_t>> type_reachability(std::size_t n,
                                                                std::size_t s) {
  if (s > n) {
    throw Error("type_reachability: s = " + std::to_string(s) + " exceeds n = " +
                std::to_string(n));
  }
  std::set<std::pair<std::size_t, std::size_t>> seen{{s, s}};
  std::vector<std::pair<std::size_t, std::size_t>> todo{{s, s}};
  while (!todo.empty()) {
    auto const [v, u] = todo.back();
    todo.pop_back();
    auto visit = [&](std::size_t v2, std::size_t u2) {
      if (seen.insert({v2, u2}).second) {
        todo.push_back({v2, u2});
      }
    };
    if (v >= 2) {
      visit(v - 1, u);
    }
    if (u + 2 <= n) {
      visit(v, u + 1);
    }
  }
  return seen;
}

std::uint64_t count_from_types(std::size_t n, std::size_t s) {
  std::uint64_t total = 0;
  for (auto const& [v, u] : type_reachability(n, s)) {
    total += binomial(n, u) * binomial(u, v);
  }
  std::size_t const r = n - s;
  if (r >= 1 && r <= n - 1) {
    total += 1;
  }
  return total;
}

}  // namespace atomkit
