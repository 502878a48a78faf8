#include "atomkit/state_set.hpp"

#include <algorithm>
#include <charconv>

#include "atomkit/error.hpp"

namespace atomkit {

StateSet::StateSet(std::size_t universe) : universe_(universe) {
  if (universe_ > 64) {
    heap_.assign(word_count(), 0);
  }
}

StateSet::StateSet(std::size_t universe, std::initializer_list<State> members)
    : StateSet(universe) {
  for (State q : members) {
    insert(q);
  }
}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  return s.complement();
}

StateSet StateSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe < 64 && (mask >> universe) != 0) {
    throw Error("mask has bits outside a universe of " + std::to_string(universe));
  }
  StateSet s(universe);
  if (universe > 0) {
    s.data()[0] = mask;
  }
  return s;
}

StateSet StateSet::from_members(std::size_t universe,
                                std::vector<State> const& members) {
  StateSet s(universe);
  for (State q : members) {
    s.insert(q);
  }
  return s;
}

void StateSet::insert(State q) {
  if (q >= universe_) {
    throw Error("state " + std::to_string(q) + " outside a universe of " +
                std::to_string(universe_));
  }
  data()[q >> 6] |= std::uint64_t{1} << (q & 63);
}

void StateSet::erase(State q) {
  if (q < universe_) {
    data()[q >> 6] &= ~(std::uint64_t{1} << (q & 63));
  }
}

std::size_t StateSet::size() const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < word_count(); ++w) {
    total += static_cast<std::size_t>(std::popcount(word(w)));
  }
  return total;
}

bool StateSet::empty() const noexcept {
  for (std::size_t w = 0; w < word_count(); ++w) {
    if (word(w) != 0) {
      return false;
    }
  }
  return true;
}

void StateSet::check_same_universe(StateSet const& other) const {
  if (universe_ != other.universe_) {
    throw Error("state sets over different universes (" + std::to_string(universe_) +
                " vs " + std::to_string(other.universe_) + ")");
  }
}

bool StateSet::is_subset_of(StateSet const& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) {
    if ((word(w) & ~other.word(w)) != 0) {
      return false;
    }
  }
  return true;
}

bool StateSet::intersects(StateSet const& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) {
    if ((word(w) & other.word(w)) != 0) {
      return true;
    }
  }
  return false;
}

StateSet& StateSet::operator|=(StateSet const& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) {
    data()[w] |= other.word(w);
  }
  return *this;
}

StateSet& StateSet::operator&=(StateSet const& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) {
    data()[w] &= other.word(w);
  }
  return *this;
}

StateSet& StateSet::operator-=(StateSet const& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) {
    data()[w] &= ~other.word(w);
  }
  return *this;
}

StateSet StateSet::complement() const {
  StateSet result = *this;
  std::size_t const n_words = word_count();
  for (std::size_t w = 0; w < n_words; ++w) {
    result.data()[w] = ~word(w);
  }
  if (std::size_t const tail = universe_ % 64; tail != 0) {
    result.data()[n_words - 1] &= (std::uint64_t{1} << tail) - 1;
  }
  return result;
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  out.reserve(size());
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::size_t StateSet::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (std::size_t w = 0; w < word_count(); ++w) {
    h ^= word(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

bool operator==(StateSet const& a, StateSet const& b) noexcept {
  if (a.universe_ != b.universe_) {
    return false;
  }
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    if (a.word(w) != b.word(w)) {
      return false;
    }
  }
  return true;
}

bool operator<(StateSet const& a, StateSet const& b) {
  std::size_t const sa = a.size();
  std::size_t const sb = b.size();
  if (sa != sb) {
    return sa < sb;
  }
  auto const ma = a.members();
  auto const mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string format_set(StateSet const& s, std::string_view empty_symbol) {
  if (s.empty()) {
    return std::string(empty_symbol);
  }
  std::string out;
  if (s.universe() <= 10) {
    s.for_each([&](State q) { out.push_back(static_cast<char>('0' + q)); });
    return out;
  }
  out.push_back('{');
  bool first = true;
  s.for_each([&](State q) {
    if (!first) {
      out.push_back(',');
    }
    first = false;
    out += std::to_string(q);
  });
  out.push_back('}');
  return out;
}

StateSet parse_set(std::string_view text, std::size_t universe) {
  StateSet result(universe);
  if (text.starts_with('{') && text.ends_with('}')) {
    text = text.substr(1, text.size() - 2);
  }
  if (text.empty() || text == "-" || text == "∅" || text == "Φ") {
    return result;
  }
  auto add = [&](std::string_view token) {
    State q = 0;
    auto const* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, q);
    if (ec != std::errc{} || ptr != end) {
      throw Error("invalid state '" + std::string(token) + "' in set '" +
                  std::string(text) + "'");
    }
    if (q >= universe) {
      throw Error("state " + std::to_string(q) + " out of range in set '" +
                  std::string(text) + "'");
    }
    result.insert(q);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t const comma = std::min(text.find(',', start), text.size());
      add(text.substr(start, comma - start));
      start = comma + 1;
    }
  } else if (universe <= 10) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      add(text.substr(i, 1));
    }
  } else {
    add(text);
  }
  return result;
}

}  // namespace atomkit
