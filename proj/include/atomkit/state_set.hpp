#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace atomkit {

using State = std::uint32_t;

/// A subset of {0, ..., universe-1}. Universes of up to 64 elements live in a
/// single inline word; larger ones spill to the heap.
///
/// Ordering (operator<) is by cardinality first, then lexicographically on the
/// sorted member list, which is the row order the tables in this project use
/// (empty, 0, 1, 2, 01, 02, 12, 012).
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe);
  StateSet(std::size_t universe, std::initializer_list<State> members);

  static StateSet full(std::size_t universe);
  static StateSet from_mask(std::size_t universe, std::uint64_t mask);
  static StateSet from_members(std::size_t universe,
                               std::vector<State> const& members);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(State q) const noexcept {
    return q < universe_ && ((word(q >> 6) >> (q & 63)) & 1U) != 0;
  }
  void insert(State q);
  void erase(State q);

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(StateSet const& other) const;
  bool intersects(StateSet const& other) const;

  StateSet& operator|=(StateSet const& other);
  StateSet& operator&=(StateSet const& other);
  StateSet& operator-=(StateSet const& other);
  StateSet complement() const;

  friend StateSet operator|(StateSet lhs, StateSet const& rhs) { return lhs |= rhs; }
  friend StateSet operator&(StateSet lhs, StateSet const& rhs) { return lhs &= rhs; }
  friend StateSet operator-(StateSet lhs, StateSet const& rhs) { return lhs -= rhs; }

  /// Lowest 64 bits; exact only when universe() <= 64.
  std::uint64_t mask() const noexcept { return word(0); }

  std::vector<State> members() const;

  template <typename F>
  void for_each(F&& f) const {
    std::size_t const n_words = word_count();
    for (std::size_t w = 0; w < n_words; ++w) {
      std::uint64_t bits = word(w);
      while (bits != 0) {
        auto const bit = static_cast<State>(std::countr_zero(bits));
        f(static_cast<State>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(StateSet const& a, StateSet const& b) noexcept;
  friend bool operator<(StateSet const& a, StateSet const& b);

 private:
  std::size_t word_count() const noexcept { return (universe_ + 63) / 64; }
  std::uint64_t word(std::size_t i) const noexcept {
    return universe_ <= 64 ? (i == 0 ? inline_ : 0) : heap_[i];
  }
  std::uint64_t* data() noexcept { return universe_ <= 64 ? &inline_ : heap_.data(); }
  std::uint64_t const* data() const noexcept {
    return universe_ <= 64 ? &inline_ : heap_.data();
  }
  void check_same_universe(StateSet const& other) const;

  std::size_t universe_ = 0;
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

struct StateSetHash {
  std::size_t operator()(StateSet const& s) const noexcept { return s.hash(); }
};

/// Compact rendering: "012" style when the universe has at most 10 elements,
/// "{0,1,11}" otherwise. The empty set renders as `empty_symbol`.
std::string format_set(StateSet const& s, std::string_view empty_symbol = "∅");

/// Inverse of format_set. Accepts "012", "0,1,2", "{0,1,2}" and, for the empty
/// set, "", "{}", "-", "∅" or "Φ".
StateSet parse_set(std::string_view text, std::size_t universe);

}  // namespace atomkit

template <>
struct std::hash<atomkit::StateSet> {
  std::size_t operator()(atomkit::StateSet const& s) const noexcept { return s.hash(); }
};
