#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "atomkit/automata.hpp"
#include "atomkit/transformation.hpp"

namespace atomkit {

struct SemigroupOptions {
  /// Refuse closures with more elements than this.
  std::uint64_t max_elements = 100'000'000;
  /// Closures are only computed for degrees up to this bound.
  std::size_t max_degree = 12;
  /// Record, for every element, the first word producing it.
  bool witnesses = true;
};

/// The semigroup generated by a list of transformations (letters), closed
/// breadth-first over non-empty words in length-then-alphabet order.
/// Elements are kept in discovery order, so element i's witness is the
/// shortlex-least word inducing it.
class TransformationSemigroup {
 public:
  TransformationSemigroup(std::span<Transformation const> generators,
                          SemigroupOptions const& options = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return codes_.size(); }
  std::size_t generator_count() const noexcept { return generator_count_; }
  bool has_witnesses() const noexcept { return witnesses_; }

  Transformation element(std::size_t i) const;
  std::vector<Transformation> elements() const;
  std::optional<std::size_t> find(Transformation const& t) const;
  bool contains(Transformation const& t) const { return find(t).has_value(); }
  /// Word (over generator indices) inducing element i. Needs witnesses.
  Word word(std::size_t i) const;

  /// rank_histogram()[r] = number of elements with image size r.
  std::vector<std::uint64_t> rank_histogram() const;

 private:
  std::optional<std::uint32_t> lookup(std::uint64_t code) const;
  void remember(std::uint64_t code, std::uint32_t index);

  std::size_t degree_ = 0;
  std::size_t generator_count_ = 0;
  bool witnesses_ = true;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint32_t> parent_;  // kNoParent for generators
  std::vector<std::uint32_t> letter_;
  // Dense code -> index+1 table for small n^n, hash map otherwise.
  std::vector<std::uint32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

struct SemigroupSummary {
  std::size_t n = 0;
  std::uint64_t size = 0;
  bool is_full = false;
  std::size_t generator_count = 0;
  std::vector<std::uint64_t> rank_histogram;
  /// True when the input DFA was not minimal and was minimized first.
  bool minimized = false;
};

struct WordWitness {
  Transformation transformation;
  Word word;
};

/// n^n, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> full_monoid_size(std::size_t n);

/// Closure of the letter transformations of `d` (taken as given, not minimized).
TransformationSemigroup transition_semigroup(Dfa const& d,
                                             SemigroupOptions const& options = {});

std::vector<WordWitness> witnesses(TransformationSemigroup const& s);

/// Summary of the transition semigroup of minimize(d).
SemigroupSummary summarize_semigroup(Dfa const& d, SemigroupOptions const& options = {});

/// |transition semigroup of minimize(d)|.
std::uint64_t syntactic_complexity(Dfa const& d, SemigroupOptions const& options = {});

bool generates_full(std::span<Transformation const> generators, std::size_t n,
                    SemigroupOptions const& options = {});

/// Shortlex-least non-empty word of `d` inducing t, if any.
std::optional<Word> word_for(Dfa const& d, Transformation const& t,
                             SemigroupOptions const& options = {});

}  // namespace atomkit
