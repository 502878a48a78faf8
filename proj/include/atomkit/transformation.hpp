#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "atomkit/state_set.hpp"

namespace atomkit {

/// A total map of {0, ..., n-1} into itself, stored as the sequence
/// t(0), t(1), ..., t(n-1).
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<State> map);
  Transformation(std::initializer_list<State> map)
      : Transformation(std::vector<State>(map)) {}

  std::size_t degree() const noexcept { return map_.size(); }
  State operator()(State q) const { return map_[q]; }
  std::span<State const> map() const noexcept { return map_; }

  /// Lexicographic rank of the map among all n^n maps of degree n;
  /// t(0) is the most significant digit. Requires degree <= 15.
  std::uint64_t index() const;
  static Transformation from_index(std::size_t n, std::uint64_t index);

  /// Number of distinct values, |im t|.
  std::size_t rank() const;

  friend bool operator==(Transformation const&, Transformation const&) = default;
  friend auto operator<=>(Transformation const&, Transformation const&) = default;

 private:
  std::vector<State> map_;
};

Transformation identity(std::size_t n);
/// (e_1, e_2, ..., e_k): e_i -> e_{i+1}, e_k -> e_1, everything else fixed.
Transformation make_cycle(std::size_t n, std::vector<State> const& elems);
Transformation make_transposition(std::size_t n, State i, State j);
/// (i -> j): i goes to j, everything else fixed.
Transformation make_singular(std::size_t n, State i, State j);
/// (Q -> j)
Transformation make_constant(std::size_t n, State j);

/// s ∘ t, i.e. (s ∘ t)(i) = s(t(i)).
Transformation compose(Transformation const& s, Transformation const& t);

StateSet image(Transformation const& t);
StateSet coimage(Transformation const& t);
/// {t(s) : s ∈ S}
StateSet apply_to_set(Transformation const& t, StateSet const& s);
/// t^{-1}(S) = {q : t(q) ∈ S}
StateSet preimage_of_set(Transformation const& t, StateSet const& s);
/// True iff p = t^{-1}(S) for some S. Equivalent to p = t^{-1}(t(p)).
bool is_preimage(Transformation const& t, StateSet const& p);

bool is_permutation(Transformation const& t);
/// Inverse of a permutation; throws if t is not one.
Transformation inverse(Transformation const& t);

bool is_singular(Transformation const& t);

struct SingularPermFactors {
  Transformation alpha;  ///< singular, (q_n -> q_j)
  Transformation pi;     ///< permutation
};

/// Factors a transformation of rank n-1 as alpha ∘ pi with alpha singular and
/// pi a permutation. Of the two states sharing an image, the smaller one keeps
/// its image under pi and the larger is sent to the unique coimage element.
SingularPermFactors decompose_singular_perm(Transformation const& t);

/// "(0,2,1)", "(2->0)", "(Q->1)" when the map has one of those shapes,
/// "[t(0) t(1) ...]" otherwise.
std::string to_string(Transformation const& t);

}  // namespace atomkit
