#pragma once

#include <vector>

#include "atomkit/automata.hpp"
#include "atomkit/search.hpp"
#include "atomkit/semigroup.hpp"

namespace helpers {

using namespace atomkit;

/// Every word of length <= max_len over k letters, shortest first.
inline std::vector<Word> words_up_to(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t const end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter a = 0; a < k; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

inline std::vector<bool> membership(StateSet const& s) {
  std::vector<bool> out(s.universe());
  s.for_each([&](State q) { out[q] = true; });
  return out;
}

inline StateSet from_membership(std::vector<bool> const& v) {
  StateSet s(v.size());
  for (std::size_t q = 0; q < v.size(); ++q) {
    if (v[q]) {
      s.insert(static_cast<State>(q));
    }
  }
  return s;
}

inline bool full_semigroup(Dfa const& d) {
  SemigroupOptions o;
  o.witnesses = false;
  return TransformationSemigroup(d.delta(), o).size() == *full_monoid_size(d.size());
}

/// Minimal DFAs with full transition semigroup among all n=3, k=3 DFAs.
inline std::vector<Dfa> full_semigroup_n3() {
  std::vector<Dfa> out;
  DfaEnumeration(3, 3).for_each([&](Dfa const& d) {
    if (is_minimal(d) && full_semigroup(d)) {
      out.push_back(d);
    }
  });
  return out;
}

/// The first `count` minimal full-semigroup DFAs among random (n, k) samples.
inline std::vector<Dfa> sampled_full_semigroup(std::size_t n, std::size_t k, std::size_t count,
                                               std::uint64_t seed) {
  std::vector<Dfa> out;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    Dfa d = sample_dfa(n, k, seed, i);
    if (is_minimal(d) && full_semigroup(d)) {
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace helpers
