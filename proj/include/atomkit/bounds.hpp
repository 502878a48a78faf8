#pragma once

#include <cstdint>
#include <vector>

#include "atomkit/atoms.hpp"
#include "atomkit/automata.hpp"

namespace atomkit {

/// C(n, k); throws on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Largest possible quotient complexity of an atom with r complemented
/// quotients of a language with n quotients:
///
///   2^n - 1                                                if r = 0 or r = n
///   1 + sum_{k=1}^{r} sum_{h=k+1}^{k+n-r} C(n,h) * C(h,k)  otherwise
///
/// Throws on r > n, n = 0, or 64-bit overflow.
std::uint64_t max_atom_complexity(std::uint64_t n, std::uint64_t r);

struct MaxOverR {
  std::uint64_t r = 0;
  std::uint64_t value = 0;
};

/// Argmax of max_atom_complexity(n, .), smallest r on ties.
MaxOverR max_over_r(std::uint64_t n);

struct MaximalityCheck {
  bool maximal = false;
  std::size_t n = 0;
  std::vector<AtomReport> atoms;
};

/// True iff the language has all 2^n atoms and each one meets its bound.
MaximalityCheck is_maximal_atoms(Dfa const& d);

}  // namespace atomkit
