#include "atomkit/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "atomkit/error.hpp"

namespace atomkit {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error("integer overflow in atom complexity bound");
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error("integer overflow in atom complexity bound");
  }
  return out;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i; divide first where possible.
    std::uint64_t const g = std::gcd(result, i);
    std::uint64_t const factor = (n - k + i) / (i / g);
    result = checked_mul(result / g, factor);
  }
  return result;
}

std::uint64_t max_atom_complexity(std::uint64_t n, std::uint64_t r) {
  if (n == 0) {
    throw Error("max_atom_complexity needs n >= 1");
  }
  if (r > n) {
    throw Error("max_atom_complexity: r = " + std::to_string(r) + " exceeds n = " +
                std::to_string(n));
  }
  if (r == 0 || r == n) {
    if (n >= 64) {
      throw Error("integer overflow in atom complexity bound");
    }
    return (std::uint64_t{1} << n) - 1;
  }
  std::uint64_t total = 1;
  for (std::uint64_t k = 1; k <= r; ++k) {
    for (std::uint64_t h = k + 1; h <= k + n - r; ++h) {
      total = checked_add(total, checked_mul(binomial(n, h), binomial(h, k)));
    }
  }
  return total;
}

MaxOverR max_over_r(std::uint64_t n) {
  MaxOverR best{0, max_atom_complexity(n, 0)};
  for (std::uint64_t r = 1; r <= n; ++r) {
    std::uint64_t const v = max_atom_complexity(n, r);
    if (v > best.value) {
      best = {r, v};
    }
  }
  return best;
}

MaximalityCheck is_maximal_atoms(Dfa const& d) {
  MaximalityCheck check;
  check.atoms = atoms_of(d);
  check.n = minimize(d).size();
  bool const all_atoms = check.n < 64 && check.atoms.size() == (std::size_t{1} << check.n);
  check.maximal = all_atoms && std::all_of(check.atoms.begin(), check.atoms.end(),
                                           [](AtomReport const& a) { return a.is_maximal; });
  return check;
}

}  // namespace atomkit
