#include "atomkit/transformation.hpp"

#include <algorithm>
#include <optional>

#include "atomkit/error.hpp"

namespace atomkit {

namespace {

void check_index(std::size_t n, State q, char const* what) {
  if (q >= n) {
    throw Error(std::string(what) + " " + std::to_string(q) +
                " out of range for degree " + std::to_string(n));
  }
}

void check_same_degree(Transformation const& s, Transformation const& t) {
  if (s.degree() != t.degree()) {
    throw Error("degree mismatch: " + std::to_string(s.degree()) + " vs " +
                std::to_string(t.degree()));
  }
}

}  // namespace

Transformation::Transformation(std::vector<State> map) : map_(std::move(map)) {
  for (State v : map_) {
    check_index(map_.size(), v, "image");
  }
}

std::uint64_t Transformation::index() const {
  if (degree() > 15) {
    throw Error("transformation index needs degree <= 15");
  }
  std::uint64_t code = 0;
  for (State v : map_) {
    code = code * degree() + v;
  }
  return code;
}

Transformation Transformation::from_index(std::size_t n, std::uint64_t index) {
  if (n == 0 || n > 15) {
    throw Error("transformation index needs 1 <= degree <= 15");
  }
  std::vector<State> map(n);
  for (std::size_t i = n; i-- > 0;) {
    map[i] = static_cast<State>(index % n);
    index /= n;
  }
  if (index != 0) {
    throw Error("transformation index out of range");
  }
  return Transformation(std::move(map));
}

std::size_t Transformation::rank() const { return image(*this).size(); }

Transformation identity(std::size_t n) {
  std::vector<State> map(n);
  for (std::size_t i = 0; i < n; ++i) {
    map[i] = static_cast<State>(i);
  }
  return Transformation(std::move(map));
}

Transformation make_cycle(std::size_t n, std::vector<State> const& elems) {
  if (elems.size() < 2) {
    throw Error("a cycle needs at least two elements");
  }
  StateSet seen(n);
  for (State e : elems) {
    check_index(n, e, "cycle element");
    if (seen.contains(e)) {
      throw Error("repeated cycle element " + std::to_string(e));
    }
    seen.insert(e);
  }
  auto t = identity(n);
  std::vector<State> map(t.map().begin(), t.map().end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    map[elems[i]] = elems[(i + 1) % elems.size()];
  }
  return Transformation(std::move(map));
}

Transformation make_transposition(std::size_t n, State i, State j) {
  return make_cycle(n, {i, j});
}

Transformation make_singular(std::size_t n, State i, State j) {
  check_index(n, i, "state");
  check_index(n, j, "state");
  if (i == j) {
    throw Error("singular transformation (i->j) needs i != j");
  }
  auto t = identity(n);
  std::vector<State> map(t.map().begin(), t.map().end());
  map[i] = j;
  return Transformation(std::move(map));
}

Transformation make_constant(std::size_t n, State j) {
  check_index(n, j, "state");
  return Transformation(std::vector<State>(n, j));
}

Transformation compose(Transformation const& s, Transformation const& t) {
  check_same_degree(s, t);
  std::vector<State> map(t.degree());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = s(t(static_cast<State>(i)));
  }
  return Transformation(std::move(map));
}

StateSet image(Transformation const& t) {
  StateSet out(t.degree());
  for (State v : t.map()) {
    out.insert(v);
  }
  return out;
}

StateSet coimage(Transformation const& t) { return image(t).complement(); }

StateSet apply_to_set(Transformation const& t, StateSet const& s) {
  StateSet out(t.degree());
  s.for_each([&](State q) { out.insert(t(q)); });
  return out;
}

StateSet preimage_of_set(Transformation const& t, StateSet const& s) {
  StateSet out(t.degree());
  for (std::size_t q = 0; q < t.degree(); ++q) {
    if (s.contains(t(static_cast<State>(q)))) {
      out.insert(static_cast<State>(q));
    }
  }
  return out;
}

bool is_preimage(Transformation const& t, StateSet const& p) {
  return preimage_of_set(t, apply_to_set(t, p)) == p;
}

bool is_permutation(Transformation const& t) { return t.rank() == t.degree(); }

Transformation inverse(Transformation const& t) {
  if (!is_permutation(t)) {
    throw Error("only permutations have inverses");
  }
  std::vector<State> map(t.degree());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[t(static_cast<State>(i))] = static_cast<State>(i);
  }
  return Transformation(std::move(map));
}

bool is_singular(Transformation const& t) {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < t.degree(); ++i) {
    if (t(static_cast<State>(i)) != i) {
      ++moved;
    }
  }
  return moved == 1;
}

SingularPermFactors decompose_singular_perm(Transformation const& t) {
  std::size_t const n = t.degree();
  if (n == 0 || t.rank() != n - 1) {
    throw Error("decompose_singular_perm needs rank n-1, got rank " +
                std::to_string(t.rank()) + " at degree " + std::to_string(n));
  }
  // Rank n-1 means exactly one value has two preimages, p_j < p_n.
  std::vector<std::optional<State>> first_preimage(n);
  State p_j = 0;
  State p_n = 0;
  for (State q = 0; q < n; ++q) {
    auto& slot = first_preimage[t(q)];
    if (slot) {
      p_j = *slot;
      p_n = q;
      break;
    }
    slot = q;
  }
  State const q_n = coimage(t).members().front();
  std::vector<State> pi(t.map().begin(), t.map().end());
  pi[p_n] = q_n;
  return {make_singular(n, q_n, t(p_j)), Transformation(std::move(pi))};
}

std::string to_string(Transformation const& t) {
  std::size_t const n = t.degree();
  auto explicit_map = [&] {
    std::string out = "[";
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        out.push_back(' ');
      }
      out += std::to_string(t(static_cast<State>(i)));
    }
    return out + "]";
  };
  std::vector<State> moved;
  for (State i = 0; i < n; ++i) {
    if (t(i) != i) {
      moved.push_back(i);
    }
  }
  if (moved.empty()) {
    return explicit_map();
  }
  if (n >= 2 && t.rank() == 1) {
    return "(Q->" + std::to_string(t(0)) + ")";
  }
  if (moved.size() == 1) {
    return "(" + std::to_string(moved[0]) + "->" + std::to_string(t(moved[0])) + ")";
  }
  if (is_permutation(t)) {
    // One cycle through every moved point?
    std::vector<State> cycle{moved[0]};
    for (State q = t(moved[0]); q != moved[0]; q = t(q)) {
      cycle.push_back(q);
    }
    if (cycle.size() == moved.size()) {
      std::string out = "(";
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i > 0) {
          out.push_back(',');
        }
        out += std::to_string(cycle[i]);
      }
      return out + ")";
    }
  }
  return explicit_map();
}

}  // namespace atomkit
