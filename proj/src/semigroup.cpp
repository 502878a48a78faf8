#include "atomkit/semigroup.hpp"

#include <algorithm>
#include <limits>

#include "atomkit/error.hpp"

namespace atomkit {

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

std::uint64_t encode(std::span<State const> map) {
  std::uint64_t code = 0;
  for (State v : map) {
    code = code * map.size() + v;
  }
  return code;
}

void decode(std::uint64_t code, std::span<State> map) {
  std::size_t const n = map.size();
  for (std::size_t i = n; i-- > 0;) {
    map[i] = static_cast<State>(code % n);
    code /= n;
  }
}

}  // namespace

std::optional<std::uint64_t> full_monoid_size(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(n), &total)) {
      return std::nullopt;
    }
  }
  return total;
}

TransformationSemigroup::TransformationSemigroup(
    std::span<Transformation const> generators, SemigroupOptions const& options)
    : generator_count_(generators.size()), witnesses_(options.witnesses) {
  if (generators.empty()) {
    return;
  }
  degree_ = generators.front().degree();
  for (auto const& g : generators) {
    if (g.degree() != degree_) {
      throw Error("generators of different degrees");
    }
  }
  std::size_t const limit_degree = std::min<std::size_t>(options.max_degree, 15);
  if (degree_ > limit_degree) {
    throw CapError("semigroup closure refused at degree " + std::to_string(degree_) +
                       " (max_degree cap is " + std::to_string(limit_degree) + ")",
                   "max_degree");
  }
  std::uint64_t const cap = std::min<std::uint64_t>(options.max_elements, kNoParent - 1);
  if (auto total = full_monoid_size(degree_); total && *total <= kDenseLimit) {
    dense_.assign(*total, 0);
  }

  auto add = [&](std::uint64_t code, std::uint32_t parent, std::uint32_t letter) {
    if (lookup(code)) {
      return;
    }
    if (codes_.size() >= cap) {
      throw CapError("semigroup closure exceeds the cap of " + std::to_string(cap) +
                         " elements",
                     "max_elements");
    }
    remember(code, static_cast<std::uint32_t>(codes_.size()));
    codes_.push_back(code);
    if (witnesses_) {
      parent_.push_back(parent);
      letter_.push_back(letter);
    }
  };

  std::size_t const n = degree_;
  for (std::size_t a = 0; a < generators.size(); ++a) {
    add(encode(generators[a].map()), kNoParent, static_cast<std::uint32_t>(a));
  }
  std::vector<State> current(n);
  std::vector<State> next(n);
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    decode(codes_[i], current);
    for (std::size_t a = 0; a < generators.size(); ++a) {
      auto const& g = generators[a];
      for (std::size_t q = 0; q < n; ++q) {
        next[q] = g(current[q]);
      }
      add(encode(next), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(a));
    }
  }
}

std::optional<std::uint32_t> TransformationSemigroup::lookup(std::uint64_t code) const {
  if (!dense_.empty()) {
    if (dense_[code] == 0) {
      return std::nullopt;
    }
    return dense_[code] - 1;
  }
  auto it = sparse_.find(code);
  if (it == sparse_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void TransformationSemigroup::remember(std::uint64_t code, std::uint32_t index) {
  if (!dense_.empty()) {
    dense_[code] = index + 1;
  } else {
    sparse_.emplace(code, index);
  }
}

Transformation TransformationSemigroup::element(std::size_t i) const {
  std::vector<State> map(degree_);
  decode(codes_.at(i), map);
  return Transformation(std::move(map));
}

std::vector<Transformation> TransformationSemigroup::elements() const {
  std::vector<Transformation> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.push_back(element(i));
  }
  return out;
}

std::optional<std::size_t> TransformationSemigroup::find(Transformation const& t) const {
  if (t.degree() != degree_ || codes_.empty()) {
    return std::nullopt;
  }
  if (auto idx = lookup(encode(t.map()))) {
    return *idx;
  }
  return std::nullopt;
}

Word TransformationSemigroup::word(std::size_t i) const {
  if (!witnesses_) {
    throw Error("semigroup was computed without witnesses");
  }
  Word w;
  for (auto j = static_cast<std::uint32_t>(i); j != kNoParent; j = parent_.at(j)) {
    w.push_back(letter_[j]);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<std::uint64_t> TransformationSemigroup::rank_histogram() const {
  std::vector<std::uint64_t> histogram(degree_ + 1, 0);
  std::vector<State> map(degree_);
  std::vector<char> seen(degree_);
  for (std::uint64_t code : codes_) {
    decode(code, map);
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t rank = 0;
    for (State v : map) {
      if (!seen[v]) {
        seen[v] = 1;
        ++rank;
      }
    }
    ++histogram[rank];
  }
  return histogram;
}

TransformationSemigroup transition_semigroup(Dfa const& d,
                                             SemigroupOptions const& options) {
  return TransformationSemigroup(d.delta(), options);
}

std::vector<WordWitness> witnesses(TransformationSemigroup const& s) {
  std::vector<WordWitness> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back({s.element(i), s.word(i)});
  }
  return out;
}

SemigroupSummary summarize_semigroup(Dfa const& d, SemigroupOptions const& options) {
  Dfa const m = minimize(d);
  SemigroupOptions opts = options;
  opts.witnesses = false;
  TransformationSemigroup const s(m.delta(), opts);
  SemigroupSummary summary;
  summary.n = m.size();
  summary.size = s.size();
  summary.is_full = full_monoid_size(m.size()) == s.size();
  summary.generator_count = s.generator_count();
  summary.rank_histogram = s.rank_histogram();
  summary.minimized = m.size() != d.size();
  return summary;
}

std::uint64_t syntactic_complexity(Dfa const& d, SemigroupOptions const& options) {
  SemigroupOptions opts = options;
  opts.witnesses = false;
  return TransformationSemigroup(minimize(d).delta(), opts).size();
}

bool generates_full(std::span<Transformation const> generators, std::size_t n,
                    SemigroupOptions const& options) {
  for (auto const& g : generators) {
    if (g.degree() != n) {
      throw Error("generator of degree " + std::to_string(g.degree()) +
                  " where degree " + std::to_string(n) + " was expected");
    }
  }
  SemigroupOptions opts = options;
  opts.witnesses = false;
  return full_monoid_size(n) == TransformationSemigroup(generators, opts).size();
}

std::optional<Word> word_for(Dfa const& d, Transformation const& t,
                             SemigroupOptions const& options) {
  SemigroupOptions opts = options;
  opts.witnesses = true;
  TransformationSemigroup const s(d.delta(), opts);
  if (auto idx = s.find(t)) {
    return s.word(*idx);
  }
  return std::nullopt;
}

}  // namespace atomkit
