#include "atomkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "atomkit/bounds.hpp"
#include "atomkit/dfa_text.hpp"
#include "atomkit/error.hpp"
#include "atomkit/semigroup.hpp"

namespace atomkit {

namespace {

constexpr std::uint64_t kSampleShard = 1000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t pow_checked(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) {
      throw Error("enumeration size overflows 64 bits");
    }
  }
  return out;
}

std::uint64_t semigroup_size(Dfa const& m) {
  SemigroupOptions opts;
  opts.witnesses = false;
  return TransformationSemigroup(m.delta(), opts).size();
}

struct ShardResult {
  CampaignSummary summary;
  std::vector<CampaignRecord> records;
};

void merge_into(ShardResult& total, ShardResult&& part) {
  auto& s = total.summary;
  auto const& p = part.summary;
  s.visited += p.visited;
  s.minimal += p.minimal;
  s.full_semigroup += p.full_semigroup;
  s.tested += p.tested;
  s.violations += p.violations;
  s.findings += p.findings;
  for (auto const& [value, count] : p.syntactic_histogram) {
    s.syntactic_histogram[value] += count;
  }
  for (auto const& [r, values] : p.complexities_by_r) {
    s.complexities_by_r[r].insert(values.begin(), values.end());
  }
  std::move(part.records.begin(), part.records.end(), std::back_inserter(total.records));
}

using Analyzer = std::function<void(Dfa const&, ShardResult&)>;

CampaignReport run_campaign(std::string const& name, CampaignConfig const& config,
                            Analyzer const& analyze) {
  std::optional<DfaEnumeration> enumeration;
  std::uint64_t shards = 0;
  if (config.mode == CampaignMode::exhaustive) {
    enumeration.emplace(config.n, config.k, config.caps);
    shards = enumeration->shard_count();
  } else {
    shards = (config.samples + kSampleShard - 1) / kSampleShard;
  }

  std::vector<ShardResult> results(shards);
  auto run_shard = [&](std::uint64_t shard) {
    ShardResult& out = results[shard];
    if (enumeration) {
      std::uint64_t const begin = shard * enumeration->shard_size();
      for (std::uint64_t i = begin; i < begin + enumeration->shard_size(); ++i) {
        ++out.summary.visited;
        analyze(enumeration->at(i), out);
      }
    } else {
      std::uint64_t const begin = shard * kSampleShard;
      std::uint64_t const end = std::min(config.samples, begin + kSampleShard);
      for (std::uint64_t i = begin; i < end; ++i) {
        ++out.summary.visited;
        analyze(sample_dfa(config.n, config.k, config.seed, i), out);
      }
    }
  };

  std::size_t const workers =
      static_cast<std::size_t>(std::clamp<std::uint64_t>(config.workers, 1, std::max<std::uint64_t>(shards, 1)));
  if (workers <= 1) {
    for (std::uint64_t s = 0; s < shards; ++s) {
      run_shard(s);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t s = next++; s < shards; s = next++) {
            run_shard(s);
          }
        } catch (...) {
          errors[w] = std::current_exception();
          next = shards;
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  ShardResult total;
  for (auto& r : results) {
    merge_into(total, std::move(r));
  }
  CampaignReport report{std::move(total.summary), std::move(total.records)};
  report.summary.campaign = campaign_id(name, config);
  report.summary.n = config.n;
  report.summary.k = config.k;
  report.summary.mode = config.mode;
  if (config.mode == CampaignMode::sample) {
    report.summary.seed = config.seed;
  }
  report.summary.timestamp = config.timestamp;
  return report;
}

std::optional<std::uint64_t> record_seed(CampaignConfig const& config) {
  if (config.mode == CampaignMode::sample) {
    return config.seed;
  }
  return std::nullopt;
}

std::uint64_t all_atoms(std::size_t n) { return std::uint64_t{1} << n; }

}  // namespace

std::optional<std::uint64_t> enumeration_size(std::size_t n, std::size_t k) {
  try {
    std::uint64_t total = pow_checked(pow_checked(n, n), k);
    std::uint64_t out = 0;
    if (n >= 64 || __builtin_mul_overflow(total, std::uint64_t{1} << n, &out)) {
      return std::nullopt;
    }
    return out;
  } catch (Error const&) {
    return std::nullopt;
  }
}

DfaEnumeration::DfaEnumeration(std::size_t n, std::size_t k, EnumerationCaps const& caps)
    : n_(n), k_(k) {
  if (n == 0 || k == 0) {
    throw Error("enumeration needs n >= 1 and k >= 1");
  }
  auto const total = enumeration_size(n, k);
  std::string const estimate = total ? std::to_string(*total) : std::string("> 2^64");
  if (n > caps.max_n || k > caps.max_k || !total || *total > caps.max_dfas) {
    throw CapError("exhaustive enumeration of n = " + std::to_string(n) + ", k = " +
                       std::to_string(k) + " would visit " + estimate +
                       " DFAs, beyond the caps (n <= " + std::to_string(caps.max_n) +
                       ", k <= " + std::to_string(caps.max_k) + ", at most " +
                       std::to_string(caps.max_dfas) + " DFAs)",
                   "enumeration");
  }
  transformations_ = pow_checked(n, n);
  total_ = *total;
}

Dfa DfaEnumeration::at(std::uint64_t index) const {
  if (index >= total_) {
    throw Error("enumeration index out of range");
  }
  std::uint64_t const final_sets = std::uint64_t{1} << n_;
  StateSet finals = StateSet::from_mask(n_, index % final_sets);
  index /= final_sets;
  std::vector<Transformation> delta(k_);
  for (std::size_t a = k_; a-- > 0;) {
    delta[a] = Transformation::from_index(n_, index % transformations_);
    index /= transformations_;
  }
  return Dfa(default_alphabet(k_), std::move(delta), 0, std::move(finals));
}

Dfa sample_dfa(std::size_t n, std::size_t k, std::uint64_t seed, std::uint64_t index) {
  if (n == 0 || n > 15 || k == 0) {
    throw Error("sampling needs 1 <= n <= 15 and k >= 1");
  }
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::uniform_int_distribution<std::uint64_t> pick_t(0, pow_checked(n, n) - 1);
  std::vector<Transformation> delta;
  for (std::size_t a = 0; a < k; ++a) {
    delta.push_back(Transformation::from_index(n, pick_t(rng)));
  }
  std::uniform_int_distribution<std::uint64_t> pick_f(0, (std::uint64_t{1} << n) - 1);
  StateSet finals = StateSet::from_mask(n, pick_f(rng));
  return Dfa(default_alphabet(k), std::move(delta), 0, std::move(finals));
}

Dfa witness_max_semigroup(std::size_t n) {
  if (n == 0) {
    throw Error("witness_max_semigroup needs n >= 1");
  }
  std::vector<Transformation> delta;
  if (n == 1) {
    delta.assign(3, identity(1));
  } else {
    std::vector<State> all(n);
    for (std::size_t i = 0; i < n; ++i) {
      all[i] = static_cast<State>(i);
    }
    delta = {make_transposition(n, 0, 1), make_cycle(n, all),
             make_singular(n, static_cast<State>(n - 1), 0)};
  }
  Dfa d(default_alphabet(3), std::move(delta), 0,
        StateSet(n, {static_cast<State>(n - 1)}));
  if (full_monoid_size(n) != syntactic_complexity(d)) {
    throw Error("witness_max_semigroup(" + std::to_string(n) +
                ") does not reach syntactic complexity n^n");
  }
  return d;
}

Dfa example1() {
  return Dfa({"a", "b", "c", "d"},
             {make_transposition(3, 0, 1), make_transposition(3, 1, 2),
              make_singular(3, 2, 0), make_constant(3, 1)},
             0, StateSet(3, {2}));
}

std::string campaign_id(std::string const& name, CampaignConfig const& config) {
  std::string id = name + "-n" + std::to_string(config.n) + "-k" + std::to_string(config.k);
  if (config.mode == CampaignMode::exhaustive) {
    return id + "-exhaustive";
  }
  return id + "-sample-m" + std::to_string(config.samples) + "-seed" +
         std::to_string(config.seed);
}

CampaignRecord make_record(Dfa const& d, std::string campaign, std::string kind,
                           std::optional<std::uint64_t> seed, std::string timestamp) {
  CampaignRecord rec;
  rec.campaign = std::move(campaign);
  rec.kind = std::move(kind);
  rec.dfa = serialize_dfa(d);
  rec.n = d.size();
  rec.alphabet_size = d.alphabet_size();
  auto const atomaton = build_atomaton(d);
  rec.minimal_n = atomaton.quotient_count();
  rec.syntactic_complexity = semigroup_size(atomaton.minimal);
  auto const reports = atoms_of(atomaton);
  rec.atom_count = reports.size();
  for (auto const& a : reports) {
    rec.atom_complexities.push_back({format_set(a.label, "Φ"), a.r, a.complexity, a.bound});
  }
  rec.is_maximal_atoms =
      rec.minimal_n < 64 && reports.size() == all_atoms(rec.minimal_n) &&
      std::all_of(reports.begin(), reports.end(), [](auto const& a) { return a.is_maximal; });
  rec.seed = seed;
  rec.timestamp = std::move(timestamp);
  return rec;
}

std::vector<std::string> record_mismatches(CampaignRecord const& record) {
  CampaignRecord const again = make_record(parse_dfa(record.dfa), record.campaign,
                                           record.kind, record.seed, record.timestamp);
  std::vector<std::string> out;
  auto check = [&](bool same, char const* field) {
    if (!same) {
      out.emplace_back(field);
    }
  };
  check(again.dfa == record.dfa, "dfa");
  check(again.n == record.n, "n");
  check(again.minimal_n == record.minimal_n, "minimal_n");
  check(again.alphabet_size == record.alphabet_size, "alphabet_size");
  check(again.syntactic_complexity == record.syntactic_complexity, "syntactic_complexity");
  check(again.atom_count == record.atom_count, "atom_count");
  check(again.atom_complexities == record.atom_complexities, "atom_complexities");
  check(again.is_maximal_atoms == record.is_maximal_atoms, "is_maximal_atoms");
  return out;
}

CampaignReport verify_theorem3(CampaignConfig const& config) {
  std::string const id = campaign_id("theorem3", config);
  std::size_t const n = config.n;
  std::uint64_t const full = *full_monoid_size(n);
  return run_campaign("theorem3", config, [&](Dfa const& d, ShardResult& out) {
    if (!is_minimal(d)) {
      return;
    }
    ++out.summary.minimal;
    std::uint64_t const sc = semigroup_size(d);
    if (sc != full) {
      return;
    }
    ++out.summary.full_semigroup;
    ++out.summary.tested;
    ++out.summary.syntactic_histogram[sc];
    auto const reports = atoms_of(d);
    bool ok = reports.size() == all_atoms(n);
    for (auto const& a : reports) {
      out.summary.complexities_by_r[a.r].insert(a.complexity);
      ok = ok && a.is_maximal;
    }
    if (!ok) {
      ++out.summary.violations;
      out.records.push_back(
          make_record(d, id, "violation", record_seed(config), config.timestamp));
    }
  });
}

CampaignReport find_converse_counterexamples(CampaignConfig const& config) {
  std::string const id = campaign_id("converse", config);
  std::size_t const n = config.n;
  std::uint64_t const full = *full_monoid_size(n);
  return run_campaign("converse", config, [&](Dfa const& d, ShardResult& out) {
    if (!is_minimal(d)) {
      return;
    }
    ++out.summary.minimal;
    ++out.summary.tested;
    std::uint64_t const sc = semigroup_size(d);
    if (sc == full) {
      ++out.summary.full_semigroup;
      return;
    }
    Atomaton const atomaton = build_atomaton(d);
    if (atomaton.nfa.size != all_atoms(n)) {
      return;
    }
    for (StateSet const& label : atomaton.nfa.labels) {
      std::uint64_t const bound = max_atom_complexity(n, n - label.size());
      if (atom_dfa(atomaton, label).dfa.size() != bound) {
        return;
      }
    }
    ++out.summary.findings;
    ++out.summary.syntactic_histogram[sc];
    out.records.push_back(make_record(d, id, "finding", record_seed(config), config.timestamp));
  });
}

CampaignReport verify_prop1(CampaignConfig const& config) {
  std::string const id = campaign_id("prop1", config);
  std::size_t const n = config.n;
  std::uint64_t const full = *full_monoid_size(n);
  auto check = [&](Dfa const& d, ShardResult& out) {
    ++out.summary.full_semigroup;
    ++out.summary.tested;
    ++out.summary.syntactic_histogram[full];
    if (quotient_complexity(reverse(d)) != all_atoms(n)) {
      ++out.summary.violations;
      out.records.push_back(
          make_record(d, id, "violation", record_seed(config), config.timestamp));
    }
  };
  CampaignReport report = run_campaign("prop1", config, [&](Dfa const& d, ShardResult& out) {
    if (!is_minimal(d)) {
      return;
    }
    ++out.summary.minimal;
    if (semigroup_size(d) == full) {
      check(d, out);
    }
  });
  ShardResult witness;
  check(witness_max_semigroup(n), witness);
  ++witness.summary.minimal;
  ++witness.summary.visited;
  ShardResult total{std::move(report.summary), std::move(report.records)};
  merge_into(total, std::move(witness));
  return {std::move(total.summary), std::move(total.records)};
}

CampaignReport verify_prop2(CampaignConfig const& config) {
  std::string const id = campaign_id("prop2", config);
  std::size_t const n = config.n;
  return run_campaign("prop2", config, [&](Dfa const& d, ShardResult& out) {
    bool const minimal = is_minimal(d);
    if (minimal) {
      ++out.summary.minimal;
    }
    ++out.summary.tested;
    if (atom_labels(d).size() != quotient_complexity(reverse(d))) {
      ++out.summary.violations;
      out.records.push_back(
          make_record(d, id, "violation", record_seed(config), config.timestamp));
    }
    (void)n;
  });
}

}  // namespace atomkit
