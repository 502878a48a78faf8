#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "atomkit/atoms.hpp"
#include "atomkit/automata.hpp"

namespace atomkit {

struct EnumerationCaps {
  std::size_t max_n = 4;
  std::size_t max_k = 3;
  /// Largest number of DFAs an exhaustive campaign may visit.
  std::uint64_t max_dfas = 300'000'000;
};

/// All DFAs with states {0..n-1}, k letters and initial state 0, in
/// lexicographic order of (δ_0, ..., δ_{k-1}, final-set bitmask), each δ_i
/// ranked by Transformation::index.
class DfaEnumeration {
 public:
  DfaEnumeration(std::size_t n, std::size_t k, EnumerationCaps const& caps = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return total_; }
  /// Number of DFAs sharing one first-letter transformation.
  std::uint64_t shard_size() const noexcept { return total_ / transformations_; }
  std::uint64_t shard_count() const noexcept { return transformations_; }

  Dfa at(std::uint64_t index) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t i = 0; i < total_; ++i) {
      f(at(i));
    }
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::uint64_t transformations_;
  std::uint64_t total_;
};

/// Estimated n^{nk} * 2^n, or nullopt on overflow.
std::optional<std::uint64_t> enumeration_size(std::size_t n, std::size_t k);

/// Uniform random DFA: every letter uniform over the n^n transformations and
/// the final set uniform over the 2^n subsets; initial state 0. The result
/// depends only on (n, k, seed, index).
Dfa sample_dfa(std::size_t n, std::size_t k, std::uint64_t seed, std::uint64_t index);

/// Letters a = (0,1), b = (0,1,...,n-1), c = (n-1 -> 0); initial 0, final
/// {n-1}. Letters degenerate to the identity where n is too small. Throws if
/// the syntactic complexity is not n^n.
Dfa witness_max_semigroup(std::size_t n);

/// Three-state, four-letter DFA with δ_a = (0,1), δ_b = (1,2),
/// δ_c = (2->0), δ_d = (Q->1), initial 0, final {2}.
Dfa example1();

enum class CampaignMode { exhaustive, sample };

struct CampaignConfig {
  std::size_t n = 3;
  std::size_t k = 3;
  CampaignMode mode = CampaignMode::exhaustive;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  EnumerationCaps caps;
  /// Copied into every record; leave empty for reproducible output.
  std::string timestamp;
};

struct AtomComplexity {
  std::string label;
  std::size_t r = 0;
  std::uint64_t complexity = 0;
  std::uint64_t bound = 0;

  friend bool operator==(AtomComplexity const&, AtomComplexity const&) = default;
};

struct CampaignRecord {
  std::string campaign;
  /// "violation" or "finding".
  std::string kind;
  /// The DFA as originally enumerated or sampled, in document form.
  std::string dfa;
  std::size_t n = 0;
  std::size_t minimal_n = 0;
  std::size_t alphabet_size = 0;
  std::uint64_t syntactic_complexity = 0;
  std::size_t atom_count = 0;
  std::vector<AtomComplexity> atom_complexities;
  bool is_maximal_atoms = false;
  std::optional<std::uint64_t> seed;
  std::string timestamp;

  friend bool operator==(CampaignRecord const&, CampaignRecord const&) = default;
};

struct CampaignSummary {
  std::string campaign;
  std::size_t n = 0;
  std::size_t k = 0;
  CampaignMode mode = CampaignMode::exhaustive;
  std::optional<std::uint64_t> seed;
  std::string timestamp;
  /// DFAs generated.
  std::uint64_t visited = 0;
  /// Of those, minimal with n states.
  std::uint64_t minimal = 0;
  /// Of those, with syntactic complexity n^n.
  std::uint64_t full_semigroup = 0;
  /// Instances the campaign's property was checked on.
  std::uint64_t tested = 0;
  std::uint64_t violations = 0;
  std::uint64_t findings = 0;
  /// Syntactic complexities of the instances of interest (findings for the
  /// converse search, tested instances otherwise).
  std::map<std::uint64_t, std::uint64_t> syntactic_histogram;
  /// r -> atom complexities observed on tested instances (theorem3 only).
  std::map<std::size_t, std::set<std::uint64_t>> complexities_by_r;

  friend bool operator==(CampaignSummary const&, CampaignSummary const&) = default;
};

struct CampaignReport {
  CampaignSummary summary;
  std::vector<CampaignRecord> records;
};

/// Full metrics of `d` packed as a record.
CampaignRecord make_record(Dfa const& d, std::string campaign, std::string kind,
                           std::optional<std::uint64_t> seed, std::string timestamp);

/// Names of the metrics of `record` that differ when recomputed from its DFA
/// document. Empty means the record reproduces.
std::vector<std::string> record_mismatches(CampaignRecord const& record);

/// Minimal instances with syntactic complexity n^n must have 2^n atoms, each
/// of maximal complexity. Every failure is a "violation" record.
CampaignReport verify_theorem3(CampaignConfig const& config);

/// Minimal instances whose atoms are all maximal but whose syntactic
/// complexity is below n^n; each is a "finding" record.
CampaignReport find_converse_counterexamples(CampaignConfig const& config);

/// Full-semigroup minimal instances (and witness_max_semigroup(n)) must have a
/// reverse of quotient complexity 2^n.
CampaignReport verify_prop1(CampaignConfig const& config);

/// Every instance must have as many atoms as its reverse has quotients.
CampaignReport verify_prop2(CampaignConfig const& config);

std::string campaign_id(std::string const& name, CampaignConfig const& config);

}  // namespace atomkit
