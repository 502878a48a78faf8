#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "atomkit/atoms.hpp"
#include "atomkit/automata.hpp"
#include "atomkit/search.hpp"
#include "atomkit/semigroup.hpp"

namespace atomkit {

struct TableRow {
  bool initial = false;
  bool final = false;
  std::string state;
  std::vector<std::string> cells;
};

/// A transition table laid out like the ones in the literature: one row per
/// state, arrows for initial (→) and final (←) states, one column per letter.
struct TransitionTable {
  std::string title;
  std::string function;
  std::vector<std::string> letters;
  std::vector<TableRow> rows;
};

TransitionTable dfa_table(Dfa const& d);
/// The reversed NFA D^R; empty successor sets print as ∅.
TransitionTable reverse_table(Dfa const& d);
/// D^RD with rows in label order and Φ for the empty-set state.
TransitionTable determinized_reverse_table(Atomaton const& atomaton);
/// The átomaton; cells list successor labels ("Φ,0,2,02") or ∅.
TransitionTable atomaton_table(Atomaton const& atomaton);

std::string render(TransitionTable const& table);

struct AnalysisReport {
  std::size_t n = 0;
  bool minimal = false;
  std::size_t minimal_n = 0;
  SemigroupSummary semigroup;
  std::vector<AtomReport> atoms;
  std::size_t reverse_complexity = 0;
  /// Atom count equals the quotient complexity of the reverse.
  bool prop2_holds = false;
  std::vector<TransitionTable> tables;
};

AnalysisReport analyze(Dfa const& d, bool with_tables, SemigroupOptions const& options = {});
std::string render(AnalysisReport const& report);

std::string render_atoms(std::vector<AtomReport> const& atoms);
std::string render(SemigroupSummary const& summary);
std::string render(CampaignSummary const& summary);

void to_json(nlohmann::json& j, TableRow const& row);
void to_json(nlohmann::json& j, TransitionTable const& table);
void to_json(nlohmann::json& j, AtomReport const& atom);
void to_json(nlohmann::json& j, SemigroupSummary const& summary);
void to_json(nlohmann::json& j, AnalysisReport const& report);
void to_json(nlohmann::json& j, AtomComplexity const& a);
void from_json(nlohmann::json const& j, AtomComplexity& a);
void to_json(nlohmann::json& j, CampaignRecord const& record);
void from_json(nlohmann::json const& j, CampaignRecord& record);
void to_json(nlohmann::json& j, CampaignSummary const& summary);

/// One JSON object per line: every record, then the summary.
std::string to_jsonl(CampaignReport const& report);

}  // namespace atomkit
