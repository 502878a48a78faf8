#include "atomkit/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "atomkit/bounds.hpp"
#include "atomkit/dfa_text.hpp"

namespace atomkit {

namespace {

using nlohmann::json;

std::string label_text(StateSet const& s) { return format_set(s, "Φ"); }

std::string collection_text(std::vector<StateSet> sets) {
  if (sets.empty()) {
    return "∅";
  }
  std::sort(sets.begin(), sets.end());
  std::string out;
  for (auto const& s : sets) {
    out += (out.empty() ? "" : ",") + label_text(s);
  }
  return out;
}

std::size_t display_width(std::string const& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(std::string const& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::string marker(TableRow const& row) {
  if (row.initial && row.final) {
    return "↔";
  }
  return row.initial ? "→" : row.final ? "←" : "";
}

std::vector<std::size_t> label_order(std::vector<StateSet> const& labels) {
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return labels[x] < labels[y]; });
  return order;
}

std::string table_line(std::vector<std::string> const& cells,
                       std::vector<std::size_t> const& widths) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out += pad(cells[i], widths[i]);
    out += i + 1 < cells.size() ? (i == 1 ? " | " : "  ") : "";
  }
  while (!out.empty() && out.back() == ' ') {
    out.pop_back();
  }
  return out + "\n";
}

}  // namespace

TransitionTable dfa_table(Dfa const& d) {
  TransitionTable t{"DFA D", "δ", d.alphabet(), {}};
  for (State q = 0; q < d.size(); ++q) {
    TableRow row{q == d.initial(), d.finals().contains(q), std::to_string(q), {}};
    for (Letter a = 0; a < d.alphabet_size(); ++a) {
      row.cells.push_back(std::to_string(d.step(q, a)));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

TransitionTable reverse_table(Dfa const& d) {
  Nfa const r = reverse(d);
  TransitionTable t{"NFA D^R", "δ^R", d.alphabet(), {}};
  for (State q = 0; q < r.size; ++q) {
    TableRow row{r.initials.contains(q), r.finals.contains(q), std::to_string(q), {}};
    for (Letter a = 0; a < r.alphabet.size(); ++a) {
      row.cells.push_back(format_set(r.eta[a][q], "∅"));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

TransitionTable determinized_reverse_table(Atomaton const& atomaton) {
  SubsetDfa const& rd = atomaton.reversed;
  TransitionTable t{"D^RD", "δ^RD", rd.dfa.alphabet(), {}};
  for (std::size_t q : label_order(rd.labels)) {
    TableRow row{q == rd.dfa.initial(), rd.dfa.finals().contains(static_cast<State>(q)),
                 label_text(rd.labels[q]), {}};
    for (Letter a = 0; a < rd.dfa.alphabet_size(); ++a) {
      row.cells.push_back(label_text(rd.labels[rd.dfa.step(static_cast<State>(q), a)]));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

TransitionTable atomaton_table(Atomaton const& atomaton) {
  Nfa const& m = atomaton.nfa;
  TransitionTable t{"átomaton A = D^RDR", "η", m.alphabet, {}};
  for (std::size_t q : label_order(m.labels)) {
    auto const state = static_cast<State>(q);
    TableRow row{m.initials.contains(state), m.finals.contains(state),
                 label_text(m.labels[q]), {}};
    for (Letter a = 0; a < m.alphabet.size(); ++a) {
      std::vector<StateSet> next;
      m.eta[a][q].for_each([&](State p) { next.push_back(m.labels[p]); });
      row.cells.push_back(collection_text(std::move(next)));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render(TransitionTable const& table) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> header{"", table.function};
  header.insert(header.end(), table.letters.begin(), table.letters.end());
  lines.push_back(std::move(header));
  for (auto const& row : table.rows) {
    std::vector<std::string> cells{marker(row), row.state};
    cells.insert(cells.end(), row.cells.begin(), row.cells.end());
    lines.push_back(std::move(cells));
  }
  std::vector<std::size_t> widths(lines.front().size(), 0);
  for (auto const& cells : lines) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(cells[i]));
    }
  }
  std::string out = table.title + "\n";
  for (auto const& cells : lines) {
    out += table_line(cells, widths);
  }
  return out;
}

AnalysisReport analyze(Dfa const& d, bool with_tables, SemigroupOptions const& options) {
  AnalysisReport r;
  Atomaton const atomaton = build_atomaton(d);
  r.n = d.size();
  r.minimal = !atomaton.minimized_input;
  r.minimal_n = atomaton.quotient_count();
  r.semigroup = summarize_semigroup(d, options);
  r.atoms = atoms_of(atomaton);
  r.reverse_complexity = quotient_complexity(reverse(d));
  r.prop2_holds = r.atoms.size() == r.reverse_complexity;
  if (with_tables) {
    r.tables = {dfa_table(atomaton.minimal), reverse_table(atomaton.minimal),
                determinized_reverse_table(atomaton), atomaton_table(atomaton)};
  }
  return r;
}

std::string render_atoms(std::vector<AtomReport> const& atoms) {
  TransitionTable t{"", "S", {"r", "complexity", "bound", "maximal", "kind"}, {}};
  for (auto const& a : atoms) {
    std::string kind = a.is_negative ? "negative" : "positive";
    if (a.is_initial) {
      kind += ",initial";
    }
    if (a.is_final) {
      kind += ",final";
    }
    t.rows.push_back({false, false, label_text(a.label),
                      {std::to_string(a.r), std::to_string(a.complexity),
                       std::to_string(a.bound), a.is_maximal ? "yes" : "no", kind}});
  }
  std::string out = render(t);
  return out.substr(out.find('\n') + 1);
}

std::string render(SemigroupSummary const& s) {
  std::ostringstream out;
  out << "states: " << s.n << (s.minimized ? " (after minimization)" : "") << "\n";
  out << "generators: " << s.generator_count << "\n";
  out << "syntactic complexity: " << s.size;
  if (auto full = full_monoid_size(s.n)) {
    out << " of " << *full;
  }
  out << (s.is_full ? " (full transformation monoid)" : "") << "\n";
  out << "rank histogram:";
  for (std::size_t r = 1; r < s.rank_histogram.size(); ++r) {
    out << " " << r << ":" << s.rank_histogram[r];
  }
  out << "\n";
  return out.str();
}

std::string render(AnalysisReport const& r) {
  std::ostringstream out;
  out << "states: " << r.n << (r.minimal ? " (minimal)" : "")
      << (r.minimal ? "" : ", minimal DFA has " + std::to_string(r.minimal_n)) << "\n";
  std::string semigroup = render(r.semigroup);
  semigroup = semigroup.substr(semigroup.find('\n') + 1);
  out << semigroup;
  out << "atoms: " << r.atoms.size() << "\n";
  out << "reverse quotient complexity: " << r.reverse_complexity
      << (r.prop2_holds ? " (equals atom count)" : " (differs from atom count)") << "\n\n";
  out << render_atoms(r.atoms);
  for (auto const& t : r.tables) {
    out << "\n" << render(t);
  }
  return out.str();
}

std::string render(CampaignSummary const& s) {
  std::ostringstream out;
  out << "campaign: " << s.campaign << "\n";
  out << "visited: " << s.visited << "\n";
  out << "minimal: " << s.minimal << "\n";
  out << "full semigroup: " << s.full_semigroup << "\n";
  out << "tested: " << s.tested << "\n";
  out << "violations: " << s.violations << "\n";
  out << "findings: " << s.findings << "\n";
  if (!s.syntactic_histogram.empty()) {
    out << "syntactic complexities:";
    for (auto const& [value, count] : s.syntactic_histogram) {
      out << " " << value << "x" << count;
    }
    out << "\n";
  }
  for (auto const& [r, values] : s.complexities_by_r) {
    out << "atom complexities at r=" << r << ":";
    for (auto v : values) {
      out << " " << v;
    }
    out << "\n";
  }
  return out.str();
}

void to_json(json& j, TableRow const& row) {
  j = json{{"initial", row.initial}, {"final", row.final}, {"state", row.state},
           {"cells", row.cells}};
}

void to_json(json& j, TransitionTable const& t) {
  j = json{{"title", t.title}, {"function", t.function}, {"letters", t.letters},
           {"rows", t.rows}};
}

void to_json(json& j, AtomReport const& a) {
  j = json{{"label", label_text(a.label)},
           {"r", a.r},
           {"complexity", a.complexity},
           {"bound", a.bound},
           {"maximal", a.is_maximal},
           {"negative", a.is_negative},
           {"initial", a.is_initial},
           {"final", a.is_final},
           {"determinized_states", a.determinized_states}};
}

void to_json(json& j, SemigroupSummary const& s) {
  j = json{{"n", s.n},
           {"size", s.size},
           {"is_full", s.is_full},
           {"generator_count", s.generator_count},
           {"rank_histogram", s.rank_histogram},
           {"minimized", s.minimized}};
}

void to_json(json& j, AnalysisReport const& r) {
  j = json{{"n", r.n},
           {"minimal", r.minimal},
           {"minimal_n", r.minimal_n},
           {"syntactic_complexity", r.semigroup.size},
           {"is_full", r.semigroup.is_full},
           {"semigroup", r.semigroup},
           {"atom_count", r.atoms.size()},
           {"atoms", r.atoms},
           {"reverse_complexity", r.reverse_complexity},
           {"atom_count_equals_reverse_complexity", r.prop2_holds}};
  if (!r.tables.empty()) {
    j["tables"] = r.tables;
  }
}

void to_json(json& j, AtomComplexity const& a) {
  j = json{{"label", a.label}, {"r", a.r}, {"complexity", a.complexity}, {"bound", a.bound}};
}

void from_json(json const& j, AtomComplexity& a) {
  j.at("label").get_to(a.label);
  j.at("r").get_to(a.r);
  j.at("complexity").get_to(a.complexity);
  j.at("bound").get_to(a.bound);
}

void to_json(json& j, CampaignRecord const& r) {
  j = json{{"campaign", r.campaign},
           {"kind", r.kind},
           {"dfa", r.dfa},
           {"n", r.n},
           {"minimal_n", r.minimal_n},
           {"alphabet_size", r.alphabet_size},
           {"syntactic_complexity", r.syntactic_complexity},
           {"atom_count", r.atom_count},
           {"atom_complexities", r.atom_complexities},
           {"is_maximal_atoms", r.is_maximal_atoms},
           {"seed", r.seed ? json(*r.seed) : json(nullptr)},
           {"timestamp", r.timestamp}};
}

void from_json(json const& j, CampaignRecord& r) {
  j.at("campaign").get_to(r.campaign);
  j.at("kind").get_to(r.kind);
  j.at("dfa").get_to(r.dfa);
  j.at("n").get_to(r.n);
  j.at("minimal_n").get_to(r.minimal_n);
  j.at("alphabet_size").get_to(r.alphabet_size);
  j.at("syntactic_complexity").get_to(r.syntactic_complexity);
  j.at("atom_count").get_to(r.atom_count);
  j.at("atom_complexities").get_to(r.atom_complexities);
  j.at("is_maximal_atoms").get_to(r.is_maximal_atoms);
  r.seed.reset();
  if (j.contains("seed") && !j.at("seed").is_null()) {
    r.seed = j.at("seed").get<std::uint64_t>();
  }
  j.at("timestamp").get_to(r.timestamp);
}

void to_json(json& j, CampaignSummary const& s) {
  json histogram = json::object();
  for (auto const& [value, count] : s.syntactic_histogram) {
    histogram[std::to_string(value)] = count;
  }
  json by_r = json::object();
  for (auto const& [r, values] : s.complexities_by_r) {
    by_r[std::to_string(r)] = values;
  }
  j = json{{"kind", "summary"},
           {"campaign", s.campaign},
           {"n", s.n},
           {"k", s.k},
           {"mode", s.mode == CampaignMode::exhaustive ? "exhaustive" : "sample"},
           {"seed", s.seed ? json(*s.seed) : json(nullptr)},
           {"timestamp", s.timestamp},
           {"visited", s.visited},
           {"minimal", s.minimal},
           {"full_semigroup", s.full_semigroup},
           {"tested", s.tested},
           {"violations", s.violations},
           {"findings", s.findings},
           {"syntactic_histogram", histogram},
           {"complexities_by_r", by_r}};
}

std::string to_jsonl(CampaignReport const& report) {
  std::string out;
  for (auto const& r : report.records) {
    out += json(r).dump() + "\n";
  }
  out += json(report.summary).dump() + "\n";
  return out;
}

}  // namespace atomkit
