#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "atomkit/atoms.hpp"
#include "atomkit/bounds.hpp"
#include "atomkit/dfa_text.hpp"
#include "atomkit/error.hpp"
#include "atomkit/intervals.hpp"
#include "atomkit/report.hpp"
#include "atomkit/search.hpp"
#include "atomkit/semigroup.hpp"

using namespace atomkit;
using nlohmann::json;

namespace {

struct Settings {
  std::string format = "table";
  std::size_t max_degree = 12;
  std::uint64_t max_elements = 100'000'000;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  std::size_t max_n = 4;
  std::uint64_t max_dfas = 300'000'000;

  bool json() const { return format == "json"; }

  SemigroupOptions semigroup() const {
    SemigroupOptions o;
    o.max_degree = max_degree;
    o.max_elements = max_elements;
    return o;
  }
};

std::string read_input(std::string const& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

Dfa load(std::string const& path) { return parse_dfa(read_input(path)); }

Dfa minimal_of(Dfa const& d) { return is_minimal(d) ? d : minimize(d); }

std::string utc_now() {
  std::time_t const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct CampaignArgs {
  std::size_t n = 3;
  std::size_t k = 3;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::optional<std::string> timestamp;
  std::string log;
};

void add_campaign_options(CLI::App* cmd, CampaignArgs& args, Settings& settings) {
  cmd->add_option("--n", args.n, "Number of states")->required();
  cmd->add_option("--k", args.k, "Alphabet size")->required();
  auto* ex = cmd->add_flag("--exhaustive", args.exhaustive, "Enumerate every DFA");
  cmd->add_option("--samples", args.samples, "Number of random DFAs")->excludes(ex);
  cmd->add_option("--seed", settings.seed, "Sampling seed")->envname("ATOMKIT_SEED");
  cmd->add_option("--timestamp", args.timestamp,
                  "Timestamp stored in records (default: now, UTC)");
  cmd->add_option("--log", args.log, "Append the JSONL campaign log to this file");
}

void run_campaign(CampaignReport (*campaign)(CampaignConfig const&), CampaignArgs const& args,
                  Settings const& settings) {
  CampaignConfig config;
  config.n = args.n;
  config.k = args.k;
  config.mode = args.samples > 0 && !args.exhaustive ? CampaignMode::sample
                                                     : CampaignMode::exhaustive;
  config.samples = args.samples;
  config.seed = settings.seed;
  config.workers = settings.workers;
  config.caps.max_n = settings.max_n;
  config.caps.max_dfas = settings.max_dfas;
  config.timestamp = args.timestamp ? *args.timestamp : utc_now();
  CampaignReport const report = campaign(config);
  std::string const jsonl = to_jsonl(report);
  if (!args.log.empty()) {
    std::ofstream out(args.log, std::ios::app);
    if (!out) {
      throw Error("cannot write '" + args.log + "'");
    }
    out << jsonl;
  }
  if (settings.json()) {
    std::cout << jsonl;
    return;
  }
  std::cout << render(report.summary);
  for (auto const& r : report.records) {
    std::cout << "\n" << r.kind << ": syntactic complexity " << r.syntactic_complexity
              << ", " << r.atom_count << " atoms\n"
              << r.dfa;
  }
}

void print_json(json const& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atoms, átomata and syntactic semigroups of regular languages"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->envname("ATOMKIT_FORMAT");
  app.add_option("--max-degree", settings.max_degree, "Largest DFA size for semigroup closure")
      ->envname("ATOMKIT_MAX_DEGREE");
  app.add_option("--max-elements", settings.max_elements, "Largest semigroup to enumerate")
      ->envname("ATOMKIT_MAX_ELEMENTS");
  app.add_option("--workers", settings.workers, "Campaign worker threads")
      ->check(CLI::PositiveNumber)
      ->envname("ATOMKIT_WORKERS");
  app.add_option("--max-n", settings.max_n, "Largest n for exhaustive enumeration")
      ->envname("ATOMKIT_MAX_N");
  app.add_option("--max-dfas", settings.max_dfas, "Largest exhaustive enumeration")
      ->envname("ATOMKIT_MAX_DFAS");

  std::function<void()> action;
  std::string file;

  bool tables = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Quotients, semigroup and atoms of a DFA");
  analyze_cmd->add_option("file", file, "DFA document, - for stdin")->required();
  analyze_cmd->add_flag("--tables", tables, "Also print D, D^R, D^RD and the átomaton");
  analyze_cmd->callback([&] {
    action = [&] {
      AnalysisReport const r = analyze(load(file), tables, settings.semigroup());
      if (settings.json()) {
        print_json(r);
      } else {
        std::cout << render(r);
      }
    };
  });

  bool show_witnesses = false;
  auto* semigroup_cmd = app.add_subcommand("semigroup", "Transition semigroup of the minimal DFA");
  semigroup_cmd->add_option("file", file, "DFA document, - for stdin")->required();
  semigroup_cmd->add_flag("--witnesses", show_witnesses, "List a shortest word per element");
  semigroup_cmd->callback([&] {
    action = [&] {
      Dfa const d = load(file);
      SemigroupSummary const s = summarize_semigroup(d, settings.semigroup());
      std::vector<WordWitness> ws;
      Dfa const m = minimal_of(d);
      if (show_witnesses) {
        ws = witnesses(transition_semigroup(m, settings.semigroup()));
      }
      if (settings.json()) {
        json j = s;
        if (show_witnesses) {
          j["witnesses"] = json::array();
          for (auto const& w : ws) {
            j["witnesses"].push_back(
                {{"transformation", w.transformation.map()},
                 {"word", format_word(m.alphabet(), w.word)}});
          }
        }
        print_json(j);
        return;
      }
      std::cout << render(s);
      for (auto const& w : ws) {
        std::cout << to_string(w.transformation) << "  " << format_word(m.alphabet(), w.word)
                  << "\n";
      }
    };
  });

  std::optional<std::string> atom;
  auto* atoms_cmd = app.add_subcommand("atoms", "Atoms and their quotient complexities");
  atoms_cmd->add_option("file", file, "DFA document, - for stdin")->required();
  atoms_cmd->add_option("--atom", atom, "Print the minimal DFA of this atom (e.g. 02, Φ)");
  atoms_cmd->callback([&] {
    action = [&] {
      Atomaton const a = build_atomaton(load(file));
      if (atom) {
        StateSet const label = parse_set(*atom, a.quotient_count());
        Dfa const m = atom_dfa(a, label).dfa;
        if (settings.json()) {
          print_json({{"label", format_set(label, "Φ")}, {"dfa", serialize_dfa(m)}});
        } else {
          std::cout << serialize_dfa(m);
        }
        return;
      }
      auto const reports = atoms_of(a);
      if (settings.json()) {
        print_json(reports);
      } else {
        std::cout << render_atoms(reports);
      }
    };
  });

  auto* atomaton_cmd = app.add_subcommand("atomaton", "Transition table of the átomaton");
  atomaton_cmd->add_option("file", file, "DFA document, - for stdin")->required();
  atomaton_cmd->callback([&] {
    action = [&] {
      TransitionTable const t = atomaton_table(build_atomaton(load(file)));
      if (settings.json()) {
        print_json(t);
      } else {
        std::cout << render(t);
      }
    };
  });

  std::uint64_t bounds_n = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Maximal atom complexities f(n, r)");
  bounds_cmd->add_option("n", bounds_n, "Number of quotients")->required();
  bounds_cmd->callback([&] {
    action = [&] {
      json rows = json::array();
      for (std::uint64_t r = 0; r <= bounds_n; ++r) {
        rows.push_back({{"r", r}, {"bound", max_atom_complexity(bounds_n, r)}});
      }
      MaxOverR const best = max_over_r(bounds_n);
      if (settings.json()) {
        print_json({{"n", bounds_n}, {"rows", rows}, {"max", best.value}, {"argmax_r", best.r}});
        return;
      }
      std::cout << "r  bound\n";
      for (auto const& row : rows) {
        std::cout << row["r"].get<std::uint64_t>() << "  " << row["bound"].get<std::uint64_t>()
                  << "\n";
      }
      std::cout << "max " << best.value << " at r=" << best.r << "\n";
    };
  });

  std::string interval_atom;
  auto* intervals_cmd = app.add_subcommand("intervals", "Interval reachability from an atom");
  intervals_cmd->add_option("file", file, "DFA document, - for stdin")->required();
  intervals_cmd->add_option("--atom", interval_atom, "Atom label, e.g. 02")->required();
  intervals_cmd->callback([&] {
    action = [&] {
      Dfa const m = minimal_of(load(file));
      StateSet const label = parse_set(interval_atom, m.size());
      IntervalReach const reach = IntervalCalculus(m, settings.semigroup()).reach(label);
      auto const types = reach.types();
      if (settings.json()) {
        json t = json::array();
        for (auto const& [v, u] : types) {
          t.push_back({v, u});
        }
        print_json({{"label", format_set(label, "Φ")},
                    {"reach_count", reach.count()},
                    {"sink_reached", reach.sink_reached},
                    {"types", t}});
        return;
      }
      std::cout << "atom: " << format_set(label, "Φ") << "\n";
      std::cout << "reach count: " << reach.count() << "\n";
      std::cout << "empty interval reached: " << (reach.sink_reached ? "yes" : "no") << "\n";
      std::cout << "types:";
      for (auto const& [v, u] : types) {
        std::cout << " (" << v << "," << u << ")";
      }
      std::cout << "\n";
    };
  });

  CampaignArgs campaign_args;
  std::string property;
  auto* verify_cmd = app.add_subcommand("verify", "Check a property over enumerated or sampled DFAs");
  verify_cmd->add_option("property", property, "theorem3, prop1 or prop2")
      ->required()
      ->check(CLI::IsMember({"theorem3", "prop1", "prop2"}));
  add_campaign_options(verify_cmd, campaign_args, settings);
  verify_cmd->callback([&] {
    action = [&] {
      auto* campaign = property == "theorem3" ? &verify_theorem3
                       : property == "prop1"  ? &verify_prop1
                                              : &verify_prop2;
      run_campaign(campaign, campaign_args, settings);
    };
  });

  std::string target;
  auto* search_cmd = app.add_subcommand("search", "Look for counterexamples");
  search_cmd->add_option("target", target, "converse")
      ->required()
      ->check(CLI::IsMember({"converse"}));
  add_campaign_options(search_cmd, campaign_args, settings);
  search_cmd->callback([&] {
    action = [&] { run_campaign(&find_converse_counterexamples, campaign_args, settings); };
  });

  std::string witness;
  std::size_t witness_n = 0;
  auto* witness_cmd = app.add_subcommand("witness", "Print a named DFA");
  witness_cmd->add_option("name", witness, "max-semigroup or example1")
      ->required()
      ->check(CLI::IsMember({"max-semigroup", "example1"}));
  auto* witness_n_opt = witness_cmd->add_option("--n", witness_n, "Number of states");
  witness_cmd->callback([&] {
    action = [&] {
      if (witness == "max-semigroup" && witness_n_opt->count() == 0) {
        throw Error("witness max-semigroup needs --n");
      }
      Dfa const d = witness == "example1" ? example1() : witness_max_semigroup(witness_n);
      if (settings.json()) {
        print_json({{"dfa", serialize_dfa(d)}});
      } else {
        std::cout << serialize_dfa(d);
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e);
  }
  try {
    action();
  } catch (ParseError const& e) {
    std::cerr << "atomkit: " << file << ": " << e.what() << "\n";
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "atomkit: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
