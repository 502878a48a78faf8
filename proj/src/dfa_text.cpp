#include "atomkit/dfa_text.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "atomkit/error.hpp"

namespace atomkit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Token> split(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) {
      ++j;
    }
    if (j > i) {
      out.push_back({line.substr(i, j - i), offset + i + 1});
    }
    i = j;
  }
  return out;
}

bool is_reserved(std::string_view name) {
  return name == "states" || name == "alphabet" || name == "initial" || name == "final";
}

class Parser {
 public:
  Dfa parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size() || (start == text.size() && !text.ends_with('\n'))) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      line(line_no, text.substr(start, end - start));
      start = end + 1;
    }
    return finish(line_no + 1);
  }

 private:
  void line(std::size_t line_no, std::string_view raw) {
    line_no_ = line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    auto tokens = split(raw, 0);
    if (tokens.empty()) {
      return;
    }
    auto const colon = raw.find(':');
    if (colon == std::string_view::npos) {
      fail(tokens.front().column, "expected 'key: values'");
    }
    auto key_tokens = split(raw.substr(0, colon), 0);
    if (key_tokens.size() != 1) {
      fail(key_tokens.empty() ? colon + 1 : key_tokens.back().column,
           "expected a single key before ':'");
    }
    Token const key = key_tokens.front();
    auto values = split(raw.substr(colon + 1), colon + 1);

    if (key.text == "states") {
      once(seen_states_, key);
      if (values.size() != 1) {
        fail(colon + 2, "'states' takes exactly one number");
      }
      n_ = number(values[0], "a state count");
      if (n_ == 0) {
        fail(values[0].column, "a DFA needs at least one state");
      }
    } else if (key.text == "alphabet") {
      once(seen_alphabet_, key);
      if (values.empty()) {
        fail(colon + 2, "the alphabet must not be empty");
      }
      for (auto const& v : values) {
        if (is_reserved(v.text)) {
          fail(v.column, "'" + std::string(v.text) + "' is reserved and cannot be a letter");
        }
        if (std::find(alphabet_.begin(), alphabet_.end(), v.text) != alphabet_.end()) {
          fail(v.column, "duplicate letter '" + std::string(v.text) + "'");
        }
        alphabet_.emplace_back(v.text);
      }
      rows_.assign(alphabet_.size(), std::nullopt);
    } else if (key.text == "initial") {
      once(seen_initial_, key);
      need_states(key);
      if (values.size() != 1) {
        fail(colon + 2, "'initial' takes exactly one state");
      }
      initial_ = state(values[0]);
    } else if (key.text == "final") {
      once(seen_final_, key);
      need_states(key);
      finals_ = StateSet(n_);
      for (auto const& v : values) {
        State const q = state(v);
        if (finals_.contains(q)) {
          fail(v.column, "duplicate final state " + std::to_string(q));
        }
        finals_.insert(q);
      }
    } else {
      need_states(key);
      if (!seen_alphabet_) {
        fail(key.column, "letter row before the 'alphabet' section");
      }
      auto it = std::find(alphabet_.begin(), alphabet_.end(), key.text);
      if (it == alphabet_.end()) {
        fail(key.column, "unknown letter '" + std::string(key.text) + "'");
      }
      auto& row = rows_[static_cast<std::size_t>(it - alphabet_.begin())];
      if (row) {
        fail(key.column, "duplicate row for letter '" + std::string(key.text) + "'");
      }
      if (values.size() != n_) {
        fail(values.size() > n_ ? values[n_].column : raw.size() + 1,
             "row for letter '" + std::string(key.text) + "' has " +
                 std::to_string(values.size()) + " entries, expected " +
                 std::to_string(n_));
      }
      std::vector<State> map;
      map.reserve(n_);
      for (auto const& v : values) {
        map.push_back(state(v));
      }
      row = std::move(map);
    }
  }

  Dfa finish(std::size_t eof_line) {
    line_no_ = eof_line;
    auto missing = [&](bool seen, char const* name) {
      if (!seen) {
        fail(1, std::string("missing section '") + name + "'");
      }
    };
    missing(seen_states_, "states");
    missing(seen_alphabet_, "alphabet");
    missing(seen_initial_, "initial");
    missing(seen_final_, "final");
    std::vector<Transformation> delta;
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      if (!rows_[a]) {
        fail(1, "missing row for letter '" + alphabet_[a] + "'");
      }
      delta.emplace_back(std::move(*rows_[a]));
    }
    return Dfa(std::move(alphabet_), std::move(delta), initial_, std::move(finals_));
  }

  [[noreturn]] void fail(std::size_t column, std::string const& message) const {
    throw ParseError(line_no_, column, message);
  }

  void once(bool& seen, Token const& key) {
    if (seen) {
      fail(key.column, "duplicate section '" + std::string(key.text) + "'");
    }
    seen = true;
  }

  void need_states(Token const& key) {
    if (!seen_states_) {
      fail(key.column, "'" + std::string(key.text) + "' before the 'states' section");
    }
  }

  std::size_t number(Token const& t, char const* what) const {
    std::size_t value = 0;
    auto const* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      fail(t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
    }
    return value;
  }

  State state(Token const& t) const {
    std::size_t const q = number(t, "a state index");
    if (q >= n_) {
      fail(t.column, "state " + std::to_string(q) + " out of range (states: " +
                         std::to_string(n_) + ")");
    }
    return static_cast<State>(q);
  }

  std::size_t line_no_ = 0;
  bool seen_states_ = false;
  bool seen_alphabet_ = false;
  bool seen_initial_ = false;
  bool seen_final_ = false;
  std::size_t n_ = 0;
  std::vector<std::string> alphabet_;
  State initial_ = 0;
  StateSet finals_;
  std::vector<std::optional<std::vector<State>>> rows_;
};

}  // namespace

Dfa parse_dfa(std::string_view text) { return Parser().parse(text); }

std::string serialize_dfa(Dfa const& d) {
  std::string out = "states: " + std::to_string(d.size()) + "\nalphabet:";
  for (auto const& letter : d.alphabet()) {
    out += " " + letter;
  }
  out += "\ninitial: " + std::to_string(d.initial()) + "\nfinal:";
  d.finals().for_each([&](State q) { out += " " + std::to_string(q); });
  out += "\n";
  for (Letter a = 0; a < d.alphabet_size(); ++a) {
    out += d.alphabet()[a] + ":";
    for (State v : d.delta(a).map()) {
      out += " " + std::to_string(v);
    }
    out += "\n";
  }
  return out;
}

}  // namespace atomkit
