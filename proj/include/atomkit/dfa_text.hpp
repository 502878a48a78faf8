#pragma once

#include <string>
#include <string_view>

#include "atomkit/automata.hpp"

namespace atomkit {

/// Line-oriented DFA document:
///
///   # comment
///   states: 3
///   alphabet: a b c d
///   initial: 0
///   final: 2
///   a: 1 0 2
///   b: 0 2 1
///   c: 0 1 0
///   d: 1 1 1
///
/// `states` and `alphabet` must precede the letter rows; `final` may be empty.
/// Errors are reported as ParseError with 1-based line and column.
Dfa parse_dfa(std::string_view text);

/// Canonical form of the document above, newline-terminated.
std::string serialize_dfa(Dfa const& d);

}  // namespace atomkit
