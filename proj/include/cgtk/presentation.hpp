#pragma once

#include <string_view>
#include <vector>

#include "cgtk/symmetrized.hpp"
#include "cgtk/word.hpp"

namespace cgtk {

/// Finite presentation over a free background.
struct Presentation {
  Alphabet alphabet;
  SymmetrizedSet relators;
  /// metric_condition(relators, 1/6); Dehn's algorithm is complete when set.
  bool c16_certified = false;
};

/// Symmetrizes the seeds and evaluates the C'(1/6) flag. Empty seeds give
/// the free group on the alphabet.
Presentation make_presentation(Alphabet alphabet, const std::vector<Word>& seeds);

/// Text format, '#' starts a comment:
///   gens: a b c d
///   rel: a b a^-1 b^-1 c d c^-1 d^-1
/// Throws Parse, UnknownGenerator, EmptyRelator.
Presentation parse_presentation(std::string_view text);

namespace detail {

/// Splits `line` at the first ':' into a trimmed (key, value) pair; the key
/// is empty for lines without a colon. Comments are stripped first.
std::pair<std::string, std::string> split_directive(std::string_view line);
std::vector<std::string> split_ws(std::string_view text);

}  // namespace detail

}  // namespace cgtk
