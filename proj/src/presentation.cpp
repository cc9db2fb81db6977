#include "cgtk/presentation.hpp"

#include <optional>
#include <sstream>
#include <string>

#include "cgtk/cancellation.hpp"
#include "cgtk/error.hpp"

namespace cgtk {

namespace detail {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::pair<std::string, std::string> split_directive(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return {std::string(), trim(line)};
  return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

Presentation make_presentation(Alphabet alphabet, const std::vector<Word>& seeds) {
  Presentation p;
  p.relators = symmetrize(alphabet, seeds);
  p.alphabet = std::move(alphabet);
  p.c16_certified = metric_condition(p.relators, Rational(1, 6));
  return p;
}

Presentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<Word> seeds;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto [key, value] = detail::split_directive(line);
    if (key.empty() && value.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (key == "gens") {
      if (alphabet) throw Error(ErrorCode::Parse, where + "duplicate 'gens'");
      alphabet = Alphabet(detail::split_ws(value));
      if (alphabet->size() == 0) throw Error(ErrorCode::Parse, where + "empty generator list");
    } else if (key == "rel") {
      if (!alphabet) throw Error(ErrorCode::Parse, where + "'rel' before 'gens'");
      seeds.push_back(parse_word(value, *alphabet));
    } else {
      throw Error(ErrorCode::Parse, where + "unknown directive '" + key + "'");
    }
  }
  if (!alphabet) throw Error(ErrorCode::Parse, "missing 'gens' line");
  return make_presentation(std::move(*alphabet), seeds);
}

}  // namespace cgtk
