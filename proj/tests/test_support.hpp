#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "cgtk/word.hpp"

namespace cgtk::testing {

inline Word random_reduced_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len,
                                std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::uint32_t> code_dist(0, static_cast<std::uint32_t>(2 * gens - 1));
  const std::size_t len = len_dist(rng);
  std::vector<Letter> out;
  while (out.size() < len) {
    const Letter l = Letter::from_code(code_dist(rng));
    if (!out.empty() && out.back() == l.inverse()) continue;
    out.push_back(l);
  }
  return Word(std::move(out));
}

/// Random letter sequence with no reduction applied.
inline Word random_raw_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::uint32_t> code_dist(0, static_cast<std::uint32_t>(2 * gens - 1));
  std::vector<Letter> out(len_dist(rng));
  for (auto& l : out) l = Letter::from_code(code_dist(rng));
  return Word::unreduced(std::move(out));
}

inline Word random_cyclically_reduced(std::mt19937_64& rng, std::size_t gens, std::size_t max_len,
                                      std::size_t min_len = 1) {
  for (;;) {
    Word w = random_reduced_word(rng, gens, max_len, min_len);
    if (!w.empty() && is_cyclically_reduced(w)) return w;
  }
}

}  // namespace cgtk::testing
