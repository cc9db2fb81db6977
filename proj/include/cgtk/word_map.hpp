#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cgtk/word.hpp"

namespace cgtk {

/// Endomorphism of a free group given by generator images.
class WordMap {
public:
  /// Throws InvalidSpec if the image count does not match the alphabet, and
  /// NotInvolution if `involution` is requested but map(map(g)) != g.
  WordMap(Alphabet alphabet, std::vector<Word> images, bool involution = false);

  static WordMap identity(const Alphabet& alphabet);
  /// Involution exchanging each listed pair of generators, fixing the rest.
  static WordMap swapping(const Alphabet& alphabet,
                          const std::vector<std::pair<std::string, std::string>>& pairs);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& image(GenIndex g) const { return images_.at(g); }
  const std::vector<Word>& images() const { return images_; }
  bool involution_flag() const { return involution_; }

  /// map(map(g)) == g for every generator.
  bool is_involution() const;

private:
  Alphabet alphabet_;
  std::vector<Word> images_;
  bool involution_ = false;
};

/// Letterwise substitution then free reduction. Throws UnknownGenerator.
Word apply_map(const WordMap& m, const Word& w);

/// The two-letter alphabet {X, Y} used for formal family words.
const Alphabet& formal_alphabet();
inline constexpr GenIndex kFormalX = 0;
inline constexpr GenIndex kFormalY = 1;

/// r(a, b): X -> a, Y -> b. Throws UnknownGenerator if r leaves {X, Y}.
Word substitute(const Word& r, const Word& a, const Word& b);

}  // namespace cgtk
