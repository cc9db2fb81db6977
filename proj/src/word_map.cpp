#include "cgtk/word_map.hpp"

#include "cgtk/error.hpp"

namespace cgtk {

WordMap::WordMap(Alphabet alphabet, std::vector<Word> images, bool involution)
    : alphabet_(std::move(alphabet)), images_(std::move(images)), involution_(involution) {
  if (images_.size() != alphabet_.size())
    throw Error(ErrorCode::InvalidSpec, "map needs one image per generator");
  for (auto& img : images_) {
    img = reduce(img);
    if (img.generator_bound() > alphabet_.size())
      throw Error(ErrorCode::UnknownGenerator, "image leaves the alphabet");
  }
  if (involution_ && !is_involution()) throw Error(ErrorCode::NotInvolution, "map(map(g)) != g");
}

WordMap WordMap::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (GenIndex g = 0; g < alphabet.size(); ++g) images.push_back(Word{Letter::pos(g)});
  return WordMap(alphabet, std::move(images), true);
}

WordMap WordMap::swapping(const Alphabet& alphabet,
                          const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Word> images;
  for (GenIndex g = 0; g < alphabet.size(); ++g) images.push_back(Word{Letter::pos(g)});
  for (const auto& [a, b] : pairs) {
    const GenIndex ga = alphabet.index_of(a);
    const GenIndex gb = alphabet.index_of(b);
    images[ga] = Word{Letter::pos(gb)};
    images[gb] = Word{Letter::pos(ga)};
  }
  return WordMap(alphabet, std::move(images), true);
}

bool WordMap::is_involution() const {
  for (GenIndex g = 0; g < alphabet_.size(); ++g)
    if (apply_map(*this, images_[g]) != Word{Letter::pos(g)}) return false;
  return true;
}

Word apply_map(const WordMap& m, const Word& w) {
  std::vector<Letter> out;
  for (Letter l : w) {
    if (l.gen() >= m.alphabet().size())
      throw Error(ErrorCode::UnknownGenerator, "letter outside the map's alphabet");
    const Word& img = m.image(l.gen());
    if (l.positive()) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(it->inverse());
    }
  }
  return Word(std::move(out));
}

const Alphabet& formal_alphabet() {
  static const Alphabet xy{"X", "Y"};
  return xy;
}

Word substitute(const Word& r, const Word& a, const Word& b) {
  std::vector<Letter> out;
  const Word ra = reduce(a);
  const Word rb = reduce(b);
  const Word ia = invert(ra);
  const Word ib = invert(rb);
  for (Letter l : r) {
    if (l.gen() > kFormalY) throw Error(ErrorCode::UnknownGenerator, "substitution word must use only X, Y");
    const Word& img = l.gen() == kFormalX ? (l.positive() ? ra : ia) : (l.positive() ? rb : ib);
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out));
}

}  // namespace cgtk
