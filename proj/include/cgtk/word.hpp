#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cgtk {

using GenIndex = std::uint32_t;

/// Ordered list of distinct generator names. Index assignment is stable.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_.size(); }
  const std::string& name(GenIndex g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<GenIndex> find(std::string_view name) const;
  /// Throws UnknownGenerator.
  GenIndex index_of(std::string_view name) const;
  /// Appends a fresh name; throws LetterClash if already present.
  GenIndex add(std::string name);

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, GenIndex> index_;
};

/// Signed generator, packed as 2*gen + (inverse ? 1 : 0).
/// The packing fixes the letter order x < x^-1 < y < y^-1 used for every
/// lexicographic comparison in the library.
class Letter {
public:
  constexpr Letter() = default;
  static constexpr Letter pos(GenIndex g) { return Letter(2 * g); }
  static constexpr Letter neg(GenIndex g) { return Letter(2 * g + 1); }
  static constexpr Letter from_code(std::uint32_t code) { return Letter(code); }

  constexpr GenIndex gen() const { return code_ >> 1; }
  constexpr bool positive() const { return (code_ & 1U) == 0; }
  constexpr int sign() const { return positive() ? 1 : -1; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1U); }
  constexpr std::uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

private:
  constexpr explicit Letter(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// Sequence of signed letters. Every constructor except `unreduced` performs
/// free reduction, so a Word is reduced unless explicitly built otherwise.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  /// Keeps the letters verbatim; the reduced flag is computed, not assumed.
  static Word unreduced(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_reduced() const { return reduced_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Letters [pos, pos+len) as a word (reduced iff this is).
  Word subword(std::size_t pos, std::size_t len) const;
  /// Highest generator index used plus one (0 for the empty word).
  std::size_t generator_bound() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

private:
  std::vector<Letter> letters_;
  bool reduced_ = true;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word reduce(const Word& w);
Word invert(const Word& w);
/// Product followed by free reduction.
Word operator*(const Word& a, const Word& b);
Word power(const Word& w, std::int64_t k);
/// Left rotation by k letters: letters [k..n) then [0..k).
Word rotate(const Word& w, std::size_t k);

bool is_cyclically_reduced(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;  ///< stripped prefix p with w = p * core * p^-1
};

CyclicReduction cyclic_reduce(const Word& w);

/// Offset of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation_offset(std::span<const Letter> w);
Word least_rotation(const Word& w);
/// Smallest p > 0 with rotate(w, p) == w; equals size() for primitive words.
std::size_t rotation_period(const Word& w);

/// Shortest r with w = r^k as letter sequences.
Word primitive_root(const Word& w);

/// Free-group conjugacy: the cyclically reduced cores are rotations of each other.
bool conjugacy_equal(const Word& u, const Word& v);

/// If u is conjugate to v in the free group, returns c with c^-1 * u * c == v.
std::optional<Word> conjugator_between(const Word& u, const Word& v);

std::int64_t exponent_sum(const Word& w, GenIndex g);

// Text syntax: whitespace-separated tokens `name` or `name^k`; "1" alone is
// the empty word.

Word parse_word(std::string_view text, const Alphabet& alphabet);
/// Like parse_word but appends unseen generator names to the alphabet.
Word parse_word_extending(std::string_view text, Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace cgtk
