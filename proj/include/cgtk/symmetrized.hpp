#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "cgtk/word.hpp"

namespace cgtk {

/// One cyclic word of a symmetrized set, stored by its least rotation.
struct CyclicRelator {
  Word word;
  std::size_t period = 0;   ///< number of distinct rotations
  std::size_t seed = 0;     ///< first seed producing this cyclic word
  bool inverted = false;    ///< orientation relative to that seed
  std::size_t partner = 0;  ///< index of the inverse cyclic word
};

/// A closure member: rotation `offset` (< period) of relator `relator`.
struct MemberRef {
  std::size_t relator = 0;
  std::size_t offset = 0;
};

/// Relator set closed under inversion and cyclic permutation. The closure is
/// kept implicit (cyclic words plus rotation offsets) so that long relators
/// do not cost quadratic memory; members are distinct as letter sequences.
class SymmetrizedSet {
public:
  SymmetrizedSet() = default;

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& seeds() const { return seeds_; }
  const std::vector<CyclicRelator>& relators() const { return relators_; }
  /// One relator index per inverse pair, in seed orientation.
  const std::vector<std::size_t>& primary() const { return primary_; }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const MemberRef& member(std::size_t i) const { return members_[i]; }
  const std::vector<MemberRef>& members() const { return members_; }
  Word member_word(std::size_t i) const;
  Word member_word(const MemberRef& m) const;
  /// Index of the closure member equal to rotation `offset` of relator r.
  std::size_t member_index(std::size_t relator, std::size_t offset) const;

  /// All members, materialized and sorted.
  std::vector<Word> closure() const;
  bool contains(const Word& w) const;
  std::size_t min_length() const;
  std::size_t max_length() const;

  friend bool same_closure(const SymmetrizedSet& a, const SymmetrizedSet& b);
  friend SymmetrizedSet symmetrize(const Alphabet& alphabet, std::span<const Word> seeds);

private:
  Alphabet alphabet_;
  std::vector<Word> seeds_;
  std::vector<CyclicRelator> relators_;
  std::vector<std::size_t> primary_;
  std::vector<MemberRef> members_;
  std::vector<std::size_t> first_member_;
  std::unordered_map<Word, std::size_t, WordHash> by_canonical_;
};

/// Throws EmptyRelator when a seed reduces to the empty word.
SymmetrizedSet symmetrize(const Alphabet& alphabet, std::span<const Word> seeds);

}  // namespace cgtk
