#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgtk/rational.hpp"
#include "cgtk/symmetrized.hpp"
#include "cgtk/word.hpp"

namespace cgtk {

/// A language of words that relators must overlap only briefly.
class KDescriptor {
public:
  enum class Kind { FiniteList, SubAlphabet, CyclicPowers };

  /// Subwords of the listed words and of their inverses.
  static KDescriptor finite_list(std::vector<Word> words);
  /// All reduced words over the given generators.
  static KDescriptor sub_alphabet(std::vector<GenIndex> generators);
  /// Subwords of reduce(w^k), k an integer.
  static KDescriptor cyclic_powers(Word w);

  Kind kind() const { return kind_; }
  const std::vector<Word>& words() const { return words_; }
  const std::vector<GenIndex>& generators() const { return generators_; }

  /// Membership of u in the (subword-closed) language.
  bool contains(const Word& u) const;
  std::string describe(const Alphabet& alphabet) const;

private:
  Kind kind_ = Kind::FiniteList;
  std::vector<Word> words_;  // list words, or the single CyclicPowers base
  std::vector<GenIndex> generators_;
};

/// U is a common prefix of closure members `host` and `other` (distinct).
struct PieceWitness {
  std::size_t host = 0;
  std::size_t other = 0;
  std::size_t length = 0;
};

/// Disjoint arcs [first, first+length) and [second, second+length) of a
/// cyclic relator whose labels are equal (or mutually inverse).
struct SelfPieceWitness {
  std::size_t relator = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t length = 0;
  bool inverse = false;
};

/// Arc [offset, offset+length) of a cyclic relator lying in a K language.
struct KPieceWitness {
  std::size_t relator = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t descriptor = 0;
};

/// Per primary relator (one row per inverse pair); maxima range over every
/// rotation of the relator and of its inverse.
struct RelatorReport {
  std::size_t relator = 0;
  std::size_t length = 0;
  std::optional<std::size_t> max_piece;
  std::optional<PieceWitness> piece_witness;
  std::optional<std::size_t> max_self_piece;
  std::optional<SelfPieceWitness> self_witness;
  std::vector<std::size_t> max_k_piece;
  std::vector<std::optional<KPieceWitness>> k_witness;
};

struct PieceReport {
  std::vector<RelatorReport> rows;
  /// Longest piece per closure member (indexed like SymmetrizedSet::members()).
  std::vector<std::size_t> member_max_piece;

  std::size_t max_piece() const;
  std::size_t max_self_piece() const;
};

PieceReport enumerate_pieces(const SymmetrizedSet& rset);
PieceReport enumerate_self_pieces(const SymmetrizedSet& rset);
PieceReport enumerate_k_pieces(const SymmetrizedSet& rset, const KDescriptor& k);
/// Pieces, self-pieces and every K descriptor in one report.
PieceReport analyze_pieces(const SymmetrizedSet& rset, std::span<const KDescriptor> ks);

bool replay(const SymmetrizedSet& rset, const PieceWitness& w);
bool replay(const SymmetrizedSet& rset, const SelfPieceWitness& w);
bool replay(const SymmetrizedSet& rset, const KPieceWitness& w, const KDescriptor& k);

/// mu in (0,1), rho >= 1. Epsilon = 0, lambda = 1, c = 0 are fixed.
struct CancellationParams {
  Rational mu;
  std::size_t rho = 1;

  void validate() const;
};

enum class ConditionItem { LongWords, Quasigeodesic, Pieces, KPieces, SelfPieces };
std::string_view to_string(ConditionItem item);

struct Violation {
  ConditionItem item = ConditionItem::LongWords;
  std::size_t relator = 0;
  std::size_t length = 0;  ///< offending piece length, or relator length for LongWords
  std::optional<PieceWitness> piece;
  std::optional<SelfPieceWitness> self_piece;
  std::optional<KPieceWitness> k_piece;
};

struct ConditionVerdict {
  bool long_words = true;
  /// Reduced words are geodesic in a free group, so this item always holds.
  bool quasigeodesic = true;
  bool pieces = true;
  bool k_pieces = true;
  bool self_pieces = true;
  std::vector<Violation> violations;
  PieceReport report;

  bool pass() const { return long_words && quasigeodesic && pieces && k_pieces && self_pieces; }
};

ConditionVerdict check_condition(const SymmetrizedSet& rset, const CancellationParams& params,
                                 std::span<const KDescriptor> ks = {});

/// Classical C'(lambda): every piece U of every R has |U| < lambda |R|.
bool metric_condition(const SymmetrizedSet& rset, const Rational& lambda);

}  // namespace cgtk
