#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgtk/presentation.hpp"
#include "cgtk/word.hpp"
#include "cgtk/word_map.hpp"

namespace cgtk {

/// letter^-1 * g * letter = w. g and w are reduced base words kept as given;
/// only their cyclic cores are required to be nonempty.
struct Association {
  Word g;
  Word w;
  GenIndex letter = 0;
};

struct AssociationSpec {
  Word g;
  Word w;
  std::string letter;
};

struct HnnPresentation {
  Presentation base;
  /// Base generators first, then the stable letters in declaration order.
  Alphabet alphabet;
  std::vector<GenIndex> stable_letters;
  std::vector<Association> associations;

  bool is_stable(GenIndex g) const { return g >= base.alphabet.size(); }
  const Association& association_for(GenIndex letter) const;
  /// Base relators followed by letter^-1 g letter w^-1 per association.
  std::vector<Word> induced_relators() const;
};

/// One association per stable letter. Throws LetterClash, EmptyAssociation,
/// UnknownGenerator.
HnnPresentation build_hnn(const Presentation& base, const std::vector<AssociationSpec>& pairs);

/// Presentation file plus `stable: s t` and `assoc: s | <g> -> <w>` lines.
HnnPresentation parse_hnn(std::string_view text);
std::string format_hnn(const HnnPresentation& h);

/// If u = p c^k p^-1 where g = p c p^-1 with c cyclically reduced, returns k.
std::optional<std::int64_t> cyclic_exponent(const Word& u, const Word& g);

/// Count of stable letters in w.
std::size_t stable_count(const HnnPresentation& h, const Word& w);

/// Removes pinches leftmost-innermost first: s^-1 u s with u in <g> becomes
/// w^k, and s u s^-1 with u in <w> becomes g^k. Throws BaseNotFree.
Word britton_reduce(const HnnPresentation& h, const Word& w);

/// Extends a base involution by the stable-letter swaps and checks that the
/// associations are carried onto one another. Throws NotInvolution,
/// IncompatibleAssociations, InvalidSpec.
WordMap extend_involution(const HnnPresentation& h, const WordMap& phi,
                          const std::vector<std::pair<std::string, std::string>>& swaps);

struct HexagonVerdict {
  bool holds = true;
  /// On violation: c with c^-1 xi c = phi(xi').
  std::optional<Word> conjugator;
};

/// Free-base hexagon test for the pair (xi, xi'). xi and xi' must be words
/// over xSub, and phi must carry xSub to a disjoint set of generators.
/// Throws SupportViolation.
HexagonVerdict hexagon_check_free(const Word& xi, const Word& xi_prime, const WordMap& phi,
                                  const std::vector<GenIndex>& x_sub);

/// c^-1 u^m c = v^n with m > 0 and n != 0.
struct PowerConjugacy {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Word conjugator;
};

/// Whether nontrivial powers of u and v are conjugate in the free group.
std::optional<PowerConjugacy> powers_conjugate(const Word& u, const Word& v);
bool replay(const Word& u, const Word& v, const PowerConjugacy& witness);

/// Edge group index: 2*a is <g_a>, 2*a+1 is <w_a>.
struct AcylindricityEntry {
  std::size_t x = 0;
  std::size_t y = 0;
  bool violation = false;
  std::optional<PowerConjugacy> witness;
  /// x == y and the generator is a proper power, so its normalizer escapes it.
  std::optional<Word> root;
};

struct AcylindricityReport {
  std::vector<AcylindricityEntry> entries;
  bool holds() const;
};

Word edge_generator(const HnnPresentation& h, std::size_t edge);

/// For each w-side edge group X and every edge group Y, tests whether a
/// nontrivial element of X is conjugate into Y (X != Y), or whether X fails
/// to be malnormal (X == Y). Throws BaseNotFree.
AcylindricityReport acylindricity_precheck_free(const HnnPresentation& h);

}  // namespace cgtk
