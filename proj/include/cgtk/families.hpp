#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cgtk/cancellation.hpp"
#include "cgtk/rational.hpp"
#include "cgtk/word.hpp"

namespace cgtk {

/// Shape parameters of the W / W' family over the formal alphabet {X, Y}.
struct FamilySpec {
  std::size_t m = 1;
  Rational mu_prime{1, 2};
  std::size_t rho_prime = 1;

  /// Throws InvalidSpec unless m >= 1, 0 < mu' < 1 and rho' >= 1.
  void validate() const;
  /// Least integer strictly greater than max(rho', 3/mu').
  std::size_t base_n() const;
  /// base_n(), raised when m >= 2 until the common run X^{2N-1} Y X^{2N} Y X^N
  /// of cyclic W_1 and W_2 (length 5N+1) is shorter than mu'|W_1|.
  std::size_t n() const;
};

/// W_i = X^{iN} Y X^{iN+1} Y ... X^{iN+N} Y; W'_i swaps X and Y.
/// Order: W_1..W_m, W'_1..W'_m. Throws InvalidSpec.
std::vector<Word> generate_family(const FamilySpec& spec);
/// Same shapes at an explicit N. Throws InvalidSpec.
std::vector<Word> generate_family(const FamilySpec& spec, std::size_t n);

/// Exact letter count of W_i (and of W'_i).
std::uint64_t family_word_length(std::size_t i, std::size_t n);

/// Runs check_condition on the symmetrized family with (mu', rho').
ConditionVerdict certify_family(const FamilySpec& spec);

/// substitute(r, a^N, b^N) per word. Throws EmptyBase if a or b is trivial.
std::vector<Word> power_substitution_family(const std::vector<Word>& rs, const Word& a,
                                            const Word& b, std::int64_t n);

/// Negative control: W_target (or W'_target) has its leading blocks replaced
/// by those of W_source. The copy is the shortest run of whole blocks
/// reaching mu' * |W_source| letters, so it is a piece too long for W_source.
struct FamilyMutant {
  std::vector<Word> words;
  std::size_t source = 0;  ///< index into words
  std::size_t target = 0;  ///< index into words
  std::size_t blocks = 0;
  std::size_t copied_letters = 0;
};

/// source, target in 1..m, distinct; `mirrored` selects the W' half.
FamilyMutant block_duplication_mutant(const FamilySpec& spec, std::size_t source, std::size_t target,
                                      bool mirrored);

}  // namespace cgtk
