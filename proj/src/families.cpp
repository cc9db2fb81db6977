#include "cgtk/families.hpp"

#include <algorithm>

#include "cgtk/error.hpp"
#include "cgtk/symmetrized.hpp"
#include "cgtk/word_map.hpp"

namespace cgtk {

void FamilySpec::validate() const {
  if (m == 0) throw Error(ErrorCode::InvalidSpec, "family size m must be positive");
  if (mu_prime.num() <= 0 || mu_prime.num() >= mu_prime.den())
    throw Error(ErrorCode::InvalidSpec, "mu' must lie in (0,1), got " + mu_prime.str());
  if (rho_prime == 0) throw Error(ErrorCode::InvalidSpec, "rho' must be positive");
}

std::size_t FamilySpec::base_n() const {
  validate();
  const auto three_over_mu = static_cast<std::size_t>(3 * mu_prime.den() / mu_prime.num());
  return std::max(rho_prime, three_over_mu) + 1;
}

std::size_t FamilySpec::n() const {
  std::size_t n = base_n();
  if (m < 2) return n;
  const auto num = static_cast<unsigned __int128>(mu_prime.num());
  const auto den = static_cast<unsigned __int128>(mu_prime.den());
  // 5N+1 < mu' (N+1)(3N+2)/2, with |W_1| = (N+1)(3N+2)/2.
  while (!(2 * den * (5 * n + 1) < num * (n + 1) * (3 * n + 2))) ++n;
  return n;
}

std::uint64_t family_word_length(std::size_t i, std::size_t n) {
  // sum_{k=0}^{N} (iN + k) + (N + 1)
  const std::uint64_t N = n;
  return (N + 1) * i * N + N * (N + 1) / 2 + (N + 1);
}

namespace {

// Block k of W_i (or W'_i): big^{iN+k} small.
void append_block(std::vector<Letter>& out, std::size_t i, std::size_t k, std::size_t n, bool mirrored) {
  const Letter big = Letter::pos(mirrored ? kFormalY : kFormalX);
  const Letter small = Letter::pos(mirrored ? kFormalX : kFormalY);
  out.insert(out.end(), i * n + k, big);
  out.push_back(small);
}

Word family_word(std::size_t i, std::size_t n, bool mirrored) {
  std::vector<Letter> out;
  out.reserve(family_word_length(i, n));
  for (std::size_t k = 0; k <= n; ++k) append_block(out, i, k, n, mirrored);
  return Word(std::move(out));
}

}  // namespace

std::vector<Word> generate_family(const FamilySpec& spec) { return generate_family(spec, spec.n()); }

std::vector<Word> generate_family(const FamilySpec& spec, std::size_t n) {
  spec.validate();
  if (n == 0) throw Error(ErrorCode::InvalidSpec, "N must be positive");
  std::vector<Word> out;
  out.reserve(2 * spec.m);
  for (bool mirrored : {false, true})
    for (std::size_t i = 1; i <= spec.m; ++i) out.push_back(family_word(i, n, mirrored));
  return out;
}

ConditionVerdict certify_family(const FamilySpec& spec) {
  const auto words = generate_family(spec);
  const auto rset = symmetrize(formal_alphabet(), words);
  return check_condition(rset, CancellationParams{spec.mu_prime, spec.rho_prime});
}

std::vector<Word> power_substitution_family(const std::vector<Word>& rs, const Word& a, const Word& b,
                                            std::int64_t n) {
  if (n <= 0) throw Error(ErrorCode::InvalidSpec, "substitution exponent must be positive");
  if (reduce(a).empty() || reduce(b).empty())
    throw Error(ErrorCode::EmptyBase, "substitution base reduces to the empty word");
  const Word an = power(a, n);
  const Word bn = power(b, n);
  std::vector<Word> out;
  out.reserve(rs.size());
  for (const Word& r : rs) out.push_back(substitute(r, an, bn));
  return out;
}

FamilyMutant block_duplication_mutant(const FamilySpec& spec, std::size_t source, std::size_t target,
                                      bool mirrored) {
  const std::size_t n = spec.n();
  if (source == 0 || target == 0 || source > spec.m || target > spec.m || source == target)
    throw Error(ErrorCode::InvalidSpec, "mutant indices must be distinct members of 1..m");

  const std::uint64_t total = family_word_length(source, n);
  std::size_t blocks = 0;
  std::size_t copied = 0;
  while (blocks <= n && spec.mu_prime.is_below(copied, total)) {
    copied += source * n + blocks + 1;
    ++blocks;
  }
  // Copying every block would reproduce W_source, which symmetrization merges.
  if (blocks > n) throw Error(ErrorCode::InvalidSpec, "mu' too large for a proper block copy");

  std::vector<Letter> out;
  for (std::size_t k = 0; k < blocks; ++k) append_block(out, source, k, n, mirrored);
  for (std::size_t k = blocks; k <= n; ++k) append_block(out, target, k, n, mirrored);

  FamilyMutant mutant;
  mutant.words = generate_family(spec);
  const std::size_t base = mirrored ? spec.m : 0;
  mutant.source = base + source - 1;
  mutant.target = base + target - 1;
  mutant.words[mutant.target] = Word(std::move(out));
  mutant.blocks = blocks;
  mutant.copied_letters = copied;
  return mutant;
}

}  // namespace cgtk
