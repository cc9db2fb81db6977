#include <string>

#include "doctest.h"

#include "cgtk/error.hpp"
#include "cgtk/families.hpp"
#include "cgtk/symmetrized.hpp"
#include "cgtk/word_map.hpp"
#include "oracles.hpp"

using namespace cgtk;

namespace {

// Family word spelled out from the formula, letter codes X=0, Y=2.
oracle::Codes spelled(std::size_t i, std::size_t n, bool mirrored) {
  const std::uint32_t big = mirrored ? 2 : 0;
  const std::uint32_t small = mirrored ? 0 : 2;
  oracle::Codes out;
  for (std::size_t e = i * n; e <= i * n + n; ++e) {
    out.insert(out.end(), e, big);
    out.push_back(small);
  }
  return out;
}

oracle::Codes to_codes(const Word& w) {
  oracle::Codes c;
  for (Letter l : w) c.push_back(l.code());
  return c;
}

bool oracle_pieces_pass(const std::vector<Word>& words, const Rational& mu) {
  std::vector<oracle::Codes> raw;
  for (const auto& w : words) raw.push_back(to_codes(w));
  const auto cl = oracle::closure(raw);
  for (const auto& [r, piece] : oracle::pieces_sorted(cl))
    if (!mu.is_below(piece, r.size())) return false;
  return true;
}

}  // namespace

TEST_CASE("base_n is the least integer above max(rho', 3/mu')") {
  CHECK(FamilySpec{1, Rational(1, 2), 4}.n() == 7);
  CHECK(FamilySpec{1, Rational(1, 6), 10}.n() == 19);
  CHECK(FamilySpec{1, Rational(1, 12), 50}.n() == 51);
  CHECK(FamilySpec{1, Rational(1, 2), 6}.n() == 7);
  CHECK(FamilySpec{1, Rational(1, 12), 10}.n() == 37);
  CHECK(FamilySpec{2, Rational(1, 12), 10}.base_n() == 37);
  CHECK(FamilySpec{2, Rational(1, 12), 10}.n() == 39);
  CHECK(FamilySpec{5, Rational(1, 6), 10}.n() == 19);
  CHECK(FamilySpec{5, Rational(1, 12), 50}.n() == 51);
  CHECK_THROWS_AS(FamilySpec({0, Rational(1, 2), 4}).validate(), Error);
  CHECK_THROWS_AS(generate_family({1, Rational(1, 1), 4}), Error);
  CHECK_THROWS_AS(generate_family({1, Rational(1, 2), 0}), Error);
}

TEST_CASE("generate_family: worked example") {
  const auto ws = generate_family({1, Rational(1, 2), 4});
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].size() == 92);
  CHECK(ws[1].size() == 92);
  CHECK(format_word(ws[0], formal_alphabet()) == "X^7 Y X^8 Y X^9 Y X^10 Y X^11 Y X^12 Y X^13 Y X^14 Y");
  CHECK(format_word(ws[1], formal_alphabet()) == "Y^7 X Y^8 X Y^9 X Y^10 X Y^11 X Y^12 X Y^13 X Y^14 X");

  const auto two = generate_family({2, Rational(1, 2), 4});
  REQUIRE(two.size() == 4);
  CHECK(two[1][0] == Letter::pos(kFormalX));
  CHECK(two[1][14] == Letter::pos(kFormalY));
  CHECK(two[1][13] == Letter::pos(kFormalX));
}

TEST_CASE("generate_family matches the spelled-out formula") {
  for (std::size_t m : {1, 2, 5})
    for (auto [mu, rho] : {std::pair{Rational(1, 2), 10}, {Rational(1, 6), 10}, {Rational(1, 12), 50}}) {
      const FamilySpec spec{m, mu, static_cast<std::size_t>(rho)};
      const auto ws = generate_family(spec);
      const std::size_t n = spec.n();
      REQUIRE(ws.size() == 2 * m);
      for (std::size_t i = 1; i <= m; ++i) {
        CHECK(ws[i - 1].is_reduced());
        CHECK(to_codes(ws[i - 1]) == spelled(i, n, false));
        CHECK(to_codes(ws[m + i - 1]) == spelled(i, n, true));
        CHECK(ws[i - 1].size() == family_word_length(i, n));
      }
    }
}

TEST_CASE("certify_family agrees with the brute-force scan") {
  const FamilySpec small{1, Rational(1, 2), 4};
  const auto v = certify_family(small);
  CHECK(v.pass());
  CHECK(oracle_pieces_pass(generate_family(small), small.mu_prime));
  for (const auto& w : generate_family(small))
    CHECK(small.mu_prime.is_below(oracle::self_piece(to_codes(w)), w.size()));

  const FamilySpec three{3, Rational(1, 6), 10};
  CHECK(certify_family(three).pass());
  CHECK(oracle_pieces_pass(generate_family(three), three.mu_prime));
}

TEST_CASE("the boundary run between W_1 and W_2 at base_n") {
  const FamilySpec spec{2, Rational(1, 12), 10};
  const std::size_t n = spec.base_n();
  const auto words = generate_family(spec, n);
  CHECK_FALSE(oracle_pieces_pass(words, spec.mu_prime));
  const auto rset = symmetrize(formal_alphabet(), words);
  const auto v = check_condition(rset, {spec.mu_prime, spec.rho_prime});
  CHECK_FALSE(v.pieces);
  CHECK(v.report.rows[0].max_piece == 5 * n + 1);
  REQUIRE(v.report.rows[0].piece_witness);
  const auto& w = *v.report.rows[0].piece_witness;
  CHECK(replay(rset, w));
  CHECK(format_word(rset.member_word(w.host).subword(0, w.length), formal_alphabet()) == "X^73 Y X^74 Y X^37");

  // At the raised N the same shapes certify, and the oracle agrees.
  CHECK(certify_family(spec).pass());
  CHECK(oracle_pieces_pass(generate_family(spec), spec.mu_prime));
  for (std::size_t m = 2; m <= 5; ++m)
    for (const Rational mu : {Rational(1, 2), Rational(1, 6), Rational(1, 12)})
      for (std::size_t rho : {10, 50}) {
        const FamilySpec s{m, mu, rho};
        CHECK(s.n() >= s.base_n());
        CHECK(mu.is_below(5 * s.n() + 1, family_word_length(1, s.n())));
      }
}

TEST_CASE("block duplication mutants fail with a replayable witness") {
  const FamilySpec spec{3, Rational(1, 6), 10};
  for (bool mirrored : {false, true})
    for (auto [s, t] : {std::pair<std::size_t, std::size_t>{1, 2}, {3, 1}}) {
      const auto mutant = block_duplication_mutant(spec, s, t, mirrored);
      CHECK(mutant.blocks >= 2);
      const auto rset = symmetrize(formal_alphabet(), mutant.words);
      const auto v = check_condition(rset, {spec.mu_prime, spec.rho_prime});
      CHECK_FALSE(v.pass());
      CHECK_FALSE(v.pieces);
      CHECK_FALSE(oracle_pieces_pass(mutant.words, spec.mu_prime));
      bool replayed = false;
      for (const auto& viol : v.violations)
        if (viol.piece) {
          CHECK(replay(rset, *viol.piece));
          CHECK(viol.piece->length >= mutant.copied_letters);
          replayed = true;
        }
      CHECK(replayed);
    }
  CHECK_THROWS_AS(block_duplication_mutant(spec, 1, 1, false), Error);
  CHECK_THROWS_AS(block_duplication_mutant(spec, 1, 4, false), Error);
}

TEST_CASE("power_substitution_family") {
  const Alphabet xy{"x", "y"};
  const Word x = parse_word("x", xy);
  const Word y = parse_word("y", xy);
  const auto& f = formal_alphabet();
  auto one = power_substitution_family({parse_word("X Y", f)}, x, y, 3);
  CHECK(format_word(one[0], xy) == "x^3 y^3");
  one = power_substitution_family({parse_word("X Y^-1", f)}, x, x, 1);
  CHECK(one[0].empty());
  const auto fam = generate_family({1, Rational(1, 2), 4});
  const auto lit = power_substitution_family(fam, x, y, 1);
  CHECK(to_codes(lit[0]) == to_codes(fam[0]));
  CHECK_THROWS_AS(power_substitution_family(fam, parse_word("x x^-1", xy), y, 2), Error);
  try {
    power_substitution_family(fam, x, Word{}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyBase);
  }
}
