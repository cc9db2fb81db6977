#include <random>

#include "doctest.h"

#include "cgtk/error.hpp"
#include "cgtk/families.hpp"
#include "cgtk/hnn.hpp"
#include "test_support.hpp"

using namespace cgtk;

namespace {

const Alphabet kFour{"x", "x'", "y", "y'"};

WordMap phi_four() { return WordMap::swapping(kFour, {{"x", "y"}, {"x'", "y'"}}); }

// <F(x,x',y,y'), s, t | g^s = w, phi(g)^t = phi(w)> with w = W_1(x, x').
HnnPresentation double_hnn() {
  const auto phi = phi_four();
  const Word g = parse_word("x y' x'", kFour);
  const Word w1 = generate_family({1, Rational(1, 2), 4})[0];
  const Word w = substitute(w1, parse_word("x", kFour), parse_word("x'", kFour));
  return build_hnn(make_presentation(kFour, {}),
                   {{g, w, "s"}, {apply_map(phi, g), apply_map(phi, w), "t"}});
}

Word letter(const HnnPresentation& h, const char* name, bool inverse = false) {
  const GenIndex g = h.alphabet.index_of(name);
  return Word{inverse ? Letter::neg(g) : Letter::pos(g)};
}

}  // namespace

TEST_CASE("build_hnn") {
  const Alphabet ab{"a", "b"};
  const auto h = build_hnn(make_presentation(ab, {}), {{parse_word("a", ab), parse_word("b", ab), "s"}});
  CHECK(h.alphabet.size() == 3);
  REQUIRE(h.induced_relators().size() == 1);
  CHECK(format_word(h.induced_relators()[0], h.alphabet) == "s^-1 a s b^-1");
  CHECK_THROWS_AS(build_hnn(make_presentation(ab, {}), {{parse_word("a", ab), parse_word("b", ab), "a"}}), Error);
  try {
    build_hnn(make_presentation(ab, {}), {{parse_word("a a^-1", ab), parse_word("b", ab), "s"}});
    FAIL("expected EmptyAssociation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyAssociation);
  }
  try {
    build_hnn(make_presentation(ab, {}), {{parse_word("a", ab), parse_word("b", ab), "s"},
                                          {parse_word("b", ab), parse_word("a", ab), "s"}});
    FAIL("expected LetterClash");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LetterClash);
  }

  const auto d = double_hnn();
  CHECK(d.stable_letters.size() == 2);
  CHECK(d.associations[0].w.size() == 92);
  CHECK(format_word(d.associations[1].g, d.alphabet) == "y x' y'");
}

TEST_CASE("hnn file round trip") {
  const auto d = double_hnn();
  const auto again = parse_hnn(format_hnn(d));
  CHECK(again.alphabet == d.alphabet);
  REQUIRE(again.associations.size() == 2);
  CHECK(again.associations[0].w == d.associations[0].w);
  CHECK(again.associations[1].g == d.associations[1].g);
  CHECK_THROWS_AS(parse_hnn("gens: a b\nstable: s\n"), Error);
  CHECK_THROWS_AS(parse_hnn("gens: a b\nassoc: s | a -> b\n"), Error);
  CHECK_THROWS_AS(parse_hnn("gens: a b\nstable: s\nassoc: s | a b\n"), Error);
}

TEST_CASE("cyclic_exponent") {
  const Alphabet ab{"a", "b"};
  const Word g = parse_word("b a b^-1", ab);
  CHECK(cyclic_exponent(parse_word("b a^3 b^-1", ab), g) == 3);
  CHECK(cyclic_exponent(parse_word("b a^-2 b^-1", ab), g) == -2);
  CHECK(cyclic_exponent(Word{}, g) == 0);
  CHECK_FALSE(cyclic_exponent(parse_word("a", ab), g));
  CHECK_FALSE(cyclic_exponent(parse_word("a^3", ab), parse_word("a^2", ab)));
  CHECK(cyclic_exponent(parse_word("a^4", ab), parse_word("a^2", ab)) == 2);
}

TEST_CASE("britton_reduce: worked examples") {
  const Alphabet ab{"a", "b"};
  const auto h = build_hnn(make_presentation(ab, {}), {{parse_word("a", ab), parse_word("b", ab), "s"}});
  CHECK(format_word(britton_reduce(h, parse_word("s^-1 a^2 s", h.alphabet)), h.alphabet) == "b^2");
  CHECK(format_word(britton_reduce(h, parse_word("s^-1 b s", h.alphabet)), h.alphabet) == "s^-1 b s");
  CHECK(format_word(britton_reduce(h, parse_word("s^-1 a b a^-1 s", h.alphabet)), h.alphabet) ==
        "s^-1 a b a^-1 s");
  CHECK(format_word(britton_reduce(h, parse_word("s b^-3 s^-1", h.alphabet)), h.alphabet) == "a^-3");
  // Nested pinches resolve from the inside.
  CHECK(format_word(britton_reduce(h, parse_word("s s^-1 a s s^-1", h.alphabet)), h.alphabet) == "a");
  CHECK(format_word(britton_reduce(h, parse_word("s^-1 s^-1 a s a s", h.alphabet)), h.alphabet) == "s^-1 b a s");
  CHECK(format_word(britton_reduce(h, parse_word("s^-1 s^-1 a s b^-1 s", h.alphabet)), h.alphabet) == "1");

  const auto tor = make_presentation(ab, {parse_word("a b a^-1 b^-1", ab)});
  const auto nf = build_hnn(tor, {{parse_word("a", ab), parse_word("b", ab), "s"}});
  CHECK_THROWS_AS(britton_reduce(nf, parse_word("s", nf.alphabet)), Error);
}

TEST_CASE("britton_reduce round trip over the double HNN extension") {
  std::mt19937_64 rng(31);
  const auto h = double_hnn();
  for (int trial = 0; trial < 300; ++trial) {
    const Word source = testing::random_reduced_word(rng, 4, 20);
    std::vector<Letter> cur(source.begin(), source.end());
    const std::size_t k = 1 + rng() % 4;
    for (std::size_t p = 0; p < k; ++p) {
      const Association& a = h.associations[rng() % 2];
      const Word s{Letter::pos(a.letter)};
      const std::int64_t e = 1 + static_cast<std::int64_t>(rng() % 3);
      const Word c = testing::random_reduced_word(rng, 4, 5);
      // Identity elements: (s^-1 g^e s) w^-e  or  (s w^e s^-1) g^-e, conjugated by c.
      const bool forward = rng() % 2;
      const Word core = forward ? invert(s) * power(a.g, e) * s : s * power(a.w, e) * invert(s);
      const Word fix = forward ? power(a.w, -e) : power(a.g, -e);
      std::vector<Letter> piece;
      for (const Word* part : {&c, &core, &fix}) piece.insert(piece.end(), part->begin(), part->end());
      const Word ci = invert(c);
      piece.insert(piece.end(), ci.begin(), ci.end());
      const std::size_t at = rng() % (cur.size() + 1);
      cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(at), piece.begin(), piece.end());
    }
    const Word input(cur);
    const Word out = britton_reduce(h, input);
    CHECK(stable_count(h, out) == 0);
    CHECK(out == source);
    CHECK(britton_reduce(h, out) == out);
  }
}

TEST_CASE("britton_reduce is idempotent and never adds stable letters") {
  std::mt19937_64 rng(32);
  const auto h = double_hnn();
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = testing::random_reduced_word(rng, h.alphabet.size(), 30);
    const Word r = britton_reduce(h, w);
    CHECK(stable_count(h, r) <= stable_count(h, w));
    CHECK(britton_reduce(h, r) == r);
  }
}

TEST_CASE("extend_involution") {
  const auto h = double_hnn();
  const auto phi = phi_four();
  const auto ext = extend_involution(h, phi, {{"s", "t"}});
  CHECK(ext.is_involution());
  for (GenIndex g = 0; g < h.alphabet.size(); ++g) {
    const Word w{Letter::pos(g)};
    CHECK(apply_map(ext, apply_map(ext, w)) == w);
  }
  CHECK(apply_map(ext, letter(h, "s")) == letter(h, "t"));

  const Alphabet ab{"a", "b"};
  const auto id = WordMap::identity(ab);
  const Word a = parse_word("a b", ab);
  const auto one = build_hnn(make_presentation(ab, {}), {{a, parse_word("b a^2", ab), "s"}});
  CHECK(extend_involution(one, id, {{"s", "s"}}).is_involution());
  const auto mismatched = build_hnn(make_presentation(ab, {}), {{a, parse_word("b a^2", ab), "s"},
                                                                 {a, power(parse_word("b a^2", ab), 3), "t"}});
  try {
    extend_involution(mismatched, id, {{"s", "t"}});
    FAIL("expected IncompatibleAssociations");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleAssociations);
  }
  const WordMap not_inv(ab, {parse_word("b", ab), parse_word("a b", ab)});
  try {
    extend_involution(one, not_inv, {{"s", "s"}});
    FAIL("expected NotInvolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvolution);
  }
  try {
    extend_involution(mismatched, id, {{"s", "t"}, {"s", "s"}});
    FAIL("expected NotInvolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvolution);
  }
}

TEST_CASE("hexagon_check_free") {
  const auto phi = phi_four();
  const std::vector<GenIndex> xsub{0, 1};
  CHECK(hexagon_check_free(parse_word("x x'", kFour), parse_word("x'", kFour), phi, xsub).holds);
  CHECK(hexagon_check_free(Word{}, Word{}, phi, xsub).holds);
  CHECK(hexagon_check_free(parse_word("x", kFour), parse_word("x^-1", kFour), phi, xsub).holds);
  CHECK_THROWS_AS(hexagon_check_free(parse_word("y", kFour), Word{}, phi, xsub), Error);
  // phi(xSub) must avoid xSub.
  CHECK_THROWS_AS(hexagon_check_free(Word{}, Word{}, phi, {0, 2}), Error);

  // Equal pair over a two-letter alphabet.
  const Alphabet ab{"a", "b"};
  const auto swap = WordMap::swapping(ab, {{"a", "b"}});
  const auto v = hexagon_check_free(parse_word("a", ab), parse_word("a", ab), swap, {0});
  CHECK(v.holds);

  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    Word xi, xp;
    while (xi.empty()) xi = testing::random_reduced_word(rng, 2, 12);
    while (xp.empty()) xp = testing::random_reduced_word(rng, 2, 12);
    CHECK(hexagon_check_free(xi, xp, phi, xsub).holds);
  }
}

TEST_CASE("powers_conjugate and the acylindricity precheck") {
  const Alphabet f = kFour;
  auto pw = [&](const char* a, const char* b) { return powers_conjugate(parse_word(a, f), parse_word(b, f)); };
  CHECK_FALSE(pw("x", "y"));
  CHECK(pw("x y", "y x"));
  CHECK(pw("x", "x^-1"));
  const auto w = pw("x^2", "y x^3 y^-1");
  REQUIRE(w);
  CHECK(w->m == 3);
  CHECK(w->n == 2);
  CHECK(replay(parse_word("x^2", f), parse_word("y x^3 y^-1", f), *w));

  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 400; ++trial) {
    const Word r = testing::random_cyclically_reduced(rng, 2, 3);
    const Word c = testing::random_reduced_word(rng, 4, 4);
    const Word u = power(r, 1 + static_cast<std::int64_t>(rng() % 3));
    const Word v = rng() % 3 == 0 ? testing::random_reduced_word(rng, 4, 6, 1)
                                  : c * power(r, (rng() % 2 ? 1 : -1) * (1 + static_cast<std::int64_t>(rng() % 3))) * invert(c);
    const auto a = powers_conjugate(u, v);
    const auto b = powers_conjugate(v, u);
    CHECK(a.has_value() == b.has_value());
    if (a) CHECK(replay(u, v, *a));
    if (b) CHECK(replay(v, u, *b));
  }

  const Alphabet ab{"a", "b"};
  const auto free_ab = make_presentation(ab, {});
  auto one = [&](const char* g, const char* ww) {
    return acylindricity_precheck_free(build_hnn(free_ab, {{parse_word(g, ab), parse_word(ww, ab), "s"}}));
  };
  CHECK(one("a", "b").holds());
  CHECK_FALSE(one("a b", "b a").holds());
  CHECK_FALSE(one("a", "a^-1").holds());
  const auto pp = one("a", "b^2");
  CHECK_FALSE(pp.holds());
  for (const auto& e : pp.entries)
    if (e.x == e.y) CHECK(e.root == parse_word("b", ab));

  const auto d = acylindricity_precheck_free(double_hnn());
  CHECK(d.entries.size() == 8);
  CHECK(d.holds());
}
