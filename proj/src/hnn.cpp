#include "cgtk/hnn.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cgtk/error.hpp"

namespace cgtk {

const Association& HnnPresentation::association_for(GenIndex letter) const {
  for (const auto& a : associations)
    if (a.letter == letter) return a;
  throw Error(ErrorCode::UnknownGenerator, "'" + alphabet.name(letter) + "' is not a stable letter");
}

std::vector<Word> HnnPresentation::induced_relators() const {
  std::vector<Word> out(base.relators.seeds().begin(), base.relators.seeds().end());
  for (const auto& a : associations) {
    const Word s{Letter::pos(a.letter)};
    out.push_back(invert(s) * a.g * s * invert(a.w));
  }
  return out;
}

namespace {

Word checked_base_word(const Word& w, const Presentation& base, const std::string& what) {
  if (w.generator_bound() > base.alphabet.size())
    throw Error(ErrorCode::UnknownGenerator, what + " uses a letter outside the base");
  Word r = reduce(w);
  if (cyclic_reduce(r).core.empty()) throw Error(ErrorCode::EmptyAssociation, what + " is trivial");
  return r;
}

void require_free(const HnnPresentation& h) {
  if (!h.base.relators.empty()) throw Error(ErrorCode::BaseNotFree, "base presentation has relators");
}

}  // namespace

HnnPresentation build_hnn(const Presentation& base, const std::vector<AssociationSpec>& pairs) {
  HnnPresentation h;
  h.base = base;
  h.alphabet = base.alphabet;
  for (const auto& p : pairs) {
    Association a;
    a.g = checked_base_word(p.g, base, "associated word g for '" + p.letter + "'");
    a.w = checked_base_word(p.w, base, "associated word w for '" + p.letter + "'");
    a.letter = h.alphabet.add(p.letter);
    h.stable_letters.push_back(a.letter);
    h.associations.push_back(std::move(a));
  }
  return h;
}

HnnPresentation parse_hnn(std::string_view text) {
  std::ostringstream base_text;
  std::vector<std::string> stable;
  std::vector<std::pair<std::string, std::string>> assoc_lines;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto [key, value] = detail::split_directive(line);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (key == "stable") {
      for (auto& s : detail::split_ws(value)) stable.push_back(s);
    } else if (key == "assoc") {
      const auto bar = value.find('|');
      if (bar == std::string::npos) throw Error(ErrorCode::Parse, where + "expected 'assoc: s | g -> w'");
      std::string letter = detail::split_directive(value.substr(0, bar)).second;
      assoc_lines.emplace_back(std::move(letter), value.substr(bar + 1));
      base_text << '\n';
      continue;
    } else {
      base_text << line;
    }
    base_text << '\n';
  }
  const Presentation base = parse_presentation(base_text.str());

  std::vector<AssociationSpec> pairs;
  for (const auto& s : stable) {
    const auto it = std::find_if(assoc_lines.begin(), assoc_lines.end(), [&](auto& l) { return l.first == s; });
    if (it == assoc_lines.end()) throw Error(ErrorCode::Parse, "stable letter '" + s + "' has no association");
    const auto arrow = it->second.find("->");
    if (arrow == std::string::npos) throw Error(ErrorCode::Parse, "association for '" + s + "' lacks '->'");
    pairs.push_back({parse_word(it->second.substr(0, arrow), base.alphabet),
                     parse_word(it->second.substr(arrow + 2), base.alphabet), s});
  }
  for (const auto& l : assoc_lines)
    if (std::count(stable.begin(), stable.end(), l.first) != 1)
      throw Error(ErrorCode::Parse, "association letter '" + l.first + "' is not declared once in 'stable'");
  return build_hnn(base, pairs);
}

std::string format_hnn(const HnnPresentation& h) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& n : h.base.alphabet.names()) out << ' ' << n;
  out << '\n';
  for (const auto& r : h.base.relators.seeds()) out << "rel: " << format_word(r, h.base.alphabet) << '\n';
  out << "stable:";
  for (GenIndex s : h.stable_letters) out << ' ' << h.alphabet.name(s);
  out << '\n';
  for (const auto& a : h.associations)
    out << "assoc: " << h.alphabet.name(a.letter) << " | " << format_word(a.g, h.alphabet) << " -> "
        << format_word(a.w, h.alphabet) << '\n';
  return out.str();
}

std::optional<std::int64_t> cyclic_exponent(const Word& u, const Word& g) {
  const auto cr = cyclic_reduce(g);
  if (cr.core.empty()) return reduce(u).empty() ? std::optional<std::int64_t>(0) : std::nullopt;
  const Word v = invert(cr.conjugator) * u * cr.conjugator;
  if (v.size() % cr.core.size() != 0) return std::nullopt;
  const auto k = static_cast<std::int64_t>(v.size() / cr.core.size());
  if (v == power(cr.core, k)) return k;
  if (v == power(cr.core, -k)) return -k;
  return std::nullopt;
}

std::size_t stable_count(const HnnPresentation& h, const Word& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](Letter l) { return h.is_stable(l.gen()); }));
}

namespace {

// Leftmost pinch between consecutive stable letters, rewritten; nullopt if none.
std::optional<Word> remove_first_pinch(const HnnPresentation& h, const Word& x) {
  std::optional<std::size_t> prev;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!h.is_stable(x[j].gen())) continue;
    if (prev && x[*prev].gen() == x[j].gen() && x[*prev] == x[j].inverse()) {
      const std::size_t i = *prev;
      const Association& a = h.association_for(x[j].gen());
      const Word u = x.subword(i + 1, j - i - 1);
      // s^-1 u s: u in <g> -> w^k.  s u s^-1: u in <w> -> g^k.
      const bool forward = !x[i].positive();
      if (auto k = cyclic_exponent(u, forward ? a.g : a.w)) {
        const Word image = power(forward ? a.w : a.g, *k);
        return x.subword(0, i) * image * x.subword(j + 1, x.size() - j - 1);
      }
    }
    prev = j;
  }
  return std::nullopt;
}

}  // namespace

Word britton_reduce(const HnnPresentation& h, const Word& w) {
  require_free(h);
  if (w.generator_bound() > h.alphabet.size())
    throw Error(ErrorCode::UnknownGenerator, "word uses a letter outside the HNN alphabet");
  Word x = reduce(w);
  while (auto next = remove_first_pinch(h, x)) x = std::move(*next);
  return x;
}

WordMap extend_involution(const HnnPresentation& h, const WordMap& phi,
                          const std::vector<std::pair<std::string, std::string>>& swaps) {
  if (!(phi.alphabet() == h.base.alphabet))
    throw Error(ErrorCode::InvalidSpec, "involution is not defined on the base alphabet");
  if (!phi.is_involution()) throw Error(ErrorCode::NotInvolution, "base map is not an involution");

  std::vector<Word> images(phi.images());
  std::vector<std::optional<GenIndex>> partner(h.alphabet.size());
  auto assign = [&](GenIndex from, GenIndex to) {
    if (partner[from] && *partner[from] != to)
      throw Error(ErrorCode::NotInvolution, "stable letter '" + h.alphabet.name(from) + "' swapped twice");
    partner[from] = to;
  };
  for (const auto& [a, b] : swaps) {
    const GenIndex s = h.alphabet.index_of(a);
    const GenIndex t = h.alphabet.index_of(b);
    if (!h.is_stable(s) || !h.is_stable(t))
      throw Error(ErrorCode::InvalidSpec, "swap '" + a + "' <-> '" + b + "' involves a base letter");
    assign(s, t);
    assign(t, s);
  }
  for (GenIndex s : h.stable_letters) {
    if (!partner[s]) throw Error(ErrorCode::InvalidSpec, "stable letter '" + h.alphabet.name(s) + "' has no swap");
    images.push_back(Word{Letter::pos(*partner[s])});
  }
  WordMap full(h.alphabet, std::move(images), true);

  for (const auto& a : h.associations) {
    const Association& b = h.association_for(*partner[a.letter]);
    if (apply_map(phi, a.g) != b.g || apply_map(phi, a.w) != b.w)
      throw Error(ErrorCode::IncompatibleAssociations,
                  "phi does not carry the association of '" + h.alphabet.name(a.letter) + "' onto that of '" +
                      h.alphabet.name(b.letter) + "'");
  }
  return full;
}

HexagonVerdict hexagon_check_free(const Word& xi, const Word& xi_prime, const WordMap& phi,
                                  const std::vector<GenIndex>& x_sub) {
  const std::set<GenIndex> sub(x_sub.begin(), x_sub.end());
  for (const Word* w : {&xi, &xi_prime})
    for (Letter l : *w)
      if (!sub.count(l.gen()))
        throw Error(ErrorCode::SupportViolation, "letter '" + phi.alphabet().name(l.gen()) + "' outside xSub");
  for (GenIndex g : sub) {
    if (g >= phi.alphabet().size()) throw Error(ErrorCode::SupportViolation, "xSub index outside the alphabet");
    for (Letter l : phi.image(g))
      if (sub.count(l.gen()))
        throw Error(ErrorCode::SupportViolation, "phi(xSub) meets xSub at '" + phi.alphabet().name(l.gen()) + "'");
  }

  const Word x = reduce(xi);
  const Word xp = reduce(xi_prime);
  if (xp == x || xp == invert(x)) return {};
  // xi^z = phi(xi')^{phi(z)} forces xi and phi(xi') to be conjugate.
  const Word target = apply_map(phi, xp);
  if (auto c = conjugator_between(x, target)) return {false, std::move(c)};
  return {};
}

std::optional<PowerConjugacy> powers_conjugate(const Word& u, const Word& v) {
  const auto cu = cyclic_reduce(u);
  const auto cv = cyclic_reduce(v);
  if (cu.core.empty() || cv.core.empty()) return std::nullopt;
  const Word ru = primitive_root(cu.core);
  const Word rv = primitive_root(cv.core);
  std::int64_t sign = 0;
  if (conjugacy_equal(ru, rv))
    sign = 1;
  else if (conjugacy_equal(ru, invert(rv)))
    sign = -1;
  else
    return std::nullopt;
  const auto a = static_cast<std::int64_t>(cu.core.size() / ru.size());
  const auto b = static_cast<std::int64_t>(cv.core.size() / rv.size());
  const std::int64_t d = std::gcd(a, b);
  PowerConjugacy out;
  out.m = b / d;
  out.n = sign * (a / d);
  out.conjugator = *conjugator_between(power(u, out.m), power(v, out.n));
  return out;
}

bool replay(const Word& u, const Word& v, const PowerConjugacy& witness) {
  if (witness.m <= 0 || witness.n == 0) return false;
  const Word lhs = invert(witness.conjugator) * power(u, witness.m) * witness.conjugator;
  return !lhs.empty() && lhs == power(v, witness.n);
}

bool AcylindricityReport::holds() const {
  return std::none_of(entries.begin(), entries.end(), [](const auto& e) { return e.violation; });
}

Word edge_generator(const HnnPresentation& h, std::size_t edge) {
  const Association& a = h.associations.at(edge / 2);
  return edge % 2 == 0 ? a.g : a.w;
}

AcylindricityReport acylindricity_precheck_free(const HnnPresentation& h) {
  require_free(h);
  AcylindricityReport report;
  const std::size_t edges = 2 * h.associations.size();
  for (std::size_t x = 1; x < edges; x += 2) {
    const Word gx = edge_generator(h, x);
    for (std::size_t y = 0; y < edges; ++y) {
      AcylindricityEntry e;
      e.x = x;
      e.y = y;
      if (x == y) {
        const auto cr = cyclic_reduce(gx);
        const Word root = primitive_root(cr.core);
        if (root.size() < cr.core.size()) {
          e.violation = true;
          e.root = cr.conjugator * root * invert(cr.conjugator);
        }
      } else {
        e.witness = powers_conjugate(gx, edge_generator(h, y));
        e.violation = e.witness.has_value();
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace cgtk
