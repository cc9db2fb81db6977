#include "cgtk/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "cgtk/error.hpp"

namespace cgtk {

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& n : names) add(std::move(n));
}

std::optional<GenIndex> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GenIndex Alphabet::index_of(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw Error(ErrorCode::UnknownGenerator, "generator '" + std::string(name) + "'");
}

GenIndex Alphabet::add(std::string name) {
  if (name.empty() || name == "1" || name.find_first_of(" \t\r\n^") != std::string::npos)
    throw Error(ErrorCode::Parse, "invalid generator name '" + name + "'");
  if (index_.count(name)) throw Error(ErrorCode::LetterClash, "generator '" + name + "' already defined");
  const auto g = static_cast<GenIndex>(names_.size());
  index_.emplace(name, g);
  names_.push_back(std::move(name));
  return g;
}

namespace {

std::vector<Letter> freely_reduce(std::span<const Letter> in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool has_cancellation(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return true;
  return false;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(freely_reduce(letters)), reduced_(true) {}

Word Word::unreduced(std::vector<Letter> letters) {
  Word w;
  w.reduced_ = !has_cancellation(letters);
  w.letters_ = std::move(letters);
  return w;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  w.reduced_ = reduced_ || !has_cancellation(w.letters_);
  return w;
}

std::size_t Word::generator_bound() const {
  std::size_t bound = 0;
  for (Letter l : letters_) bound = std::max<std::size_t>(bound, l.gen() + 1);
  return bound;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : w) {
    h ^= l.code();
    h *= 1099511628211ULL;
  }
  return h;
}

Word reduce(const Word& w) {
  if (w.is_reduced()) return w;
  return Word(std::vector<Letter>(w.begin(), w.end()));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return w.is_reduced() ? Word(std::move(out)) : Word::unreduced(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

Word power(const Word& w, std::int64_t k) {
  const Word base = k < 0 ? invert(reduce(w)) : reduce(w);
  const auto reps = static_cast<std::uint64_t>(k < 0 ? -k : k);
  const auto cr = cyclic_reduce(base);
  // p c^k p^-1 is already reduced when c is cyclically reduced.
  std::vector<Letter> out(cr.conjugator.begin(), cr.conjugator.end());
  out.reserve(2 * cr.conjugator.size() + reps * cr.core.size());
  for (std::uint64_t i = 0; i < reps; ++i) out.insert(out.end(), cr.core.begin(), cr.core.end());
  const Word inv = invert(cr.conjugator);
  out.insert(out.end(), inv.begin(), inv.end());
  return Word(std::move(out));
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return Word::unreduced(std::move(out));
}

bool is_cyclically_reduced(const Word& w) {
  if (!w.is_reduced()) return false;
  return w.size() < 2 || w.front() != w.back().inverse();
}

CyclicReduction cyclic_reduce(const Word& w) {
  const Word r = reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {r.subword(lo, hi - lo), r.subword(0, lo)};
}

std::size_t least_rotation_offset(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = s[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      // i == -1 here
      if (sj < s[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

Word least_rotation(const Word& w) { return rotate(w, least_rotation_offset(w.letters())); }

std::size_t rotation_period(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  const std::size_t p = n - fail[n];
  return n % p == 0 ? p : n;
}

Word primitive_root(const Word& w) { return w.subword(0, rotation_period(w)); }

bool conjugacy_equal(const Word& u, const Word& v) {
  const Word cu = cyclic_reduce(u).core;
  const Word cv = cyclic_reduce(v).core;
  if (cu.size() != cv.size()) return false;
  return least_rotation(cu) == least_rotation(cv);
}

std::optional<Word> conjugator_between(const Word& u, const Word& v) {
  const auto ru = cyclic_reduce(u);
  const auto rv = cyclic_reduce(v);
  if (ru.core.size() != rv.core.size()) return std::nullopt;
  const std::size_t n = ru.core.size();
  if (n == 0) return ru.conjugator * invert(rv.conjugator);
  const std::size_t ou = least_rotation_offset(ru.core.letters());
  const std::size_t ov = least_rotation_offset(rv.core.letters());
  if (rotate(ru.core, ou) != rotate(rv.core, ov)) return std::nullopt;
  // core_v = rotate(core_u, k) = a^-1 core_u a with a = core_u[0..k).
  const std::size_t k = (ou + n - ov) % n;
  const Word a = ru.core.subword(0, k);
  return ru.conjugator * a * invert(rv.conjugator);
}

std::int64_t exponent_sum(const Word& w, GenIndex g) {
  std::int64_t s = 0;
  for (Letter l : w)
    if (l.gen() == g) s += l.sign();
  return s;
}

namespace {

template <typename Resolve>
Word parse_with(std::string_view text, Resolve&& resolve) {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string_view name = tok;
    long long exp = 1;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      name = std::string_view(tok).substr(0, caret);
      const std::string_view e = std::string_view(tok).substr(caret + 1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (e.empty() || ec != std::errc() || ptr != e.data() + e.size())
        throw Error(ErrorCode::Parse, "bad exponent in token '" + tok + "'");
    }
    if (name.empty()) throw Error(ErrorCode::Parse, "missing generator in token '" + tok + "'");
    std::optional<GenIndex> g = resolve(name);
    if (!g) continue;  // identity token
    const Letter l = exp < 0 ? Letter::neg(*g) : Letter::pos(*g);
    for (long long i = 0; i < std::llabs(exp); ++i) out.push_back(l);
  }
  return Word(std::move(out));
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return parse_with(text, [&](std::string_view name) -> std::optional<GenIndex> {
    if (auto g = alphabet.find(name)) return g;
    if (name == "1") return std::nullopt;
    throw Error(ErrorCode::UnknownGenerator, "generator '" + std::string(name) + "'");
  });
}

Word parse_word_extending(std::string_view text, Alphabet& alphabet) {
  return parse_with(text, [&](std::string_view name) -> std::optional<GenIndex> {
    if (auto g = alphabet.find(name)) return g;
    if (name == "1") return std::nullopt;
    return alphabet.add(std::string(name));
  });
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<long long>(j - i);
    if (!out.empty()) out += ' ';
    out += alphabet.name(w[i].gen());
    if (!w[i].positive())
      out += "^" + std::to_string(-run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace cgtk
