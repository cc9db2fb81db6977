#include "cgtk/cancellation.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <tuple>

#include "cgtk/detail/suffix.hpp"
#include "cgtk/error.hpp"

namespace cgtk {

// ---------------------------------------------------------------------------
// K descriptors

KDescriptor KDescriptor::finite_list(std::vector<Word> words) {
  KDescriptor k;
  k.kind_ = Kind::FiniteList;
  for (auto& w : words) k.words_.push_back(reduce(w));
  return k;
}

KDescriptor KDescriptor::sub_alphabet(std::vector<GenIndex> generators) {
  KDescriptor k;
  k.kind_ = Kind::SubAlphabet;
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  k.generators_ = std::move(generators);
  return k;
}

KDescriptor KDescriptor::cyclic_powers(Word w) {
  KDescriptor k;
  k.kind_ = Kind::CyclicPowers;
  k.words_.push_back(reduce(w));
  return k;
}

namespace {

bool is_subword(const Word& u, const Word& text) {
  if (u.size() > text.size()) return false;
  return std::search(text.begin(), text.end(), u.begin(), u.end()) != text.end();
}

}  // namespace

bool KDescriptor::contains(const Word& u) const {
  if (u.empty()) return true;
  switch (kind_) {
    case Kind::SubAlphabet:
      return std::all_of(u.begin(), u.end(), [&](Letter l) {
        return std::binary_search(generators_.begin(), generators_.end(), l.gen());
      });
    case Kind::FiniteList:
      return std::any_of(words_.begin(), words_.end(),
                         [&](const Word& w) { return is_subword(u, w) || is_subword(u, invert(w)); });
    case Kind::CyclicPowers: {
      const Word& base = words_.front();
      const std::size_t core = cyclic_reduce(base).core.size();
      if (core == 0) return false;
      const auto top = static_cast<std::int64_t>(u.size() / core + 2);
      for (std::int64_t k = 1; k <= top; ++k)
        if (is_subword(u, power(base, k)) || is_subword(u, power(base, -k))) return true;
      return false;
    }
  }
  return false;
}

std::string KDescriptor::describe(const Alphabet& alphabet) const {
  std::string out;
  switch (kind_) {
    case Kind::SubAlphabet:
      out = "subalphabet{";
      for (std::size_t i = 0; i < generators_.size(); ++i)
        out += (i ? " " : "") + alphabet.name(generators_[i]);
      return out + "}";
    case Kind::FiniteList:
      out = "list{";
      for (std::size_t i = 0; i < words_.size(); ++i)
        out += (i ? "; " : "") + format_word(words_[i], alphabet);
      return out + "}";
    case Kind::CyclicPowers:
      return "powers{" + format_word(words_.front(), alphabet) + "}";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

std::size_t PieceReport::max_piece() const {
  std::size_t best = 0;
  for (const auto& r : rows) best = std::max(best, r.max_piece.value_or(0));
  return best;
}

std::size_t PieceReport::max_self_piece() const {
  std::size_t best = 0;
  for (const auto& r : rows) best = std::max(best, r.max_self_piece.value_or(0));
  return best;
}

namespace {

PieceReport empty_rows(const SymmetrizedSet& rset) {
  PieceReport report;
  for (std::size_t p : rset.primary()) {
    RelatorReport row;
    row.relator = p;
    row.length = rset.relators()[p].word.size();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<std::uint32_t> codes(const Word& w) {
  std::vector<std::uint32_t> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(l.code());
  return out;
}

/// Cyclic word read from offset 0 for L + L - 1 letters: every window of
/// length <= L is an arc.
std::vector<std::uint32_t> doubled_codes(const Word& w) {
  std::vector<std::uint32_t> out = codes(w);
  if (!w.empty()) out.insert(out.end(), out.begin(), out.end() - 1);
  return out;
}

// ---------------------------------------------------------------------------
// Pieces: suffix array over all doubled cyclic words.
//
// Each closure member is a suffix starting inside the first copy of its cyclic
// word. For a fixed partner length l the piece length against partner R' is
// min(lcp, l, |R|), and the best partner of length l is one of the two nearest
// length-l members in suffix order.

void fill_pieces(const SymmetrizedSet& rset, PieceReport& report) {
  const auto& relators = rset.relators();
  const std::uint32_t sentinel_base = static_cast<std::uint32_t>(2 * rset.alphabet().size() + 2);

  std::vector<std::uint32_t> text;
  std::vector<std::size_t> start(relators.size());
  for (std::size_t r = 0; r < relators.size(); ++r) {
    start[r] = text.size();
    const auto d = doubled_codes(relators[r].word);
    text.insert(text.end(), d.begin(), d.end());
    text.push_back(sentinel_base + static_cast<std::uint32_t>(r));
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> member_at(text.size(), kNone);
  std::vector<std::size_t> member_len(rset.size());
  for (std::size_t m = 0; m < rset.size(); ++m) {
    const auto& ref = rset.member(m);
    member_at[start[ref.relator] + ref.offset] = m;
    member_len[m] = relators[ref.relator].word.size();
  }

  const auto sa = detail::suffix_array(text);
  const auto lcp = detail::lcp_array(text, sa);

  std::vector<std::size_t> lengths(member_len);
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  std::vector<std::size_t> best(rset.size(), 0);
  std::vector<std::size_t> partner(rset.size(), kNone);
  auto offer = [&](std::size_t m, std::size_t other, std::size_t value) {
    if (value > best[m] || (value == best[m] && value > 0 && other < partner[m])) {
      best[m] = value;
      partner[m] = other;
    }
  };

  const std::size_t n = text.size();
  for (std::size_t len : lengths) {
    std::size_t run = kNone;
    std::size_t prev = kNone;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) run = std::min<std::size_t>(run, lcp[i]);
      const std::size_t m = member_at[sa[i]];
      if (m == kNone) continue;
      if (prev != kNone) offer(m, prev, std::min({run, len, member_len[m]}));
      if (member_len[m] == len) {
        prev = m;
        run = kNone;
      }
    }
    run = kNone;
    std::size_t next = kNone;
    for (std::size_t i = n; i-- > 0;) {
      if (i + 1 < n) run = std::min<std::size_t>(run, lcp[i + 1]);
      const std::size_t m = member_at[sa[i]];
      if (m == kNone) continue;
      if (next != kNone) offer(m, next, std::min({run, len, member_len[m]}));
      if (member_len[m] == len) {
        next = m;
        run = kNone;
      }
    }
  }

  report.member_max_piece = best;
  std::vector<std::size_t> row_of(relators.size(), kNone);
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const std::size_t p = report.rows[k].relator;
    row_of[p] = k;
    row_of[relators[p].partner] = k;
    report.rows[k].max_piece = 0;
  }
  for (std::size_t m = 0; m < rset.size(); ++m) {
    auto& row = report.rows[row_of[rset.member(m).relator]];
    if (best[m] > *row.max_piece) {
      row.max_piece = best[m];
      row.piece_witness = PieceWitness{m, partner[m], best[m]};
    }
  }
}

// ---------------------------------------------------------------------------
// Self-pieces: binary search on the arc length; a length is feasible iff two
// disjoint arcs carry equal (or mutually inverse) labels. Arcs are bucketed by
// a pair of polynomial hashes and every candidate is verified letter by letter.

class ArcHasher {
public:
  static constexpr std::uint64_t kMod = (1ULL << 61) - 1;

  ArcHasher(std::span<const std::uint32_t> text, std::uint64_t base) : prefix_(text.size() + 1, 0), pow_(text.size() + 1, 1) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      prefix_[i + 1] = add(mul(prefix_[i], base), text[i] + 1);
      pow_[i + 1] = mul(pow_[i], base);
    }
  }

  std::uint64_t operator()(std::size_t pos, std::size_t len) const {
    return sub(prefix_[pos + len], mul(prefix_[pos], pow_[len]));
  }

private:
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
    if (r >= kMod) r -= kMod;
    return r;
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= kMod ? r - kMod : r;
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> pow_;
};

struct SelfPieceFinder {
  const Word& word;
  std::size_t n;
  std::vector<std::uint32_t> fwd;  // word, doubled
  std::vector<std::uint32_t> inv;  // inverse word, doubled
  ArcHasher f1, f2, i1, i2;

  static std::vector<std::uint32_t> twice(const Word& w) {
    auto c = codes(w);
    c.insert(c.end(), c.begin(), c.end());
    return c;
  }

  explicit SelfPieceFinder(const Word& w)
      : word(w), n(w.size()), fwd(twice(w)), inv(twice(invert(w))),
        f1(fwd, 1000003), f2(fwd, 998244353), i1(inv, 1000003), i2(inv, 998244353) {}

  bool disjoint(std::size_t a, std::size_t b, std::size_t len) const {
    return (a + n - b) % n >= len && (b + n - a) % n >= len;
  }

  bool arcs_equal(std::size_t a, std::size_t b, std::size_t len) const {
    for (std::size_t k = 0; k < len; ++k)
      if (fwd[a + k] != fwd[b + k]) return false;
    return true;
  }

  /// Arc at a equals the inverse of the arc at b.
  bool arcs_inverse(std::size_t a, std::size_t b, std::size_t len) const {
    for (std::size_t k = 0; k < len; ++k)
      if (fwd[a + k] != (fwd[b + len - 1 - k] ^ 1U)) return false;
    return true;
  }

  std::optional<SelfPieceWitness> brute(std::size_t len) const {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!disjoint(a, b, len)) continue;
        if (a < b && arcs_equal(a, b, len)) return SelfPieceWitness{0, a, b, len, false};
        if (arcs_inverse(a, b, len)) return SelfPieceWitness{0, a, b, len, true};
      }
    return std::nullopt;
  }

  std::optional<SelfPieceWitness> feasible(std::size_t len) const {
    using Key = std::tuple<std::uint64_t, std::uint64_t, std::size_t>;
    std::vector<Key> arcs(n);
    for (std::size_t i = 0; i < n; ++i) arcs[i] = {f1(i, len), f2(i, len), i};
    std::sort(arcs.begin(), arcs.end());

    const std::size_t gap = n - 2 * len + 1;  // positions disjoint from a given arc
    // First position in [lo, hi) (sorted by position) inside the circular window of
    // `gap` positions starting at `from`.
    auto outside = [&](auto lo, auto hi, std::size_t from) -> std::optional<std::size_t> {
      if (lo == hi) return std::nullopt;
      auto it = std::lower_bound(lo, hi, from, [](const Key& k, std::size_t v) { return std::get<2>(k) < v; });
      std::size_t p;
      std::size_t off;
      if (it == hi) {
        p = std::get<2>(*lo);
        off = p + n - from;
      } else {
        p = std::get<2>(*it);
        off = p - from;
      }
      return off < gap ? std::optional<std::size_t>(p) : std::nullopt;
    };

    bool collided = false;
    for (auto lo = arcs.begin(); lo != arcs.end();) {
      auto hi = lo;
      while (hi != arcs.end() && std::get<0>(*hi) == std::get<0>(*lo) && std::get<1>(*hi) == std::get<1>(*lo)) ++hi;
      if (hi - lo >= 2) {
        for (auto it = lo; it != hi; ++it) {
          const std::size_t a = std::get<2>(*it);
          if (auto b = outside(lo, hi, (a + len) % n)) {
            if (arcs_equal(a, *b, len)) return SelfPieceWitness{0, std::min(a, *b), std::max(a, *b), len, false};
            collided = true;
          }
        }
      }
      lo = hi;
    }
    for (std::size_t b = 0; b < n; ++b) {
      // inverse of arc [b, b+len) is the inverse-word arc starting at n - b - len
      const std::size_t ip = (2 * n - b - len) % n;
      const Key probe_lo{i1(ip, len), i2(ip, len), 0};
      const Key probe_hi{i1(ip, len), i2(ip, len), std::numeric_limits<std::size_t>::max()};
      auto lo = std::lower_bound(arcs.begin(), arcs.end(), probe_lo);
      auto hi = std::upper_bound(arcs.begin(), arcs.end(), probe_hi);
      if (auto a = outside(lo, hi, (b + len) % n)) {
        if (arcs_inverse(*a, b, len)) return SelfPieceWitness{0, *a, b, len, true};
        collided = true;
      }
    }
    if (collided) return brute(len);
    return std::nullopt;
  }

  std::pair<std::size_t, std::optional<SelfPieceWitness>> run() const {
    std::size_t lo = 0;
    std::size_t hi = n / 2;
    std::optional<SelfPieceWitness> witness;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (auto w = feasible(mid)) {
        lo = mid;
        witness = w;
      } else {
        hi = mid - 1;
      }
    }
    return {lo, witness};
  }
};

void fill_self_pieces(const SymmetrizedSet& rset, PieceReport& report) {
  for (auto& row : report.rows) {
    const Word& w = rset.relators()[row.relator].word;
    auto [len, witness] = SelfPieceFinder(w).run();
    row.max_self_piece = len;
    if (witness) {
      witness->relator = row.relator;
      row.self_witness = witness;
    }
  }
}

// ---------------------------------------------------------------------------
// K-pieces

std::pair<std::size_t, std::optional<KPieceWitness>> longest_run(const Word& w, const std::vector<GenIndex>& gens) {
  const std::size_t n = w.size();
  auto allowed = [&](std::size_t i) { return std::binary_search(gens.begin(), gens.end(), w[i % n].gen()); };
  std::size_t first_bad = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!allowed(i)) {
      first_bad = i;
      break;
    }
  if (first_bad == n) return {n, n ? std::optional(KPieceWitness{0, 0, n, 0}) : std::nullopt};
  std::size_t best = 0;
  std::size_t best_start = 0;
  std::size_t run = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t i = first_bad + k;
    if (allowed(i)) {
      ++run;
      if (run > best) {
        best = run;
        best_start = (i + 1 + n - run) % n;
      }
    } else {
      run = 0;
    }
  }
  if (best == 0) return {0, std::nullopt};
  return {best, KPieceWitness{0, best_start, best, 0}};
}

detail::SuffixAutomaton build_language(const KDescriptor& k, std::size_t max_len) {
  detail::SuffixAutomaton sam;
  std::uint32_t sep = 0x80000000U;
  auto add = [&](const Word& w) { sam.add_text(codes(w), sep++); };
  if (k.kind() == KDescriptor::Kind::FiniteList) {
    for (const Word& w : k.words()) {
      add(w);
      add(invert(w));
    }
    return sam;
  }
  const Word& base = k.words().front();
  const auto cr = cyclic_reduce(base);
  if (cr.core.empty()) return sam;
  const auto top = static_cast<std::int64_t>(max_len / cr.core.size() + 2);
  if (cr.conjugator.empty()) {
    add(power(base, top));
    add(power(base, -top));
    return sam;
  }
  // Subwords touching both ends of p c^j p^-1 need every small j.
  for (std::int64_t j = 1; j <= top; ++j) {
    add(power(base, j));
    add(power(base, -j));
  }
  return sam;
}

void fill_k_pieces(const SymmetrizedSet& rset, const KDescriptor& k, std::size_t index, PieceReport& report) {
  std::optional<detail::SuffixAutomaton> sam;
  if (k.kind() != KDescriptor::Kind::SubAlphabet) sam = build_language(k, rset.max_length());
  for (auto& row : report.rows) {
    const Word& w = rset.relators()[row.relator].word;
    std::size_t best = 0;
    std::optional<KPieceWitness> witness;
    if (!sam) {
      auto [len, wit] = longest_run(w, k.generators());
      best = len;
      witness = wit;
    } else {
      const auto query = doubled_codes(w);
      const auto match = sam->matching_lengths(query);
      for (std::size_t i = 0; i < query.size(); ++i) {
        const std::size_t len = std::min(match[i], w.size());
        if (len > best) {
          best = len;
          witness = KPieceWitness{0, (i + 1 - len) % w.size(), len, 0};
        }
      }
    }
    if (witness) {
      witness->relator = row.relator;
      witness->descriptor = index;
    }
    row.max_k_piece.push_back(best);
    row.k_witness.push_back(witness);
  }
}

}  // namespace

PieceReport enumerate_pieces(const SymmetrizedSet& rset) {
  PieceReport report = empty_rows(rset);
  if (!rset.empty()) fill_pieces(rset, report);
  return report;
}

PieceReport enumerate_self_pieces(const SymmetrizedSet& rset) {
  PieceReport report = empty_rows(rset);
  fill_self_pieces(rset, report);
  return report;
}

PieceReport enumerate_k_pieces(const SymmetrizedSet& rset, const KDescriptor& k) {
  PieceReport report = empty_rows(rset);
  fill_k_pieces(rset, k, 0, report);
  return report;
}

PieceReport analyze_pieces(const SymmetrizedSet& rset, std::span<const KDescriptor> ks) {
  PieceReport report = empty_rows(rset);
  if (rset.empty()) return report;
  fill_pieces(rset, report);
  fill_self_pieces(rset, report);
  for (std::size_t i = 0; i < ks.size(); ++i) fill_k_pieces(rset, ks[i], i, report);
  return report;
}

// ---------------------------------------------------------------------------
// Replay

bool replay(const SymmetrizedSet& rset, const PieceWitness& w) {
  if (w.host >= rset.size() || w.other >= rset.size() || w.host == w.other) return false;
  const Word a = rset.member_word(w.host);
  const Word b = rset.member_word(w.other);
  if (a == b || w.length > a.size() || w.length > b.size()) return false;
  return a.subword(0, w.length) == b.subword(0, w.length);
}

namespace {

Word arc(const Word& cyc, std::size_t offset, std::size_t len) { return rotate(cyc, offset).subword(0, len); }

}  // namespace

bool replay(const SymmetrizedSet& rset, const SelfPieceWitness& w) {
  if (w.relator >= rset.relators().size()) return false;
  const Word& cyc = rset.relators()[w.relator].word;
  const std::size_t n = cyc.size();
  if (w.length == 0 || 2 * w.length > n || w.first >= n || w.second >= n) return false;
  if ((w.first + n - w.second) % n < w.length || (w.second + n - w.first) % n < w.length) return false;
  // R = U V U' V' read from the first arc.
  const Word r = rotate(cyc, w.first);
  const Word u = r.subword(0, w.length);
  const Word u2 = r.subword((w.second + n - w.first) % n, w.length);
  return w.inverse ? u2 == invert(u) : u2 == u;
}

bool replay(const SymmetrizedSet& rset, const KPieceWitness& w, const KDescriptor& k) {
  if (w.relator >= rset.relators().size()) return false;
  const Word& cyc = rset.relators()[w.relator].word;
  if (w.length == 0 || w.length > cyc.size() || w.offset >= cyc.size()) return false;
  return k.contains(arc(cyc, w.offset, w.length));
}

// ---------------------------------------------------------------------------
// Conditions

void CancellationParams::validate() const {
  if (!(Rational(0, 1) < mu) || !(mu < Rational(1, 1)))
    throw Error(ErrorCode::InvalidSpec, "mu must lie in (0,1), got " + mu.str());
  if (rho < 1) throw Error(ErrorCode::InvalidSpec, "rho must be positive");
}

std::string_view to_string(ConditionItem item) {
  switch (item) {
    case ConditionItem::LongWords: return "long-words";
    case ConditionItem::Quasigeodesic: return "quasigeodesic";
    case ConditionItem::Pieces: return "pieces";
    case ConditionItem::KPieces: return "k-pieces";
    case ConditionItem::SelfPieces: return "self-pieces";
  }
  return "?";
}

ConditionVerdict check_condition(const SymmetrizedSet& rset, const CancellationParams& params,
                                 std::span<const KDescriptor> ks) {
  params.validate();
  ConditionVerdict v;
  v.report = analyze_pieces(rset, ks);
  for (const auto& row : v.report.rows) {
    if (row.length < params.rho) {
      v.long_words = false;
      v.violations.push_back({ConditionItem::LongWords, row.relator, row.length, {}, {}, {}});
    }
    if (!params.mu.is_below(row.max_piece.value_or(0), row.length)) {
      v.pieces = false;
      v.violations.push_back({ConditionItem::Pieces, row.relator, *row.max_piece, row.piece_witness, {}, {}});
    }
    for (std::size_t i = 0; i < row.max_k_piece.size(); ++i) {
      if (!params.mu.is_below(row.max_k_piece[i], row.length)) {
        v.k_pieces = false;
        v.violations.push_back({ConditionItem::KPieces, row.relator, row.max_k_piece[i], {}, {}, row.k_witness[i]});
      }
    }
    if (!params.mu.is_below(row.max_self_piece.value_or(0), row.length)) {
      v.self_pieces = false;
      v.violations.push_back({ConditionItem::SelfPieces, row.relator, *row.max_self_piece, {}, row.self_witness, {}});
    }
  }
  return v;
}

bool metric_condition(const SymmetrizedSet& rset, const Rational& lambda) {
  if (!(Rational(0, 1) < lambda) || Rational(1, 1) < lambda)
    throw Error(ErrorCode::InvalidSpec, "lambda must lie in (0,1]");
  const auto report = enumerate_pieces(rset);
  return std::all_of(report.rows.begin(), report.rows.end(),
                     [&](const RelatorReport& r) { return lambda.is_below(r.max_piece.value_or(0), r.length); });
}

}  // namespace cgtk
