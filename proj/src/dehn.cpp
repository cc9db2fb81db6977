#include "cgtk/dehn.hpp"

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgtk/error.hpp"

namespace cgtk {

namespace {

void check_alphabet(const Presentation& p, const Word& w) {
  if (w.generator_bound() > p.alphabet.size())
    throw Error(ErrorCode::UnknownGenerator, "word uses a generator outside the presentation");
}

struct Match {
  std::size_t length = 0;
  Word member;
};

// Closure members bucketed by first letter code.
class MemberIndex {
public:
  explicit MemberIndex(const SymmetrizedSet& rset) : rset_(rset) {
    for (std::size_t i = 0; i < rset.size(); ++i) {
      const auto& m = rset.member(i);
      const Letter first = rset.relators()[m.relator].word[m.offset];
      if (by_first_.size() <= first.code()) by_first_.resize(first.code() + 1);
      by_first_[first.code()].push_back(m);
    }
  }

  // Longest over-half prefix match of w[i..], ties to the least member.
  std::optional<Match> best_at(const Word& w, std::size_t i) const {
    const auto code = w[i].code();
    if (code >= by_first_.size()) return std::nullopt;
    std::optional<Match> best;
    for (const MemberRef& m : by_first_[code]) {
      const Word& cyc = rset_.relators()[m.relator].word;
      const std::size_t n = cyc.size();
      std::size_t len = 0;
      while (len < n && i + len < w.size() && w[i + len] == cyc[(m.offset + len) % n]) ++len;
      if (2 * len <= n) continue;
      if (best && len < best->length) continue;
      Word member = rotate(cyc, m.offset);
      if (!best || len > best->length || member < best->member) best = Match{len, std::move(member)};
    }
    return best;
  }

private:
  const SymmetrizedSet& rset_;
  std::vector<std::vector<MemberRef>> by_first_;
};

std::optional<DehnStep> next_step(const MemberIndex& index, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (auto m = index.best_at(w, i)) {
      DehnStep step;
      step.position = i;
      step.u = w.subword(i, m->length);
      step.complement = m->member.subword(m->length, m->member.size() - m->length);
      step.relator = std::move(m->member);
      return step;
    }
  }
  return std::nullopt;
}

}  // namespace

DehnResult dehn_reduce(const Presentation& p, const Word& w) {
  check_alphabet(p, w);
  DehnResult out;
  out.residual = reduce(w);
  if (p.relators.empty()) return out;
  const MemberIndex index(p.relators);
  while (auto step = next_step(index, out.residual)) {
    const Word& cur = out.residual;
    const Word prefix = cur.subword(0, step->position);
    const std::size_t tail = step->position + step->u.size();
    const Word suffix = cur.subword(tail, cur.size() - tail);
    Word next = prefix * invert(step->complement) * suffix;
    out.trace.certificate.push_back({prefix, step->relator});
    out.trace.steps.push_back(std::move(*step));
    out.residual = std::move(next);
  }
  return out;
}

Word replay_certificate(const Word& w, const std::vector<CertificateEntry>& certificate) {
  Word x = reduce(w);
  for (const auto& e : certificate) x = e.conjugator * invert(e.relator) * invert(e.conjugator) * x;
  return x;
}

std::string_view to_string(DehnOutcome outcome) {
  switch (outcome) {
    case DehnOutcome::Trivial: return "Trivial";
    case DehnOutcome::NontrivialCertified: return "NontrivialCertified";
    case DehnOutcome::Unknown: return "Unknown";
  }
  return "?";
}

DehnVerdict decide(const Presentation& p, const Word& w) {
  auto r = dehn_reduce(p, w);
  DehnVerdict v;
  if (r.residual.empty())
    v.outcome = DehnOutcome::Trivial;
  else
    v.outcome = p.c16_certified ? DehnOutcome::NontrivialCertified : DehnOutcome::Unknown;
  v.residual = std::move(r.residual);
  v.trace = std::move(r.trace);
  return v;
}

bool dehn_irreducible(const Presentation& p, const Word& w) {
  check_alphabet(p, w);
  if (p.relators.empty()) return true;
  return !next_step(MemberIndex(p.relators), reduce(w)).has_value();
}

namespace {

using Int = boost::multiprecision::cpp_int;

// Row echelon form over the integers; pivots have positive leading entries.
std::vector<std::vector<Int>> echelon(std::vector<std::vector<Int>> rows, std::size_t cols) {
  std::vector<std::vector<Int>> out;
  for (std::size_t c = 0; c < cols && !rows.empty(); ++c) {
    // Euclid on column c until at most one row is nonzero there.
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (pivot == rows.size() || abs(rows[r][c]) < abs(rows[pivot][c]))) pivot = r;
      if (pivot == rows.size()) break;
      bool others = false;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == pivot || rows[r][c] == 0) continue;
        const Int q = rows[r][c] / rows[pivot][c];
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[pivot][k];
        others = others || rows[r][c] != 0;
      }
      if (others) continue;
      if (rows[pivot][c] < 0)
        for (auto& x : rows[pivot]) x = -x;
      out.push_back(std::move(rows[pivot]));
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
      break;
    }
  }
  return out;
}

}  // namespace

AbelianizationResult abelianization_vector(const Presentation& p, const Word& w) {
  check_alphabet(p, w);
  const std::size_t n = p.alphabet.size();
  AbelianizationResult out;
  out.vector.assign(n, 0);
  for (Letter l : reduce(w)) out.vector[l.gen()] += l.sign();

  std::vector<std::vector<Int>> rows;
  for (std::size_t r : p.relators.primary()) {
    std::vector<Int> row(n, 0);
    for (Letter l : p.relators.relators()[r].word) row[l.gen()] += l.sign();
    rows.push_back(std::move(row));
  }
  const auto basis = echelon(std::move(rows), n);

  std::vector<Int> target(out.vector.begin(), out.vector.end());
  for (const auto& row : basis) {
    std::size_t lead = 0;
    while (row[lead] == 0) ++lead;
    if (target[lead] % row[lead] != 0) return out;
    const Int q = target[lead] / row[lead];
    for (std::size_t k = lead; k < n; ++k) target[k] -= q * row[k];
  }
  out.in_lattice = std::all_of(target.begin(), target.end(), [](const Int& x) { return x == 0; });
  return out;
}

}  // namespace cgtk
