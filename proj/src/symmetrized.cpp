#include "cgtk/symmetrized.hpp"

#include <algorithm>

#include "cgtk/error.hpp"

namespace cgtk {

Word SymmetrizedSet::member_word(std::size_t i) const { return member_word(members_[i]); }

Word SymmetrizedSet::member_word(const MemberRef& m) const {
  return rotate(relators_[m.relator].word, m.offset);
}

std::size_t SymmetrizedSet::member_index(std::size_t relator, std::size_t offset) const {
  return first_member_[relator] + offset % relators_[relator].period;
}

std::vector<Word> SymmetrizedSet::closure() const {
  std::vector<Word> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(member_word(m));
  std::sort(out.begin(), out.end());
  return out;
}

bool SymmetrizedSet::contains(const Word& w) const {
  if (w.empty() || !is_cyclically_reduced(w)) return false;
  return by_canonical_.count(least_rotation(w)) > 0;
}

std::size_t SymmetrizedSet::min_length() const {
  std::size_t best = 0;
  for (const auto& r : relators_)
    if (best == 0 || r.word.size() < best) best = r.word.size();
  return best;
}

std::size_t SymmetrizedSet::max_length() const {
  std::size_t best = 0;
  for (const auto& r : relators_) best = std::max(best, r.word.size());
  return best;
}

bool same_closure(const SymmetrizedSet& a, const SymmetrizedSet& b) {
  if (a.relators_.size() != b.relators_.size()) return false;
  for (const auto& r : a.relators_)
    if (!b.by_canonical_.count(r.word)) return false;
  return true;
}

SymmetrizedSet symmetrize(const Alphabet& alphabet, std::span<const Word> seeds) {
  SymmetrizedSet out;
  out.alphabet_ = alphabet;
  out.seeds_.assign(seeds.begin(), seeds.end());

  auto add_cyclic = [&](const Word& core, std::size_t seed, bool inverted) -> std::pair<std::size_t, bool> {
    Word canonical = least_rotation(core);
    if (auto it = out.by_canonical_.find(canonical); it != out.by_canonical_.end())
      return {it->second, false};
    const std::size_t idx = out.relators_.size();
    CyclicRelator r;
    r.period = rotation_period(canonical);
    r.word = std::move(canonical);
    r.seed = seed;
    r.inverted = inverted;
    out.by_canonical_.emplace(r.word, idx);
    out.relators_.push_back(std::move(r));
    return {idx, true};
  };

  for (std::size_t s = 0; s < seeds.size(); ++s) {
    if (seeds[s].generator_bound() > alphabet.size())
      throw Error(ErrorCode::UnknownGenerator, "seed " + std::to_string(s) + " uses a letter outside the alphabet");
    const Word core = cyclic_reduce(seeds[s]).core;
    if (core.empty()) throw Error(ErrorCode::EmptyRelator, "seed " + std::to_string(s) + " is trivial");
    auto [fwd, fresh] = add_cyclic(core, s, false);
    if (!fresh) continue;
    auto [bwd, fresh_inv] = add_cyclic(invert(core), s, true);
    // A nontrivial free-group element is never conjugate to its inverse.
    (void)fresh_inv;
    out.relators_[fwd].partner = bwd;
    out.relators_[bwd].partner = fwd;
    out.primary_.push_back(fwd);
  }

  out.first_member_.reserve(out.relators_.size());
  for (std::size_t r = 0; r < out.relators_.size(); ++r) {
    out.first_member_.push_back(out.members_.size());
    for (std::size_t k = 0; k < out.relators_[r].period; ++k) out.members_.push_back({r, k});
  }
  return out;
}

}  // namespace cgtk
