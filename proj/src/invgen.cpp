#include "cgtk/invgen.hpp"

#include <algorithm>
#include <string>

#include "cgtk/error.hpp"

namespace cgtk {

AnalyzedGroup::AnalyzedGroup(PermGroup g)
    : group_(std::move(g)), classes_(conjugacy_classes(group_)), lattice_(subgroup_lattice(group_)) {
  actions_.reserve(lattice_.size());
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    if (lattice_[i].maximal) maximal_.push_back(i);
    actions_.push_back(coset_action(group_, lattice_[i]));
  }
}

std::vector<ElementId> AnalyzedGroup::nontrivial_representatives() const {
  std::vector<ElementId> out;
  for (ElementId r : classes_.representatives)
    if (r != 0) out.push_back(r);
  return out;
}

std::string_view to_string(IgWitnessKind kind) {
  switch (kind) {
    case IgWitnessKind::None: return "None";
    case IgWitnessKind::ConjugacyCompleteSubgroup: return "ConjugacyCompleteSubgroup";
    case IgWitnessKind::FailingTuple: return "FailingTuple";
    case IgWitnessKind::FixedPointFreeGap: return "FixedPointFreeGap";
  }
  return "?";
}

namespace {

std::vector<ElementId> as_set(const PermGroup& g, std::vector<ElementId> s) {
  for (ElementId x : s)
    if (x >= g.order()) throw Error(ErrorCode::InvalidSpec, "element id outside the group");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

ElementId find_conjugator(const PermGroup& g, ElementId x, ElementId y) {
  for (ElementId c = 0; c < g.order(); ++c)
    if (g.conj(x, c) == y) return c;
  throw Error(ErrorCode::PreconditionViolated, "elements are not conjugate");
}

}  // namespace

bool is_conjugacy_complete(const AnalyzedGroup& g, const Subgroup& h, const std::vector<ElementId>& s) {
  const auto& cc = g.classes();
  std::vector<bool> met(cc.count(), false);
  for (ElementId y = 0; y < h.mask.size(); ++y)
    if (h.mask[y]) met[cc.class_of[y]] = true;
  return std::all_of(s.begin(), s.end(), [&](ElementId x) { return met[cc.class_of[x]]; });
}

IgVerdict ig_by_subgroups(const AnalyzedGroup& g, const std::vector<ElementId>& s) {
  const auto set = as_set(g.group(), s);
  for (std::size_t m : g.maximal()) {
    if (!is_conjugacy_complete(g, g.lattice()[m], set)) continue;
    IgVerdict v;
    v.invariably_generates = false;
    v.kind = IgWitnessKind::ConjugacyCompleteSubgroup;
    v.subgroup = g.lattice()[m];
    return v;
  }
  return {};
}

IgVerdict ig_by_bruteforce(const AnalyzedGroup& g, const std::vector<ElementId>& s, std::size_t bound) {
  const PermGroup& G = g.group();
  const auto set = as_set(G, s);
  std::vector<std::vector<ElementId>> choices;
  std::size_t product = 1;
  for (ElementId x : set) {
    choices.push_back(g.classes().members(g.classes().class_of[x]));
    product *= choices.back().size();
    if (product > bound)
      throw Error(ErrorCode::SearchBoundExceeded, "conjugate tuples exceed " + std::to_string(bound));
  }
  // Conjugating a whole tuple preserves what it generates, so the first
  // entry may stay fixed.
  if (!choices.empty()) choices[0] = {set[0]};

  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<ElementId> tuple(choices.size());
  for (;;) {
    for (std::size_t i = 0; i < choices.size(); ++i) tuple[i] = choices[i][pos[i]];
    if (generated_order(G, tuple) < G.order()) {
      IgVerdict v;
      v.invariably_generates = false;
      v.kind = IgWitnessKind::FailingTuple;
      v.conjugates = tuple;
      for (std::size_t i = 0; i < tuple.size(); ++i) v.conjugators.push_back(find_conjugator(G, set[i], tuple[i]));
      return v;
    }
    std::size_t i = 0;
    while (i < pos.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == pos.size()) return {};
  }
}

IgVerdict ig_by_actions(const AnalyzedGroup& g, const std::vector<ElementId>& s) {
  const auto set = as_set(g.group(), s);
  for (std::size_t i = 0; i < g.lattice().size(); ++i) {
    if (!g.lattice()[i].proper()) continue;
    const auto& act = g.action(i).action;
    const bool some_fpf = std::any_of(set.begin(), set.end(), [&](ElementId x) { return act[x].fixed_points() == 0; });
    if (some_fpf) continue;
    IgVerdict v;
    v.invariably_generates = false;
    v.kind = IgWitnessKind::FixedPointFreeGap;
    v.subgroup = g.lattice()[i];
    return v;
  }
  return {};
}

bool replay(const AnalyzedGroup& g, const std::vector<ElementId>& s, const IgVerdict& v) {
  const PermGroup& G = g.group();
  const auto set = as_set(G, s);
  switch (v.kind) {
    case IgWitnessKind::None:
      return v.invariably_generates;
    case IgWitnessKind::ConjugacyCompleteSubgroup:
      return !v.invariably_generates && v.subgroup && v.subgroup->proper() &&
             is_conjugacy_complete(g, *v.subgroup, set);
    case IgWitnessKind::FixedPointFreeGap: {
      if (v.invariably_generates || !v.subgroup || !v.subgroup->proper()) return false;
      const auto ca = coset_action(G, *v.subgroup);
      return std::all_of(set.begin(), set.end(), [&](ElementId x) { return ca.action[x].fixed_points() > 0; });
    }
    case IgWitnessKind::FailingTuple: {
      if (v.invariably_generates || v.conjugates.size() != set.size() || v.conjugators.size() != set.size())
        return false;
      for (std::size_t i = 0; i < set.size(); ++i)
        if (G.conj(set[i], v.conjugators[i]) != v.conjugates[i]) return false;
      return generated_order(G, v.conjugates) < G.order();
    }
  }
  return false;
}

std::optional<MinIgResult> min_ig_size(const AnalyzedGroup& g, std::size_t bound) {
  if (bound > 4) throw Error(ErrorCode::InvalidSpec, "min_ig_size bound must be at most 4");
  if (g.group().order() == 1) return MinIgResult{};
  const auto reps = g.nontrivial_representatives();
  for (std::size_t k = 1; k <= bound && k <= reps.size(); ++k) {
    std::vector<bool> pick(reps.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    // prev_permutation on a true-first mask visits subsets in lexicographic order.
    do {
      std::vector<ElementId> s;
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (pick[i]) s.push_back(reps[i]);
      if (ig_by_subgroups(g, s).invariably_generates) return MinIgResult{k, s};
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

std::optional<ElementId> SubgroupAsGroup::from_parent(const PermGroup& parent, ElementId x) const {
  return group.find(parent.element(x));
}

SubgroupAsGroup subgroup_as_group(const PermGroup& g, const Subgroup& h) {
  std::vector<ElementId> gens;
  std::size_t reached = 1;
  for (ElementId x : h.elements()) {
    if (reached == h.order) break;
    gens.push_back(x);
    const std::size_t now = generated_order(g, gens);
    if (now == reached)
      gens.pop_back();
    else
      reached = now;
  }
  std::vector<Permutation> perms;
  for (ElementId x : gens) perms.push_back(g.element(x));
  SubgroupAsGroup out{PermGroup::closure(g.degree(), std::move(perms), g.order()), {}};
  for (const auto& p : out.group.elements()) out.to_parent.push_back(g.index_of(p));
  return out;
}

ExtensionReport extension_ig_check(const AnalyzedGroup& g, const Subgroup& n, const Subgroup& h,
                                   const std::vector<ElementId>& s, const std::vector<ElementId>& s_prime) {
  const PermGroup& G = g.group();
  if (n.mask.size() != G.order() || h.mask.size() != G.order())
    throw Error(ErrorCode::PreconditionViolated, "subgroup masks do not match the group");
  if (!is_normal(G, n.mask)) throw Error(ErrorCode::PreconditionViolated, "N is not normal in G");
  for (ElementId x = 0; x < G.order(); ++x)
    if (n.mask[x] && !h.mask[x]) throw Error(ErrorCode::PreconditionViolated, "N is not contained in H");
  for (ElementId x : as_set(G, s))
    if (!h.mask[x]) throw Error(ErrorCode::PreconditionViolated, "S is not contained in H");
  const auto sp = as_set(G, s_prime);

  ExtensionReport r;
  {
    const auto hg = subgroup_as_group(G, h);
    const AnalyzedGroup ha(hg.group);
    std::vector<ElementId> local;
    for (ElementId x : s) local.push_back(*hg.from_parent(G, x));
    r.h_generated = ig_by_subgroups(ha, local).invariably_generates;
  }
  {
    const auto q = quotient(G, n);
    const AnalyzedGroup qa(q.group);
    std::vector<ElementId> images;
    for (ElementId x : sp) images.push_back(q.image[x]);
    r.quotient_generated = ig_by_subgroups(qa, images).invariably_generates;
  }
  std::vector<ElementId> both(s.begin(), s.end());
  both.insert(both.end(), sp.begin(), sp.end());
  r.g_generated = ig_by_subgroups(g, both).invariably_generates;
  return r;
}

FiniteIndexReport finite_index_ig_check(const AnalyzedGroup& g, const Subgroup& h, const std::vector<ElementId>& s) {
  const PermGroup& G = g.group();
  for (ElementId x : as_set(G, s))
    if (!h.mask[x]) throw Error(ErrorCode::PreconditionViolated, "S is not contained in H");
  {
    const auto hg = subgroup_as_group(G, h);
    const AnalyzedGroup ha(hg.group);
    std::vector<ElementId> local;
    for (ElementId x : s) local.push_back(*hg.from_parent(G, x));
    if (!ig_by_subgroups(ha, local).invariably_generates)
      throw Error(ErrorCode::PreconditionViolated, "S does not invariably generate H");
  }

  FiniteIndexReport r;
  r.core = core(G, h);
  const auto q = quotient(G, r.core);
  r.quotient_order = q.group.order();
  const AnalyzedGroup qa(q.group);
  r.quotient_set = min_ig_size(qa, 4);
  if (!r.quotient_set) return r;
  for (ElementId target : r.quotient_set->witness) {
    const auto it = std::find(q.image.begin(), q.image.end(), target);
    r.lifted.push_back(static_cast<ElementId>(it - q.image.begin()));
  }
  r.extension = extension_ig_check(g, r.core, h, s, r.lifted);
  return r;
}

std::vector<ElementId> parse_element_set(const PermGroup& g, std::string_view text) {
  std::vector<ElementId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const auto tok = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    if (tok.find_first_not_of(" \t") != std::string_view::npos)
      out.push_back(g.index_of(Permutation::parse(tok, g.degree())));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace cgtk
