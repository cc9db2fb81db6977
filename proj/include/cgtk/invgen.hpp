#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cgtk/permgroup.hpp"

namespace cgtk {

/// A group with its classes, lattice and per-subgroup coset actions.
class AnalyzedGroup {
public:
  explicit AnalyzedGroup(PermGroup g);

  const PermGroup& group() const { return group_; }
  const ConjugacyClasses& classes() const { return classes_; }
  const std::vector<Subgroup>& lattice() const { return lattice_; }
  const std::vector<std::size_t>& maximal() const { return maximal_; }
  /// Indexed like lattice().
  const CosetAction& action(std::size_t subgroup) const { return actions_[subgroup]; }
  /// Non-identity class representatives.
  std::vector<ElementId> nontrivial_representatives() const;

private:
  PermGroup group_;
  ConjugacyClasses classes_;
  std::vector<Subgroup> lattice_;
  std::vector<std::size_t> maximal_;
  std::vector<CosetAction> actions_;
};

enum class IgWitnessKind { None, ConjugacyCompleteSubgroup, FailingTuple, FixedPointFreeGap };
std::string_view to_string(IgWitnessKind kind);

struct IgVerdict {
  bool invariably_generates = true;
  IgWitnessKind kind = IgWitnessKind::None;
  std::optional<Subgroup> subgroup;
  /// FailingTuple: conjugates[i] = conjugators[i]^-1 s_i conjugators[i].
  std::vector<ElementId> conjugates;
  std::vector<ElementId> conjugators;
};

/// class(x) meets h for every x in s.
bool is_conjugacy_complete(const AnalyzedGroup& g, const Subgroup& h, const std::vector<ElementId>& s);

/// Scans maximal subgroups for a conjugacy-complete one. A proper
/// conjugacy-complete subgroup lies in a maximal subgroup, which is then
/// conjugacy-complete too.
IgVerdict ig_by_subgroups(const AnalyzedGroup& g, const std::vector<ElementId>& s);

inline constexpr std::size_t kDefaultSearchBound = 1000000;

/// Tries every choice of conjugates (class elements) and tests generation.
/// Throws SearchBoundExceeded when the product of class sizes exceeds bound.
IgVerdict ig_by_bruteforce(const AnalyzedGroup& g, const std::vector<ElementId>& s,
                           std::size_t bound = kDefaultSearchBound);

/// Requires, for every proper subgroup h, some x in s acting on G/h without
/// fixed points.
IgVerdict ig_by_actions(const AnalyzedGroup& g, const std::vector<ElementId>& s);

/// Replays a verdict witness against g and s; true for positive verdicts.
bool replay(const AnalyzedGroup& g, const std::vector<ElementId>& s, const IgVerdict& v);

struct MinIgResult {
  std::size_t size = 0;
  std::vector<ElementId> witness;
};

/// Smallest invariably generating set of distinct non-identity class
/// representatives, of size <= bound (bound <= 4). Throws InvalidSpec.
std::optional<MinIgResult> min_ig_size(const AnalyzedGroup& g, std::size_t bound);

struct ExtensionReport {
  bool h_generated = false;         ///< (a) s invariably generates h
  bool quotient_generated = false;  ///< (b) images of s' invariably generate G/N
  bool g_generated = false;         ///< (c) s and s' invariably generate G
  bool hypotheses() const { return h_generated && quotient_generated; }
  bool implication_holds() const { return !hypotheses() || g_generated; }
};

/// Throws PreconditionViolated unless n is normal, n <= h and s lies in h.
ExtensionReport extension_ig_check(const AnalyzedGroup& g, const Subgroup& n, const Subgroup& h,
                                   const std::vector<ElementId>& s, const std::vector<ElementId>& s_prime);

struct FiniteIndexReport {
  Subgroup core;
  std::size_t quotient_order = 0;
  std::optional<MinIgResult> quotient_set;  ///< ids in the quotient group
  std::vector<ElementId> lifted;            ///< preimages in G
  ExtensionReport extension;
  bool success() const { return quotient_set.has_value() && extension.g_generated; }
};

/// Follows the core / quotient / extension path for h and its IG set s.
/// Throws PreconditionViolated unless s invariably generates h.
FiniteIndexReport finite_index_ig_check(const AnalyzedGroup& g, const Subgroup& h, const std::vector<ElementId>& s);

/// h as a group in its own right, with the embedding of its elements.
struct SubgroupAsGroup {
  PermGroup group;
  std::vector<ElementId> to_parent;  ///< per element of `group`
  std::optional<ElementId> from_parent(const PermGroup& parent, ElementId x) const;
};

SubgroupAsGroup subgroup_as_group(const PermGroup& g, const Subgroup& h);

/// Parses "(0 1);(0 1 2)" into element ids. Throws Parse, InvalidSpec.
std::vector<ElementId> parse_element_set(const PermGroup& g, std::string_view text);

}  // namespace cgtk
