#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cgtk {

/// Bijection of {0..d-1}. Product convention: (a * b)(x) = a(b(x)), so the
/// left factor is applied last.
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidSpec unless images is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  /// Cycle notation "(0 1 2)(3 4)", 0-based; "()" is the identity.
  static Permutation parse(std::string_view cycles, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  bool is_identity() const;
  std::size_t fixed_points() const;
  Permutation inverse() const;
  std::string str() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultOrderBound = 5040;

/// Fully enumerated permutation group; element 0 is the identity.
class PermGroup {
public:
  /// Breadth-first closure from the sorted, deduplicated generators.
  /// Throws OrderBoundExceeded, InvalidSpec (degree mismatch).
  static PermGroup closure(std::size_t degree, std::vector<Permutation> generators,
                           std::size_t order_bound = kDefaultOrderBound);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  const Permutation& element(ElementId i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::optional<ElementId> find(const Permutation& p) const;
  /// Throws InvalidSpec if p is not in the group.
  ElementId index_of(const Permutation& p) const;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// g^-1 x g.
  ElementId conj(ElementId x, ElementId g) const { return mul(inv(g), mul(x, g)); }

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint16_t> table_;  // order x order products when small
};

/// Group file: `deg: n`, then `gen: (i j k)(l m)` lines; '#' comments.
PermGroup parse_group(std::string_view text, std::size_t order_bound = kDefaultOrderBound);

using ElementMask = std::vector<bool>;

struct Subgroup {
  ElementMask mask;
  std::size_t order = 0;
  bool normal = false;
  bool maximal = false;

  bool contains(ElementId e) const { return mask[e]; }
  std::vector<ElementId> elements() const;
  bool proper() const { return order < mask.size(); }
  bool operator==(const Subgroup& o) const { return mask == o.mask; }
};

/// Closure of the given elements, with normal and maximal flags.
Subgroup generated_subgroup(const PermGroup& g, const std::vector<ElementId>& gens);
/// Flags a mask already known to be a subgroup.
Subgroup make_subgroup(const PermGroup& g, ElementMask mask);
std::size_t generated_order(const PermGroup& g, const std::vector<ElementId>& gens);
bool is_normal(const PermGroup& g, const ElementMask& mask);
Subgroup whole_group(const PermGroup& g);
Subgroup trivial_subgroup(const PermGroup& g);

struct ConjugacyClasses {
  std::vector<std::size_t> class_of;
  std::vector<ElementId> representatives;  ///< least element id per class
  std::vector<std::size_t> sizes;

  std::size_t count() const { return representatives.size(); }
  std::vector<ElementId> members(std::size_t c) const;
};

ConjugacyClasses conjugacy_classes(const PermGroup& g);

/// Every subgroup, ordered by (order, mask). Throws OrderBoundExceeded.
std::vector<Subgroup> subgroup_lattice(const PermGroup& g, std::size_t order_bound = kDefaultOrderBound);

/// Intersection of all conjugates g^-1 H g.
Subgroup core(const PermGroup& g, const Subgroup& h);

/// Left action x . (aH) = (xa)H on the cosets, in order of first element.
struct CosetAction {
  std::vector<std::vector<ElementId>> cosets;
  std::vector<std::size_t> coset_of;   ///< per element of G
  std::vector<Permutation> action;     ///< per element of G
};

CosetAction coset_action(const PermGroup& g, const Subgroup& h);
Subgroup action_kernel(const PermGroup& g, const std::vector<Permutation>& action);

struct Quotient {
  PermGroup group;
  std::vector<ElementId> image;  ///< per element of G, index in `group`
};

/// G/N realised by the action on cosets of N. Throws NotNormal.
Quotient quotient(const PermGroup& g, const Subgroup& n);

struct OrbitQuotientAction {
  std::vector<std::size_t> orbit_of;     ///< per point
  std::size_t orbit_count = 0;
  std::vector<Permutation> action;       ///< per element of G, on orbits
  PermGroup image;
};

/// Merges the points into N-orbits and returns the induced action.
/// Throws NotNormal, InvalidSpec (action not indexed by G).
OrbitQuotientAction orbit_quotient_action(const PermGroup& g, const Subgroup& n,
                                          const std::vector<Permutation>& action);

/// Named small groups: C2..C12, S3, S4, D4, D5, D6, Q8 (regular), A4.
std::vector<std::string> library_names();
PermGroup library_group(std::string_view name);
/// Degree and generator text in group-file syntax.
std::string format_group(const PermGroup& g);

}  // namespace cgtk
