#include "cgtk/permgroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cgtk/error.hpp"
#include "cgtk/presentation.hpp"

namespace cgtk {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorCode::InvalidSpec, "images do not form a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::Parse, "expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw Error(ErrorCode::Parse, "unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw Error(ErrorCode::Parse, "bad point in '" + std::string(text) + "'");
      i = static_cast<std::size_t>(ptr - text.data());
      if (v >= degree) throw Error(ErrorCode::Parse, "point " + std::to_string(v) + " exceeds degree");
      if (used[v]) throw Error(ErrorCode::Parse, "point " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) im[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::uint32_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Permutation::fixed_points() const {
  std::size_t n = 0;
  for (std::uint32_t x = 0; x < images_.size(); ++x) n += images_[x] == x;
  return n;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) im[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    for (std::uint32_t y = x; !seen[y]; y = images_[y]) {
      if (y != x) out += ' ';
      out += std::to_string(y);
      seen[y] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t x = 0; x < b.images_.size(); ++x) p.images_[x] = a.images_[b.images_[x]];
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {
constexpr std::size_t kTableLimit = 1024;
}

PermGroup PermGroup::closure(std::size_t degree, std::vector<Permutation> generators, std::size_t order_bound) {
  for (const auto& p : generators)
    if (p.degree() != degree) throw Error(ErrorCode::InvalidSpec, "generator degree mismatch");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::erase_if(generators, [](const Permutation& p) { return p.is_identity(); });

  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.elements_.push_back(Permutation::identity(degree));
  g.index_.emplace(g.elements_[0], 0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : g.generators_) {
      Permutation p = s * g.elements_[i];
      if (g.index_.count(p)) continue;
      if (g.elements_.size() >= order_bound)
        throw Error(ErrorCode::OrderBoundExceeded, "group order exceeds " + std::to_string(order_bound));
      g.index_.emplace(p, static_cast<ElementId>(g.elements_.size()));
      g.elements_.push_back(std::move(p));
    }
  }
  for (const auto& s : g.generators_) g.generator_ids_.push_back(g.index_.at(s));
  g.inverse_.resize(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) g.inverse_[i] = g.index_.at(g.elements_[i].inverse());

  const std::size_t n = g.elements_.size();
  if (n <= kTableLimit) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = static_cast<std::uint16_t>(g.index_.at(g.elements_[a] * g.elements_[b]));
  }
  return g;
}

std::optional<ElementId> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId PermGroup::index_of(const Permutation& p) const {
  if (auto i = find(p)) return *i;
  throw Error(ErrorCode::InvalidSpec, "permutation " + p.str() + " is not in the group");
}

ElementId PermGroup::mul(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

PermGroup parse_group(std::string_view text, std::size_t order_bound) {
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto [key, value] = detail::split_directive(line);
    if (key.empty() && value.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (key == "deg") {
      std::size_t d = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc() || ptr != value.data() + value.size() || d == 0)
        throw Error(ErrorCode::Parse, where + "bad degree '" + value + "'");
      degree = d;
    } else if (key == "gen") {
      if (!degree) throw Error(ErrorCode::Parse, where + "'gen' before 'deg'");
      gens.push_back(Permutation::parse(value, *degree));
    } else {
      throw Error(ErrorCode::Parse, where + "unknown directive '" + key + "'");
    }
  }
  if (!degree) throw Error(ErrorCode::Parse, "missing 'deg' line");
  return PermGroup::closure(*degree, std::move(gens), order_bound);
}

std::vector<ElementId> Subgroup::elements() const {
  std::vector<ElementId> out;
  for (ElementId i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

namespace {

ElementMask closure_mask(const PermGroup& g, const std::vector<ElementId>& gens, std::vector<ElementId>* list = nullptr) {
  ElementMask mask(g.order(), false);
  std::vector<ElementId> elems{0};
  mask[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (ElementId s : gens) {
      const ElementId p = g.mul(s, elems[i]);
      if (!mask[p]) {
        mask[p] = true;
        elems.push_back(p);
      }
    }
  if (list) *list = std::move(elems);
  return mask;
}

std::size_t popcount(const ElementMask& m) { return static_cast<std::size_t>(std::count(m.begin(), m.end(), true)); }

bool is_subset(const ElementMask& a, const ElementMask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return a.mask < b.mask;
}

}  // namespace

std::size_t generated_order(const PermGroup& g, const std::vector<ElementId>& gens) {
  return popcount(closure_mask(g, gens));
}

bool is_normal(const PermGroup& g, const ElementMask& mask) {
  for (ElementId h = 0; h < mask.size(); ++h) {
    if (!mask[h]) continue;
    for (ElementId s : g.generator_ids())
      if (!mask[g.conj(h, s)]) return false;
  }
  return true;
}

Subgroup make_subgroup(const PermGroup& g, ElementMask mask) {
  Subgroup h;
  h.order = popcount(mask);
  h.normal = is_normal(g, mask);
  if (h.order < g.order()) {
    // Maximal iff adjoining any outside element yields G.
    std::vector<ElementId> gens;
    for (ElementId i = 0; i < mask.size(); ++i)
      if (mask[i]) gens.push_back(i);
    h.maximal = true;
    for (ElementId x = 0; x < mask.size() && h.maximal; ++x) {
      if (mask[x]) continue;
      gens.push_back(x);
      h.maximal = generated_order(g, gens) == g.order();
      gens.pop_back();
    }
  }
  h.mask = std::move(mask);
  return h;
}

Subgroup generated_subgroup(const PermGroup& g, const std::vector<ElementId>& gens) {
  return make_subgroup(g, closure_mask(g, gens));
}

Subgroup whole_group(const PermGroup& g) { return make_subgroup(g, ElementMask(g.order(), true)); }

Subgroup trivial_subgroup(const PermGroup& g) {
  ElementMask m(g.order(), false);
  m[0] = true;
  return make_subgroup(g, std::move(m));
}

std::vector<ElementId> ConjugacyClasses::members(std::size_t c) const {
  std::vector<ElementId> out;
  for (ElementId i = 0; i < class_of.size(); ++i)
    if (class_of[i] == c) out.push_back(i);
  return out;
}

ConjugacyClasses conjugacy_classes(const PermGroup& g) {
  ConjugacyClasses cc;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  cc.class_of.assign(g.order(), unset);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (cc.class_of[x] != unset) continue;
    const std::size_t id = cc.representatives.size();
    cc.representatives.push_back(x);
    std::vector<ElementId> orbit{x};
    cc.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElementId s : g.generator_ids()) {
        const ElementId y = g.conj(orbit[i], s);
        if (cc.class_of[y] == unset) {
          cc.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    cc.sizes.push_back(orbit.size());
  }
  return cc;
}

std::vector<Subgroup> subgroup_lattice(const PermGroup& g, std::size_t order_bound) {
  if (g.order() > order_bound)
    throw Error(ErrorCode::OrderBoundExceeded, "lattice requested for order " + std::to_string(g.order()));

  struct Found {
    ElementMask mask;
    std::vector<ElementId> gens;
  };
  std::vector<Found> found;
  std::unordered_set<ElementMask> seen;
  std::vector<ElementId> cyclic_gens;  // one generator per cyclic subgroup
  for (ElementId x = 0; x < g.order(); ++x) {
    ElementMask m = closure_mask(g, {x});
    if (seen.insert(m).second) {
      found.push_back({std::move(m), {x}});
      cyclic_gens.push_back(x);
    }
  }
  // ⟨H, x⟩ depends only on ⟨x⟩, so cyclic generators suffice for extensions.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (ElementId x : cyclic_gens) {
      if (found[i].mask[x]) continue;
      std::vector<ElementId> gens = found[i].gens;
      gens.push_back(x);
      ElementMask m = closure_mask(g, gens);
      if (seen.insert(m).second) found.push_back({std::move(m), std::move(gens)});
    }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) {
    Subgroup h;
    h.order = popcount(f.mask);
    h.normal = is_normal(g, f.mask);
    h.mask = std::move(f.mask);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  for (auto& h : out) {
    if (!h.proper()) continue;
    h.maximal = std::none_of(out.begin(), out.end(), [&](const Subgroup& k) {
      return k.proper() && k.order > h.order && is_subset(h.mask, k.mask);
    });
  }
  return out;
}

Subgroup core(const PermGroup& g, const Subgroup& h) {
  ElementMask m = h.mask;
  for (ElementId c = 0; c < g.order(); ++c)
    for (ElementId x = 0; x < g.order(); ++x)
      if (m[x] && !h.mask[g.conj(x, g.inv(c))]) m[x] = false;
  return make_subgroup(g, std::move(m));
}

CosetAction coset_action(const PermGroup& g, const Subgroup& h) {
  CosetAction ca;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  ca.coset_of.assign(g.order(), unset);
  const auto hs = h.elements();
  for (ElementId a = 0; a < g.order(); ++a) {
    if (ca.coset_of[a] != unset) continue;
    std::vector<ElementId> coset;
    for (ElementId x : hs) {
      const ElementId y = g.mul(a, x);
      ca.coset_of[y] = ca.cosets.size();
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    ca.cosets.push_back(std::move(coset));
  }
  ca.action.reserve(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    std::vector<std::uint32_t> im(ca.cosets.size());
    for (std::size_t c = 0; c < ca.cosets.size(); ++c)
      im[c] = static_cast<std::uint32_t>(ca.coset_of[g.mul(x, ca.cosets[c].front())]);
    ca.action.emplace_back(std::move(im));
  }
  return ca;
}

Subgroup action_kernel(const PermGroup& g, const std::vector<Permutation>& action) {
  ElementMask m(g.order(), false);
  for (ElementId x = 0; x < g.order(); ++x) m[x] = action.at(x).is_identity();
  return make_subgroup(g, std::move(m));
}

Quotient quotient(const PermGroup& g, const Subgroup& n) {
  if (!is_normal(g, n.mask)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  const auto ca = coset_action(g, n);
  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) gens.push_back(ca.action[s]);
  Quotient q{PermGroup::closure(ca.cosets.size(), std::move(gens), g.order()), {}};
  q.image.reserve(g.order());
  for (ElementId x = 0; x < g.order(); ++x) q.image.push_back(q.group.index_of(ca.action[x]));
  return q;
}

OrbitQuotientAction orbit_quotient_action(const PermGroup& g, const Subgroup& n,
                                          const std::vector<Permutation>& action) {
  if (!is_normal(g, n.mask)) throw Error(ErrorCode::NotNormal, "orbit quotient by a non-normal subgroup");
  if (action.size() != g.order()) throw Error(ErrorCode::InvalidSpec, "action must list one permutation per element");
  const std::size_t d = action.front().degree();

  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementId x = 0; x < g.order(); ++x) {
    if (!n.mask[x]) continue;
    for (std::uint32_t p = 0; p < d; ++p) {
      const auto a = root(p), b = root(action[x](p));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  OrbitQuotientAction out;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id_of_root(d, unset);
  std::vector<std::uint32_t> rep;
  out.orbit_of.resize(d);
  for (std::uint32_t p = 0; p < d; ++p) {
    const auto r = root(p);
    if (id_of_root[r] == unset) {
      id_of_root[r] = rep.size();
      rep.push_back(p);
    }
    out.orbit_of[p] = id_of_root[r];
  }
  out.orbit_count = rep.size();
  for (ElementId x = 0; x < g.order(); ++x) {
    std::vector<std::uint32_t> im(out.orbit_count);
    for (std::size_t o = 0; o < out.orbit_count; ++o)
      im[o] = static_cast<std::uint32_t>(out.orbit_of[action[x](rep[o])]);
    out.action.emplace_back(std::move(im));
  }
  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) gens.push_back(out.action[s]);
  out.image = PermGroup::closure(out.orbit_count, std::move(gens), g.order());
  return out;
}

namespace {

Permutation cycle_perm(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  for (std::uint32_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation(std::move(im));
}

Permutation reflection(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  for (std::uint32_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>((n - i) % n);
  return Permutation(std::move(im));
}

// Unit quaternions +-1, +-i, +-j, +-k as 2*basis + sign bit.
std::uint32_t quat_mul(std::uint32_t a, std::uint32_t b) {
  // basis products e_a e_b = sign * e_c for a, b in {1, i, j, k}
  static constexpr int kBasis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kNeg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const std::uint32_t ea = a >> 1, eb = b >> 1;
  const std::uint32_t sign = (a & 1U) ^ (b & 1U) ^ static_cast<std::uint32_t>(kNeg[ea][eb]);
  return 2U * static_cast<std::uint32_t>(kBasis[ea][eb]) + sign;
}

Permutation quat_left(std::uint32_t q) {
  std::vector<std::uint32_t> im(8);
  for (std::uint32_t x = 0; x < 8; ++x) im[x] = quat_mul(q, x);
  return Permutation(std::move(im));
}

}  // namespace

std::vector<std::string> library_names() {
  std::vector<std::string> out;
  for (int n = 2; n <= 12; ++n) out.push_back("C" + std::to_string(n));
  for (const char* s : {"S3", "S4", "D4", "D5", "D6", "Q8", "A4"}) out.emplace_back(s);
  return out;
}

PermGroup library_group(std::string_view name) {
  const std::string n(name);
  if (n.size() >= 2 && n[0] == 'C') {
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(n.data() + 1, n.data() + n.size(), k);
    if (ec == std::errc() && ptr == n.data() + n.size() && k >= 1) return PermGroup::closure(k, {cycle_perm(k)});
  }
  if (n == "S3") return PermGroup::closure(3, {Permutation::parse("(0 1)", 3), cycle_perm(3)});
  if (n == "S4") return PermGroup::closure(4, {Permutation::parse("(0 1)", 4), cycle_perm(4)});
  if (n.size() == 2 && n[0] == 'D' && n[1] >= '3' && n[1] <= '9') {
    const std::size_t k = static_cast<std::size_t>(n[1] - '0');
    return PermGroup::closure(k, {cycle_perm(k), reflection(k)});
  }
  if (n == "Q8") return PermGroup::closure(8, {quat_left(2), quat_left(4)});
  if (n == "A4") return PermGroup::closure(4, {Permutation::parse("(0 1 2)", 4), Permutation::parse("(0 1)(2 3)", 4)});
  throw Error(ErrorCode::InvalidSpec, "unknown library group '" + n + "'");
}

std::string format_group(const PermGroup& g) {
  std::string out = "deg: " + std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators()) out += "gen: " + p.str() + "\n";
  return out;
}

}  // namespace cgtk
