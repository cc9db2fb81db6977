#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"

#include "cgtk/error.hpp"
#include "cgtk/permgroup.hpp"

using namespace cgtk;

namespace {

using Raw = std::vector<std::uint32_t>;

Raw compose(const Raw& a, const Raw& b) {
  Raw out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Raw raw_inverse(const Raw& a) {
  Raw out(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) out[a[x]] = x;
  return out;
}

// Subsets of the element list that are closed under products (finite groups).
std::size_t brute_subgroup_count(const PermGroup& g) {
  const std::size_t n = g.order();
  std::vector<Raw> el;
  for (const auto& p : g.elements()) el.push_back(p.images());
  std::map<Raw, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[el[i]] = i;
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
    if (!(bits & 1ULL)) continue;  // element 0 is the identity
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if ((bits >> a & 1ULL) && (bits >> b & 1ULL)) closed = bits >> idx.at(compose(el[a], el[b])) & 1ULL;
    count += closed;
  }
  return count;
}

std::multiset<std::size_t> brute_class_sizes(const PermGroup& g) {
  std::vector<Raw> el;
  for (const auto& p : g.elements()) el.push_back(p.images());
  std::set<Raw> done;
  std::multiset<std::size_t> out;
  for (const auto& x : el) {
    if (done.count(x)) continue;
    std::set<Raw> cls;
    for (const auto& c : el) cls.insert(compose(raw_inverse(c), compose(x, c)));
    done.insert(cls.begin(), cls.end());
    out.insert(cls.size());
  }
  return out;
}

std::size_t divisor_count(std::size_t n) {
  std::size_t d = 0;
  for (std::size_t k = 1; k <= n; ++k) d += n % k == 0;
  return d;
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto a = Permutation::parse("(0 1 2)", 4);
  const auto b = Permutation::parse("(0 1)", 4);
  CHECK(a.str() == "(0 1 2)");
  // (a*b)(x) = a(b(x)): 0 -> b -> 1 -> a -> 2.
  CHECK((a * b)(0) == 2);
  CHECK((a * a.inverse()).is_identity());
  CHECK(Permutation::parse("()", 3).is_identity());
  CHECK(Permutation::parse("(0 1)(2 3)", 4).fixed_points() == 0);
  CHECK_THROWS_AS(Permutation::parse("(0 4)", 4), Error);
  CHECK_THROWS_AS(Permutation::parse("(0 1)(1 2)", 4), Error);
  CHECK_THROWS_AS(Permutation::parse("0 1", 4), Error);
  CHECK_THROWS_AS(Permutation(Raw{0, 0}), Error);
}

TEST_CASE("closure") {
  CHECK(parse_group("deg: 3\ngen: (0 1)\ngen: (0 1 2)\n").order() == 6);
  CHECK(parse_group("deg: 4\n").order() == 1);
  CHECK(parse_group("# c3\ndeg: 3\ngen: (0 1 2)\n").order() == 3);
  CHECK_THROWS_AS(parse_group("deg: 7\ngen: (0 1)\ngen: (0 1 2 3 4 5 6)\n", 100), Error);
  CHECK(parse_group("deg: 7\ngen: (0 1)\ngen: (0 1 2 3 4 5 6)\n").order() == 5040);
  CHECK_THROWS_AS(parse_group("gen: (0 1)\n"), Error);
  const auto g = library_group("S3");
  CHECK(g.element(0).is_identity());
  for (ElementId a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == 0);
    for (ElementId b = 0; b < g.order(); ++b) CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
  }
  CHECK(parse_group(format_group(library_group("D5"))).order() == 10);
}

TEST_CASE("library orders") {
  std::map<std::string, std::size_t> expect{{"S3", 6}, {"S4", 24}, {"D4", 8}, {"D5", 10},
                                            {"D6", 12}, {"Q8", 8},  {"A4", 12}};
  for (int n = 2; n <= 12; ++n) expect["C" + std::to_string(n)] = static_cast<std::size_t>(n);
  for (const auto& name : library_names()) CHECK(library_group(name).order() == expect.at(name));
  CHECK_THROWS_AS(library_group("S9"), Error);
  // Q8 has a unique involution.
  const auto q = library_group("Q8");
  int involutions = 0;
  for (ElementId x = 1; x < q.order(); ++x) involutions += q.mul(x, x) == 0;
  CHECK(involutions == 1);
}

TEST_CASE("conjugacy classes") {
  const auto s3 = conjugacy_classes(library_group("S3"));
  std::multiset<std::size_t> sizes(s3.sizes.begin(), s3.sizes.end());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  CHECK(conjugacy_classes(library_group("C4")).count() == 4);
  CHECK(conjugacy_classes(parse_group("deg: 2\n")).count() == 1);
  for (const auto& name : library_names()) {
    const auto g = library_group(name);
    const auto cc = conjugacy_classes(g);
    CHECK(std::accumulate(cc.sizes.begin(), cc.sizes.end(), std::size_t{0}) == g.order());
    CHECK(std::multiset<std::size_t>(cc.sizes.begin(), cc.sizes.end()) == brute_class_sizes(g));
    for (ElementId x = 0; x < g.order(); ++x)
      for (ElementId c = 0; c < g.order(); ++c) CHECK(cc.class_of[g.conj(x, c)] == cc.class_of[x]);
  }
}

TEST_CASE("subgroup lattice") {
  const auto s3 = library_group("S3");
  const auto lat = subgroup_lattice(s3);
  CHECK(lat.size() == 6);
  CHECK(std::count_if(lat.begin(), lat.end(), [](auto& h) { return h.maximal; }) == 4);
  CHECK(std::count_if(lat.begin(), lat.end(), [](auto& h) { return h.order == 2; }) == 3);
  CHECK(subgroup_lattice(library_group("C7")).size() == 2);

  const std::map<std::string, std::size_t> known{{"S4", 30}, {"A4", 10}, {"D4", 10}, {"Q8", 6},
                                                 {"D5", 8},  {"D6", 16}, {"S3", 6}};
  for (const auto& name : library_names()) {
    const auto g = library_group(name);
    const auto l = subgroup_lattice(g);
    if (name[0] == 'C') CHECK(l.size() == divisor_count(g.order()));
    if (known.count(name)) CHECK(l.size() == known.at(name));
    if (g.order() <= 12) CHECK(l.size() == brute_subgroup_count(g));
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(g.order() % l[i].order == 0);
      if (i > 0) CHECK((l[i - 1].order < l[i].order || (l[i - 1].order == l[i].order && l[i - 1].mask < l[i].mask)));
      const auto again = make_subgroup(g, l[i].mask);
      CHECK(again.normal == l[i].normal);
      CHECK(again.maximal == l[i].maximal);
    }
  }
  CHECK_THROWS_AS(subgroup_lattice(library_group("S4"), 10), Error);
}

TEST_CASE("core, coset action and quotient") {
  const auto s3 = library_group("S3");
  const auto t = generated_subgroup(s3, {s3.index_of(Permutation::parse("(0 1)", 3))});
  CHECK(core(s3, t).order == 1);
  CHECK(core(s3, whole_group(s3)).order == 6);
  const auto a3 = generated_subgroup(s3, {s3.index_of(Permutation::parse("(0 1 2)", 3))});
  CHECK(core(s3, a3) == a3);
  CHECK(coset_action(s3, t).cosets.size() == 3);
  CHECK(coset_action(s3, whole_group(s3)).cosets.size() == 1);
  CHECK(action_kernel(s3, coset_action(s3, a3).action) == a3);
  CHECK(quotient(s3, a3).group.order() == 2);
  CHECK(quotient(s3, trivial_subgroup(s3)).group.order() == 6);
  CHECK_THROWS_AS(quotient(s3, t), Error);
  const auto c6 = library_group("C6");
  const auto c2 = generated_subgroup(c6, {c6.index_of(Permutation::parse("(0 3)(1 4)(2 5)", 6))});
  CHECK(quotient(c6, c2).group.order() == 3);

  for (const auto& name : library_names()) {
    const auto g = library_group(name);
    for (const auto& h : subgroup_lattice(g)) {
      const auto ca = coset_action(g, h);
      CHECK(action_kernel(g, ca.action) == core(g, h));
      CHECK(ca.cosets.size() * h.order == g.order());
      // Transitive, and the identity coset's stabilizer is h.
      std::set<std::uint32_t> orbit;
      for (ElementId x = 0; x < g.order(); ++x) orbit.insert(ca.action[x](0));
      CHECK(orbit.size() == ca.cosets.size());
      for (ElementId x = 0; x < g.order(); ++x) CHECK((ca.action[x](0) == 0) == h.contains(x));
      for (ElementId a = 0; a < g.order(); a += 3)
        for (ElementId b = 0; b < g.order(); b += 2)
          CHECK(ca.action[g.mul(a, b)] == ca.action[a] * ca.action[b]);
      const auto c = core(g, h);
      CHECK(c.normal);
      for (ElementId x = 0; x < g.order(); ++x)
        if (c.contains(x)) CHECK(h.contains(x));
      if (h.normal) CHECK(quotient(g, h).group.order() * h.order == g.order());
    }
  }
}

TEST_CASE("orbit_quotient_action") {
  const auto s3 = library_group("S3");
  const auto t = generated_subgroup(s3, {s3.index_of(Permutation::parse("(0 1)", 3))});
  const auto a3 = generated_subgroup(s3, {s3.index_of(Permutation::parse("(0 1 2)", 3))});
  const auto act = coset_action(s3, t).action;
  const auto o = orbit_quotient_action(s3, a3, act);
  CHECK(o.orbit_count == 1);
  CHECK(orbit_quotient_action(s3, trivial_subgroup(s3), act).orbit_count == 3);
  CHECK_THROWS_AS(orbit_quotient_action(s3, t, act), Error);

  const auto c6 = library_group("C6");
  const auto c3 = generated_subgroup(c6, {c6.index_of(Permutation::parse("(0 2 4)(1 3 5)", 6))});
  const auto reg = coset_action(c6, trivial_subgroup(c6)).action;
  const auto q = orbit_quotient_action(c6, c3, reg);
  CHECK(q.orbit_count == 2);
  CHECK(q.image.order() == 2);
  for (ElementId x = 0; x < c6.order(); ++x)
    if (c3.contains(x)) CHECK(q.action[x].is_identity());
}
