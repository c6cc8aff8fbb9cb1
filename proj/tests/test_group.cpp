#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>
#include <vector>

#include "stabring/group.hpp"

using namespace stabring;

TEST_SUITE_BEGIN("group");

TEST_CASE("cyclic group basics") {
  const auto g = FiniteAbelianGroup::cyclic(12);
  CHECK(g.order() == 12);
  CHECK(g.rank() == 1);
  CHECK(g.spec_string() == "Z/12");
  CHECK(g.element(5).residues == std::vector<std::int64_t>{5});
  CHECK(g.add_indices(7, 8) == 3);
  CHECK(g.negate_index(5) == 7);
  CHECK(g.negate_index(0) == 0);
  CHECK(g.sub_indices(3, 7) == 8);
  CHECK(g.index_of(g.identity()) == 0);
}

TEST_CASE("product group indexing: first factor most significant") {
  const FiniteAbelianGroup g({2, 3});
  CHECK(g.order() == 6);
  CHECK(g.spec_string() == "Z/2xZ/3");
  CHECK(g.element(4).residues == std::vector<std::int64_t>{1, 1});
  CHECK(g.index_of(GroupElement{{1, 2}}) == 5);
  CHECK(g.add_indices(4, 5) == 0);  // (1,1)+(1,2) = (0,0)
  for (std::int64_t i = 0; i < g.order(); ++i)
    CHECK(g.index_of(g.element(i)) == i);
}

TEST_CASE("group validation") {
  CHECK_THROWS_AS(FiniteAbelianGroup({1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup({}), std::invalid_argument);
}

TEST_CASE("subset normalization and operations") {
  const auto g = FiniteAbelianGroup::cyclic(10);
  const GroupSubset a(g, {8, 2, 2, 4, 6});
  CHECK(a.members() == std::vector<std::int64_t>{2, 4, 6, 8});
  CHECK(a.contains(4));
  CHECK_FALSE(a.contains(5));

  const GroupSubset shifted = subset_translate(a, 2);
  CHECK(shifted.members() == std::vector<std::int64_t>{0, 4, 6, 8});

  const GroupSubset comp = subset_complement(a);
  CHECK(comp.members() == std::vector<std::int64_t>{0, 1, 3, 5, 7, 9});
  CHECK(subset_union(a, comp).size() == 10);
}

TEST_CASE("character values on Z/4") {
  const auto g = FiniteAbelianGroup::cyclic(4);
  const Character chi = character_from_index(g, 1);
  const auto v = character_value(g, chi, g.element(2));
  CHECK(std::abs(v - std::complex<double>(-1.0, 0.0)) < 1e-15);
  const auto w = character_value(g, chi, g.element(1));
  CHECK(std::abs(w - std::complex<double>(0.0, 1.0)) < 1e-15);
}

TEST_CASE("dft magnitudes of {0,2} in Z/4") {
  const auto g = FiniteAbelianGroup::cyclic(4);
  const std::vector<double> mags = dft_magnitudes(GroupSubset(g, {0, 2}));
  REQUIRE(mags.size() == 4);
  CHECK(mags[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mags[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mags[2] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mags[3] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("parseval: sum of squared magnitudes is |G|*|A|") {
  for (const auto& g :
       {FiniteAbelianGroup::cyclic(12), FiniteAbelianGroup({2, 3, 4})}) {
    // a few structured sets plus a fixed pseudo-random one
    const std::vector<std::vector<std::int64_t>> sets = {
        {}, {0}, {0, 1, 2}, {1, 5, 7, 11}, {0, 2, 4, 6, 8, 10}};
    for (const auto& members : sets) {
      const GroupSubset a(g, members);
      double total = 0.0;
      for (double m : dft_magnitudes(a)) total += m * m;
      CHECK(total == doctest::Approx(static_cast<double>(g.order() * a.size()))
                         .epsilon(1e-10));
    }
  }
}

namespace {

// Brute-force coset oracle: enumerate all subgroups (subsets containing the
// identity and closed under addition), then all of their cosets.
bool brute_is_coset(const GroupSubset& a) {
  const auto& g = a.group();
  const std::int64_t n = g.order();
  if (a.empty()) return false;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    if (!(mask & 1)) continue;  // must contain 0
    std::vector<std::int64_t> h;
    for (std::int64_t e = 0; e < n; ++e)
      if (mask >> e & 1) h.push_back(e);
    bool closed = true;
    for (std::int64_t x : h)
      for (std::int64_t y : h)
        if (!(mask >> g.add_indices(x, y) & 1)) closed = false;
    if (!closed) continue;
    for (std::int64_t t = 0; t < n; ++t) {
      std::set<std::int64_t> coset;
      for (std::int64_t x : h) coset.insert(g.add_indices(x, t));
      if (std::vector<std::int64_t>(coset.begin(), coset.end()) == a.members())
        return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("coset test: frozen cases") {
  const auto g = FiniteAbelianGroup::cyclic(10);

  const auto c = coset_test(GroupSubset(g, {1, 6}));
  REQUIRE(c.has_value());
  CHECK(c->subgroup.members() == std::vector<std::int64_t>{0, 5});
  CHECK(c->representative.residues == std::vector<std::int64_t>{1});

  CHECK_FALSE(coset_test(GroupSubset(g, {0, 1, 2})).has_value());
  CHECK_FALSE(coset_test(GroupSubset(g, {})).has_value());

  const auto full = coset_test(GroupSubset(g, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  REQUIRE(full.has_value());
  CHECK(full->subgroup.size() == 10);

  const auto single = coset_test(GroupSubset(g, {3}));
  REQUIRE(single.has_value());
  CHECK(single->subgroup.members() == std::vector<std::int64_t>{0});
  CHECK(single->representative.residues == std::vector<std::int64_t>{3});
}

TEST_CASE("coset test agrees with subgroup-enumeration oracle") {
  for (const auto& g : {FiniteAbelianGroup::cyclic(8), FiniteAbelianGroup({2, 3})}) {
    const std::int64_t n = g.order();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::vector<std::int64_t> members;
      for (std::int64_t e = 0; e < n; ++e)
        if (mask >> e & 1) members.push_back(e);
      const GroupSubset a(g, members);
      CHECK(coset_test(a).has_value() == brute_is_coset(a));
    }
  }
}

TEST_CASE("coset test result decomposes the set") {
  const FiniteAbelianGroup g({2, 4});
  const GroupSubset a(g, {1, 3});  // (0,1) + {(0,0),(0,2)}
  const auto c = coset_test(a);
  REQUIRE(c.has_value());
  std::set<std::int64_t> rebuilt;
  const std::int64_t rep = g.index_of(c->representative);
  for (std::int64_t h : c->subgroup.members())
    rebuilt.insert(g.add_indices(rep, h));
  CHECK(std::vector<std::int64_t>(rebuilt.begin(), rebuilt.end()) == a.members());
}

TEST_SUITE_END();
