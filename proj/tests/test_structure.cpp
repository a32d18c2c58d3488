#include <gtest/gtest.h>

#include "autz/builtins.hpp"
#include "autz/corpus.hpp"
#include "autz/io.hpp"
#include "autz/structure.hpp"
#include "oracles.hpp"

using namespace autz;

namespace {

std::vector<std::size_t> orders(const std::vector<Subgroup>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.order());
  return out;
}

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no autz::Error thrown";
  return Errc::ParseError;
}

bool is_closed(const Group& g, const Subgroup& s) {
  auto m = s.mask();
  for (Elem a : s.elements) {
    if (!m[g.inv(a)]) return false;
    for (Elem b : s.elements)
      if (!m[g.mul(a, b)]) return false;
  }
  return s.elements.front() == 0 && std::is_sorted(s.elements.begin(), s.elements.end());
}

// Corpus groups small enough for quadratic scans in every test.
std::vector<Group> small_corpus() {
  std::vector<Group> out;
  for (const auto& e : default_corpus().entries) {
    Group g = resolve_source(e.source);
    if (g.order() <= 256) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST(Closure, Basics) {
  Group d8 = builtins::dihedral(8);
  EXPECT_EQ(closure(d8, {}).elements, std::vector<Elem>{0});
  EXPECT_EQ(closure(d8, {2}).order(), 4U);
  Group q8 = builtins::quaternion(8);
  EXPECT_EQ(closure(q8, {2, 1}).order(), 8U);  // i = x, j = y
  EXPECT_EQ(error_of([&] { closure(q8, {8}); }), Errc::IndexOutOfRange);
  EXPECT_TRUE(is_closed(d8, closure(d8, {3})));
}

TEST(Center, MatchesPairwiseScan) {
  EXPECT_EQ(center(builtins::abelian(2, {2, 1})).order(), 8U);
  EXPECT_EQ(center(builtins::dihedral(8)).order(), 2U);
  EXPECT_EQ(center(builtins::heisenberg(3, 1)).order(), 3U);
  for (const Group& g : small_corpus()) EXPECT_EQ(center(g).elements, oracle::center(g));
}

TEST(Derived, Examples) {
  EXPECT_EQ(derived_subgroup(builtins::cyclic(8)).order(), 1U);
  const Group d16 = builtins::dihedral(16);
  Subgroup d = derived_subgroup(d16);
  EXPECT_EQ(d.order(), 4U);
  EXPECT_TRUE(subgroup_as_group(d).is_abelian());
  Group dg = subgroup_as_group(d);
  bool has_order4 = false;
  for (Elem x = 0; x < dg.order(); ++x) has_order4 |= element_order(dg, x) == 4;
  EXPECT_TRUE(has_order4);
  EXPECT_EQ(derived_subgroup(builtins::quaternion(8)).order(), 2U);
}

TEST(Derived, ContainsEveryCommutator) {
  for (const Group& g : small_corpus()) {
    if (g.order() > 128) continue;
    auto m = derived_subgroup(g).mask();
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) ASSERT_TRUE(m[g.commutator(a, b)]);
  }
}

TEST(CentralSeries, AbelianAndDihedral) {
  auto up = central_series(builtins::abelian(3, {1, 1}), SeriesKind::Upper);
  EXPECT_EQ(orders(up), (std::vector<std::size_t>{1, 9}));
  Group d16 = builtins::dihedral(16);
  EXPECT_EQ(orders(central_series(d16, SeriesKind::Upper)), (std::vector<std::size_t>{1, 2, 4, 16}));
  EXPECT_EQ(orders(central_series(d16, SeriesKind::Lower)), (std::vector<std::size_t>{16, 4, 2, 1}));
  EXPECT_EQ(nilpotency_class(d16), 3U);
}

TEST(CentralSeries, NotNilpotent) {
  // S_3 from permutations
  Group s3 = group_from_permutations(3, {Permutation{{1, 2, 0}}, Permutation{{1, 0, 2}}});
  EXPECT_EQ(error_of([&] { central_series(s3, SeriesKind::Upper); }), Errc::NotNilpotent);
  EXPECT_EQ(error_of([&] { central_series(s3, SeriesKind::Lower); }), Errc::NotNilpotent);
}

TEST(CentralSeries, UpperAndLowerAgreeOnClass) {
  for (const Group& g : small_corpus()) {
    auto up = central_series(g, SeriesKind::Upper);
    auto low = central_series(g, SeriesKind::Lower);
    EXPECT_EQ(up.size(), low.size());
    for (std::size_t i = 1; i < up.size(); ++i) {
      EXPECT_TRUE(up[i - 1].is_subset_of(up[i]));
      EXPECT_TRUE(low[i].is_subset_of(low[i - 1]));
      // gamma_{c+1-i} <= Z_i
      EXPECT_TRUE(low[low.size() - 1 - i].is_subset_of(up[i]));
    }
  }
}

TEST(Frattini, Examples) {
  Group e = builtins::elementary(2, 3);
  EXPECT_EQ(frattini_subgroup(e).order(), 1U);
  EXPECT_EQ(generator_rank(e), 3U);
  Group c8 = builtins::cyclic(8);
  EXPECT_EQ(frattini_subgroup(c8).order(), 4U);
  EXPECT_EQ(generator_rank(c8), 1U);
  Group d8 = builtins::dihedral(8);
  EXPECT_EQ(frattini_subgroup(d8).order(), 2U);
  EXPECT_EQ(generator_rank(d8), 2U);
  Group s3 = group_from_permutations(3, {Permutation{{1, 2, 0}}, Permutation{{1, 0, 2}}});
  EXPECT_EQ(error_of([&] { frattini_subgroup(s3); }), Errc::NotPrimePower);
}

TEST(Frattini, NoSmallerGeneratingSet) {
  // d(G) <= 2: no single element generates when d = 2, and some pair does.
  for (const Group& g : small_corpus()) {
    if (g.order() > 64) continue;
    const unsigned d = generator_rank(g);
    if (d > 2) continue;
    bool single = false;
    for (Elem x = 0; x < g.order() && !single; ++x) single = closure(g, {x}).order() == g.order();
    EXPECT_EQ(single, d == 1);
    if (d == 2) {
      bool pair = false;
      for (Elem x = 0; x < g.order() && !pair; ++x)
        for (Elem y = x + 1; y < g.order() && !pair; ++y) pair = closure(g, {x, y}).order() == g.order();
      EXPECT_TRUE(pair);
    }
  }
}

TEST(Quotient, Examples) {
  Group d8 = builtins::dihedral(8);
  Quotient whole = quotient(d8, whole_group(d8));
  EXPECT_EQ(whole.group.order(), 1U);
  Quotient k = quotient(d8, center(d8));
  EXPECT_EQ(k.group.order(), 4U);
  for (Elem x = 1; x < 4; ++x) EXPECT_EQ(element_order(k.group, x), 2U);
  Group q8 = builtins::quaternion(8);
  Quotient q = quotient(q8, center(q8));
  EXPECT_EQ(q.group.order(), 4U);
  for (Elem x = 1; x < 4; ++x) EXPECT_EQ(element_order(q.group, x), 2U);
  // representatives are the minimal coset members, identity coset first
  EXPECT_EQ(q.representatives.front(), 0U);
  EXPECT_TRUE(std::is_sorted(q.representatives.begin(), q.representatives.end()));
}

TEST(Quotient, RejectsNonNormal) {
  Group d8 = builtins::dihedral(8);
  Subgroup reflection = closure(d8, {1});
  EXPECT_FALSE(is_normal(d8, reflection));
  EXPECT_EQ(error_of([&] { quotient(d8, reflection); }), Errc::NotNormal);
}

TEST(Quotient, ProjectionIsHomomorphism) {
  for (const Group& g : small_corpus()) {
    if (g.order() > 64) continue;
    for (const Subgroup& n : {center(g), derived_subgroup(g), frattini_subgroup(g)}) {
      Quotient q = quotient(g, n);
      EXPECT_EQ(q.group.order() * n.order(), g.order());
      for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
          ASSERT_EQ(q.projection[g.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
    }
  }
}

TEST(StructureReport, DihedralSixteen) {
  auto r = structure_report(builtins::dihedral(16));
  EXPECT_EQ(r.n, 4U);
  EXPECT_EQ(r.nilpotency_class, 3U);
  EXPECT_EQ(r.coclass, 1U);
  EXPECT_EQ(r.d, 2U);
  EXPECT_EQ(r.center.exponents, std::vector<unsigned>{1});
  EXPECT_EQ(r.z2_mod_center.exponents, std::vector<unsigned>{1});
  EXPECT_EQ(r.abelianization.exponents, (std::vector<unsigned>{1, 1}));
}

TEST(StructureReport, HeisenbergModFour) {
  auto r = structure_report(builtins::heisenberg(2, 2));
  EXPECT_EQ(r.nilpotency_class, 2U);
  EXPECT_EQ(r.coclass, 4U);
  EXPECT_EQ(r.d, 2U);
  EXPECT_EQ(r.center.exponents, std::vector<unsigned>{2});
  EXPECT_TRUE(r.center_in_derived);
  EXPECT_FALSE(r.z2_abelian);  // class 2, so Z2 = G
}

TEST(StructureReport, CyclicSixteen) {
  auto r = structure_report(builtins::cyclic(16));
  EXPECT_EQ(r.nilpotency_class, 1U);
  EXPECT_EQ(r.coclass, 3U);
  EXPECT_EQ(r.d, 1U);
}

TEST(StructureReport, NeedsPrimePower) {
  EXPECT_EQ(error_of([] { structure_report(builtins::cyclic(6)); }), Errc::NotPrimePower);
}

TEST(StructureReport, CorpusInvariants) {
  for (const Group& g : small_corpus()) {
    auto r = structure_report(g);
    const unsigned p = r.p;
    EXPECT_GE(r.nilpotency_class, 1U);
    if (!g.is_abelian()) {
      EXPECT_GE(r.coclass, 1U);
    }
    EXPECT_EQ(r.coclass, r.n - r.nilpotency_class);
    // maximal class forces |Z_i| = p^i below the top of the upper series
    if (r.coclass == 1 && !g.is_abelian()) {
      bool thin = true;
      std::size_t pi = 1;
      for (std::size_t i = 0; i + 1 < r.upper_orders.size(); ++i, pi *= p) thin &= r.upper_orders[i] == pi;
      EXPECT_TRUE(thin);
    }
    for (const auto* inv : {&r.center, &r.z2_mod_center, &r.abelianization})
      EXPECT_TRUE(std::is_sorted(inv->exponents.rbegin(), inv->exponents.rend()));
    // [G : Phi] = p^d
    std::size_t index = g.order() / frattini_subgroup(g).order();
    std::size_t pd = 1;
    for (unsigned i = 0; i < r.d; ++i) pd *= p;
    EXPECT_EQ(index, pd);
    EXPECT_EQ(r.d, r.abelianization.rank());
    // exp(Z2/Z) <= exp(Z)
    if (!g.is_abelian()) {
      EXPECT_LE(r.z2_mod_center.log_exponent(), r.center.log_exponent());
    }
  }
}
