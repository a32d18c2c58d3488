#include <gtest/gtest.h>

#include <set>

#include "autz/builtins.hpp"
#include "autz/centaut.hpp"
#include "autz/corpus.hpp"
#include "autz/io.hpp"
#include "oracles.hpp"

using namespace autz;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no autz::Error thrown";
  return Errc::ParseError;
}

std::vector<std::pair<std::string, Group>> corpus_up_to(std::size_t bound) {
  std::vector<std::pair<std::string, Group>> out;
  for (const auto& e : default_corpus().entries) {
    Group g = resolve_source(e.source);
    if (g.order() <= bound) out.emplace_back(e.name, std::move(g));
  }
  return out;
}

}  // namespace

TEST(CentralAutCount, QuaternionEight) {
  auto r = central_automorphism_count(builtins::quaternion(8));
  EXPECT_EQ(r.hom_candidates, 4U);
  EXPECT_EQ(r.aut_count, 4U);
  EXPECT_EQ(r.z_inn_order, 4U);
  EXPECT_TRUE(r.minimal);
}

TEST(CentralAutCount, CyclicFour) {
  auto r = central_automorphism_count(builtins::cyclic(4));
  EXPECT_EQ(r.hom_candidates, 4U);
  EXPECT_EQ(r.aut_count, 2U);
  EXPECT_EQ(r.z_inn_order, 1U);
  EXPECT_FALSE(r.minimal);
}

TEST(CentralAutCount, DihedralSixteen) {
  auto r = central_automorphism_count(builtins::dihedral(16));
  EXPECT_EQ(r.hom_candidates, 4U);
  EXPECT_EQ(r.aut_count, 4U);
  EXPECT_EQ(r.z_inn_order, 2U);
  EXPECT_FALSE(r.minimal);
}

TEST(CentralAutCount, Errors) {
  EXPECT_EQ(error_of([] { central_automorphism_count(builtins::cyclic(6)); }), Errc::NotPrimePower);
  EXPECT_EQ(error_of([] { central_automorphism_count(builtins::elementary(2, 6), 1000); }),
            Errc::EnumerationCapExceeded);
}

TEST(Minimality, Examples) {
  EXPECT_TRUE(is_minimal_bruteforce(builtins::quaternion(8)));
  EXPECT_FALSE(is_minimal_bruteforce(builtins::dihedral(16)));
  EXPECT_TRUE(is_minimal_bruteforce(builtins::heisenberg(2, 2)));
}

TEST(CentralMaps, EveryBijectiveMapIsACentralAutomorphism) {
  for (const auto& [name, g] : corpus_up_to(64)) {
    const auto z = oracle::center(g);
    const std::set<Elem> zs(z.begin(), z.end());
    std::set<std::vector<Elem>> distinct;
    std::uint64_t bijective = 0;
    for_each_central_map(g, kDefaultEnumerationCap, [&](std::span<const Elem> s, bool bij) {
      for (Elem a = 0; a < g.order(); ++a) {
        EXPECT_TRUE(zs.count(g.mul(g.inv(a), s[a]))) << name;
        for (Elem b = 0; b < g.order(); ++b)
          if (s[g.mul(a, b)] != g.mul(s[a], s[b])) {
            ADD_FAILURE() << name << ": map is not a homomorphism";
            return false;
          }
      }
      std::set<Elem> image(s.begin(), s.end());
      EXPECT_EQ(image.size() == g.order(), bij) << name;
      bijective += bij;
      distinct.emplace(s.begin(), s.end());
      return true;
    });
    EXPECT_EQ(distinct.size(), central_automorphism_count(g).hom_candidates) << name;
    EXPECT_EQ(bijective, central_automorphism_count(g).aut_count) << name;
  }
}

TEST(CentralMaps, CompleteAgainstFullAutomorphismSearch) {
  for (const auto& [name, g] : corpus_up_to(16))
    EXPECT_EQ(central_automorphism_count(g).aut_count, oracle::central_automorphism_count(g)) << name;
  for (const Group& g : {builtins::cyclic(4), builtins::abelian(2, {2, 1}), builtins::elementary(2, 3),
                         builtins::cyclic(9), builtins::heisenberg(3, 1), builtins::modular(3, 27)})
    EXPECT_EQ(central_automorphism_count(g).aut_count, oracle::central_automorphism_count(g));
}

TEST(CentralMaps, CorpusProperties) {
  for (const auto& [name, g] : corpus_up_to(729)) {
    auto r = central_automorphism_count(g);
    EXPECT_EQ(r.aut_count % r.z_inn_order, 0U) << name;
    EXPECT_LE(r.aut_count, r.hom_candidates) << name;
    if (center(g).is_subset_of(derived_subgroup(g))) {
      EXPECT_EQ(r.aut_count, r.hom_candidates) << name;
    }
  }
}

TEST(Stability, WholeGroupGivesTrivialHom) {
  for (const Group& g : {builtins::quaternion(8), builtins::dihedral(16), builtins::heisenberg(3, 1)}) {
    auto s = stability_count(g, whole_group(g), center(g));
    EXPECT_EQ(s.count, 1U);
    EXPECT_EQ(s.hom_order, 1U);
  }
}

TEST(Stability, Examples) {
  Group d8 = builtins::dihedral(8);
  auto s = stability_count(d8, frattini_subgroup(d8), frattini_subgroup(d8));
  EXPECT_EQ(s.count, 4U);
  EXPECT_EQ(s.hom_order, 4U);
  Group q8 = builtins::quaternion(8);
  auto t = stability_count(q8, derived_subgroup(q8), center(q8));
  EXPECT_EQ(t.count, 4U);
  EXPECT_EQ(t.hom_order, 4U);
}

TEST(Stability, Errors) {
  Group d8 = builtins::dihedral(8);
  Subgroup reflection = closure(d8, {1});
  EXPECT_EQ(error_of([&] { stability_count(d8, reflection, trivial_subgroup(d8)); }), Errc::NotNormal);
  Subgroup rotations = closure(d8, {2});
  EXPECT_EQ(error_of([&] { stability_count(d8, whole_group(d8), rotations); }), Errc::NotCentral);
  EXPECT_EQ(error_of([&] { stability_count(d8, trivial_subgroup(d8), center(d8)); }), Errc::NotContained);
}

TEST(AdneyYen, Examples) {
  auto q = adney_yen_check(builtins::quaternion(8));
  EXPECT_EQ(q.aut_count, 4U);
  EXPECT_EQ(q.hom_order, 4U);
  EXPECT_TRUE(q.equal);
  auto d = adney_yen_check(builtins::dihedral(16));
  EXPECT_EQ(d.aut_count, 4U);
  EXPECT_EQ(d.hom_order, 4U);
  EXPECT_TRUE(d.equal);
  auto h = adney_yen_check(builtins::heisenberg(3, 1));
  EXPECT_EQ(h.aut_count, 9U);
  EXPECT_EQ(h.hom_order, 9U);
  EXPECT_TRUE(h.equal);
}

TEST(AdneyYen, Errors) {
  EXPECT_EQ(error_of([] { adney_yen_check(builtins::cyclic(8)); }), Errc::AbelianGroup);
  EXPECT_EQ(error_of([] { adney_yen_check(direct_product(builtins::dihedral(8), builtins::cyclic(2))); }), Errc::CenterNotCyclic);
}
