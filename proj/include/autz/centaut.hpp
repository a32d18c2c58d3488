#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "autz/abelian.hpp"
#include "autz/error.hpp"
#include "autz/group.hpp"
#include "autz/structure.hpp"

namespace autz {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t(1) << 20;

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

struct CentralAutReport {
  std::uint64_t hom_candidates = 0;  // |Hom(G/G', Z(G))|
  std::uint64_t aut_count = 0;       // |Aut_z(G)|
  std::uint64_t z_inn_order = 0;     // |Z_2(G)| / |Z(G)| = |Z(Inn(G))|
  bool minimal = false;
};

/// Visits x -> x f(x) for every homomorphism f : G/G' -> Z(G). The visitor
/// receives the image table of the map and whether it is a bijection, and
/// returns false to stop. Every central automorphism arises exactly once.
template <typename Visit>
std::uint64_t for_each_central_map(const Group& g, std::uint64_t enumeration_cap, Visit&& visit) {
  if (!g.prime())
    throw Error(Errc::NotPrimePower, "central automorphisms need a p-group, order " +
                                         std::to_string(g.order()));
  const std::uint32_t p = *g.prime();
  const Subgroup z = center(g);
  const Quotient ab = quotient(g, derived_subgroup(g));
  const AbelianBasis basis = abelian_basis(ab.group, p);
  const std::uint64_t candidates = hom_candidate_count(basis, g, z.elements);
  if (candidates > enumeration_cap)
    throw Error(Errc::EnumerationCapExceeded, std::to_string(candidates) +
                                                  " candidate homomorphisms exceed cap " +
                                                  std::to_string(enumeration_cap));
  std::vector<Elem> sigma(g.order());
  std::vector<char> seen(g.order());
  return for_each_hom(ab.group, basis, g, z.elements, [&](std::span<const Elem> f) {
    std::fill(seen.begin(), seen.end(), 0);
    bool bijective = true;
    for (Elem x = 0; x < g.order(); ++x) {
      sigma[x] = g.mul(x, f[ab.projection[x]]);
      if (seen[sigma[x]]++) bijective = false;
    }
    return visit(std::span<const Elem>(sigma), bijective);
  });
}

inline CentralAutReport central_automorphism_count(
    const Group& g, std::uint64_t enumeration_cap = kDefaultEnumerationCap) {
  CentralAutReport r;
  r.hom_candidates = for_each_central_map(g, enumeration_cap, [&](std::span<const Elem>, bool bij) {
    r.aut_count += bij;
    return true;
  });
  const auto upper = central_series(g, SeriesKind::Upper);
  const std::size_t z = upper[1].order();
  const std::size_t z2 = upper.size() > 2 ? upper[2].order() : upper[1].order();
  r.z_inn_order = z2 / z;
  r.minimal = r.aut_count == r.z_inn_order;
  return r;
}

inline bool is_minimal_bruteforce(const Group& g,
                                  std::uint64_t enumeration_cap = kDefaultEnumerationCap) {
  return central_automorphism_count(g, enumeration_cap).minimal;
}

struct StabilityCount {
  std::uint64_t count = 0;      // automorphisms built and confirmed
  std::uint64_t hom_order = 0;  // |Hom(G/X, Y)|
};

/// Builds x -> x f(xX) for every homomorphism f from (G/X)^ab into Y and
/// counts those that are automorphisms fixing X pointwise and acting
/// trivially on G/Y. `hom_order` is |Hom(G/X, Y)| from the invariants.
inline StabilityCount stability_count(const Group& g, const Subgroup& x, const Subgroup& y,
                                      std::uint64_t enumeration_cap = kDefaultEnumerationCap) {
  if (!g.prime()) throw Error(Errc::NotPrimePower, "stability count needs a p-group");
  const std::uint32_t p = *g.prime();
  if (!is_normal(g, x)) throw Error(Errc::NotNormal, "X is not normal in G");
  for (Elem h : y.elements)
    for (Elem a = 0; a < g.order(); ++a)
      if (g.mul(h, a) != g.mul(a, h))
        throw Error(Errc::NotCentral, "element " + std::to_string(h) + " of Y is not central");
  if (!y.is_subset_of(x)) throw Error(Errc::NotContained, "Y is not contained in X");

  const Quotient gx = quotient(g, x);
  const Quotient ab = quotient(gx.group, derived_subgroup(gx.group));
  const AbelianBasis basis = abelian_basis(ab.group, p);
  const AbelianInvariants y_inv = abelian_invariants(subgroup_as_group(y), p);
  const AbelianInvariants src_inv = abelian_invariants(ab.group, p);

  StabilityCount out;
  out.hom_order = ipow(p, hom_invariants(src_inv, y_inv).log_order());
  if (hom_candidate_count(basis, g, y.elements) > enumeration_cap)
    throw Error(Errc::EnumerationCapExceeded, "stability enumeration exceeds cap");

  const auto x_mask = x.mask();
  const auto y_mask = y.mask();
  std::vector<Elem> sigma(g.order());
  std::vector<char> seen(g.order());
  for_each_hom(ab.group, basis, g, y.elements, [&](std::span<const Elem> f) {
    std::fill(seen.begin(), seen.end(), 0);
    bool ok = true;
    for (Elem a = 0; a < g.order() && ok; ++a) {
      sigma[a] = g.mul(a, f[ab.projection[gx.projection[a]]]);
      if (seen[sigma[a]]++) ok = false;
      if (x_mask[a] && sigma[a] != a) ok = false;
      if (!y_mask[g.mul(g.inv(a), sigma[a])]) ok = false;
    }
    out.count += ok;
    return true;
  });
  return out;
}

struct AdneyYenCheck {
  std::uint64_t aut_count = 0;
  std::uint64_t hom_order = 0;
  bool equal = false;
};

/// |Aut_z(G)| = |Hom(G/G', Z(G))| for purely non-abelian G; cyclic center
/// is required here, which forces that for nonabelian p-groups.
inline AdneyYenCheck adney_yen_check(const Group& g,
                                     std::uint64_t enumeration_cap = kDefaultEnumerationCap) {
  if (!g.prime()) throw Error(Errc::NotPrimePower, "Adney-Yen check needs a p-group");
  if (g.is_abelian()) throw Error(Errc::AbelianGroup, "Adney-Yen check needs a nonabelian group");
  const std::uint32_t p = *g.prime();
  const AbelianInvariants z = abelian_invariants(subgroup_as_group(center(g)), p);
  if (!z.is_cyclic()) throw Error(Errc::CenterNotCyclic, "center " + z.to_string());
  const AbelianInvariants alpha =
      abelian_invariants(quotient(g, derived_subgroup(g)).group, p);
  AdneyYenCheck out;
  out.aut_count = central_automorphism_count(g, enumeration_cap).aut_count;
  out.hom_order = ipow(p, hom_invariants(alpha, z).log_order());
  out.equal = out.aut_count == out.hom_order;
  return out;
}

}  // namespace autz
