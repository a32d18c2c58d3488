#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "autz/abelian.hpp"
#include "autz/error.hpp"
#include "autz/group.hpp"

namespace autz {

/// A subgroup as a strictly sorted list of parent indices (always holding 0).
/// The parent must outlive the subgroup.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<Elem> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }
  std::vector<char> mask() const {
    std::vector<char> m(parent->order(), 0);
    for (Elem x : elements) m[x] = 1;
    return m;
  }
  bool is_subset_of(const Subgroup& other) const {
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(),
                         elements.end());
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

inline Subgroup whole_group(const Group& g) {
  Subgroup s{&g, std::vector<Elem>(g.order())};
  std::iota(s.elements.begin(), s.elements.end(), Elem(0));
  return s;
}

inline Subgroup trivial_subgroup(const Group& g) { return {&g, {0}}; }

/// Smallest subgroup containing `seed`.
inline Subgroup closure(const Group& g, const std::vector<Elem>& seed) {
  for (Elem s : seed)
    if (s >= g.order())
      throw Error(Errc::IndexOutOfRange, "seed element " + std::to_string(s) + " not in group");
  std::vector<Elem> gens;
  for (Elem s : seed)
    if (s != 0) gens.push_back(s);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return {&g, std::move(members)};
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  Subgroup out{a.parent, {}};
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

// Greedy generating set: smallest element outside the current span.
inline std::vector<Elem> generating_set(const Group& g) {
  std::vector<Elem> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::size_t reached = 1;
  for (Elem x = 1; x < g.order() && reached < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    Subgroup s = closure(g, gens);
    for (Elem y : s.elements) in[y] = 1;
    reached = s.order();
  }
  return gens;
}

inline Subgroup center(const Group& g) {
  const auto gens = generating_set(g);
  Subgroup z{&g, {}};
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](Elem s) { return g.mul(x, s) == g.mul(s, x); });
    if (central) z.elements.push_back(x);
  }
  return z;
}

// Subgroup generated by [a, b] for a in `a`, b in `b`.
inline Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> comms;
  for (Elem x : a.elements)
    for (Elem y : b.elements) {
      Elem c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return closure(g, comms);
}

inline Subgroup derived_subgroup(const Group& g) {
  const Subgroup all = whole_group(g);
  return commutator_subgroup(g, all, all);
}

enum class SeriesKind { Upper, Lower };

/// Upper: 1 = Z_0 < Z_1 < ... < Z_c = G with Z_{i+1} = {x : [x, g] ∈ Z_i
/// for all g}; testing g over a generating set is equivalent.
/// Lower: G = γ_1 > γ_2 = G' > ... > γ_{c+1} = 1.
inline std::vector<Subgroup> central_series(const Group& g, SeriesKind kind) {
  std::vector<Subgroup> series;
  if (kind == SeriesKind::Upper) {
    const auto gens = generating_set(g);
    series.push_back(trivial_subgroup(g));
    while (series.back().order() < g.order()) {
      const auto mask = series.back().mask();
      Subgroup next{&g, {}};
      for (Elem x = 0; x < g.order(); ++x) {
        bool ok = std::all_of(gens.begin(), gens.end(),
                              [&](Elem s) { return mask[g.commutator(x, s)] != 0; });
        if (ok) next.elements.push_back(x);
      }
      if (next.order() == series.back().order())
        throw Error(Errc::NotNilpotent,
                    "upper central series stops at order " + std::to_string(next.order()));
      series.push_back(std::move(next));
    }
  } else {
    const Subgroup all = whole_group(g);
    series.push_back(all);
    while (series.back().order() > 1) {
      Subgroup next = commutator_subgroup(g, series.back(), all);
      if (next.order() == series.back().order())
        throw Error(Errc::NotNilpotent,
                    "lower central series stops at order " + std::to_string(next.order()));
      series.push_back(std::move(next));
    }
  }
  return series;
}

inline unsigned nilpotency_class(const Group& g) {
  return unsigned(central_series(g, SeriesKind::Upper).size() - 1);
}

/// Φ(G) = G'G^p for a p-group.
inline Subgroup frattini_subgroup(const Group& g) {
  if (!g.prime()) {
    if (g.order() == 1) return trivial_subgroup(g);
    throw Error(Errc::NotPrimePower, "Frattini subgroup needs a p-group, order " +
                                         std::to_string(g.order()));
  }
  const std::uint32_t p = *g.prime();
  std::vector<Elem> seed = derived_subgroup(g).elements;
  for (Elem x = 0; x < g.order(); ++x) seed.push_back(g.power(x, p));
  return closure(g, seed);
}

/// Minimal number of generators, log_p [G : Φ(G)].
inline unsigned generator_rank(const Group& g) {
  if (g.order() == 1) return 0;
  const Subgroup phi = frattini_subgroup(g);
  return detail::log_p(g.order() / phi.order(), *g.prime());
}

inline bool is_normal(const Group& g, const Subgroup& n) {
  const auto mask = n.mask();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem h : n.elements)
      if (!mask[g.mul(g.mul(g.inv(x), h), x)]) return false;
  return true;
}

struct Quotient {
  Group group;
  std::vector<Elem> projection;       // element -> coset index
  std::vector<Elem> representatives;  // coset index -> minimal member
};

/// G/N on cosets xN, each represented by its minimal element; coset indices
/// follow representative order, so the identity coset is 0.
inline Quotient quotient(const Group& g, const Subgroup& n, std::size_t cap = kDefaultOrderCap) {
  const auto mask = n.mask();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem h : n.elements) {
      Elem c = g.mul(g.mul(g.inv(x), h), x);
      if (!mask[c])
        throw Error(Errc::NotNormal, "conjugate of " + std::to_string(h) + " by " +
                                         std::to_string(x) + " leaves the subgroup");
    }
  std::vector<Elem> rep(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Elem best = x;
    for (Elem h : n.elements) best = std::min(best, g.mul(x, h));
    rep[x] = best;
  }
  std::vector<Elem> reps = rep;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Elem> index_of(g.order(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = Elem(i);
  std::vector<Elem> projection(g.order());
  for (Elem x = 0; x < g.order(); ++x) projection[x] = index_of[rep[x]];
  Group q = group_from_multiplication(
      reps.size(), [&](Elem a, Elem b) { return projection[g.mul(reps[a], reps[b])]; }, cap);
  return {std::move(q), std::move(projection), std::move(reps)};
}

/// The subgroup as a group in its own right; element i is s.elements[i].
inline Group subgroup_as_group(const Subgroup& s) {
  const Group& g = *s.parent;
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < s.elements.size(); ++i) local[s.elements[i]] = Elem(i);
  return group_from_multiplication(
      s.order(), [&](Elem a, Elem b) { return local[g.mul(s.elements[a], s.elements[b])]; },
      s.order());
}

/// Invariants of H/K for K <= H <= G with K normal in H and H/K abelian.
inline AbelianInvariants section_invariants(const Subgroup& h, const Subgroup& k, std::uint32_t p) {
  const Group hg = subgroup_as_group(h);
  Subgroup kk{&hg, {}};
  for (Elem x : k.elements) {
    auto it = std::lower_bound(h.elements.begin(), h.elements.end(), x);
    if (it == h.elements.end() || *it != x)
      throw Error(Errc::NotContained, "section denominator is not inside the numerator");
    kk.elements.push_back(Elem(it - h.elements.begin()));
  }
  const Quotient q = quotient(hg, kk, hg.order());
  return abelian_invariants(q.group, p);
}

struct StructureReport {
  std::uint32_t p = 0;
  unsigned n = 0;  // |G| = p^n
  unsigned nilpotency_class = 0;
  unsigned coclass = 0;
  unsigned d = 0;  // d(G)
  unsigned d_center = 0;
  unsigned d_z2_mod_z = 0;
  AbelianInvariants center;        // γ
  AbelianInvariants z2_mod_center; // β
  AbelianInvariants abelianization;// α
  bool center_in_derived = false;
  bool derived_equals_center = false;
  bool z2_abelian = false;
  std::vector<std::size_t> upper_orders;
  std::vector<std::size_t> lower_orders;
};

/// Everything structure_report derives, with the subgroups kept.
struct GroupStructure {
  Subgroup center;
  Subgroup z2;
  Subgroup derived;
  Subgroup frattini;
  std::vector<Subgroup> upper;
  std::vector<Subgroup> lower;
  StructureReport report;
};

inline GroupStructure analyze_structure(const Group& g) {
  if (!g.prime())
    throw Error(Errc::NotPrimePower, "structure report needs a nontrivial p-group, order " +
                                         std::to_string(g.order()));
  const std::uint32_t p = *g.prime();
  GroupStructure s;
  s.upper = central_series(g, SeriesKind::Upper);
  s.lower = central_series(g, SeriesKind::Lower);
  s.center = s.upper[1];
  s.z2 = s.upper.size() > 2 ? s.upper[2] : s.upper[1];
  s.derived = s.lower.size() > 1 ? s.lower[1] : s.lower[0];
  s.frattini = frattini_subgroup(g);

  StructureReport& r = s.report;
  r.p = p;
  r.n = g.log_order();
  r.nilpotency_class = unsigned(s.upper.size() - 1);
  r.coclass = r.n - r.nilpotency_class;
  r.d = detail::log_p(g.order() / s.frattini.order(), p);
  r.center = abelian_invariants(subgroup_as_group(s.center), p);
  r.z2_mod_center = section_invariants(s.z2, s.center, p);
  r.abelianization = abelian_invariants(quotient(g, s.derived).group, p);
  r.d_center = unsigned(r.center.rank());
  r.d_z2_mod_z = unsigned(r.z2_mod_center.rank());
  r.center_in_derived = s.center.is_subset_of(s.derived);
  r.derived_equals_center = s.center == s.derived;
  r.z2_abelian = true;
  for (Elem a : s.z2.elements)
    for (Elem b : s.z2.elements)
      if (g.mul(a, b) != g.mul(b, a)) r.z2_abelian = false;
  for (const auto& z : s.upper) r.upper_orders.push_back(z.order());
  for (const auto& l : s.lower) r.lower_orders.push_back(l.order());
  return s;
}

inline StructureReport structure_report(const Group& g) { return analyze_structure(g).report; }

}  // namespace autz
