#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "autz/error.hpp"
#include "autz/group.hpp"

namespace autz {

/// Exponent list e_1 >= e_2 >= ... of an abelian p-group ∏ C_{p^{e_i}}.
/// An empty list is the trivial group.
struct AbelianInvariants {
  std::uint32_t p = 0;
  std::vector<unsigned> exponents;

  std::size_t rank() const { return exponents.size(); }
  unsigned log_order() const { return std::accumulate(exponents.begin(), exponents.end(), 0U); }
  /// log_p of the exponent of the group; 0 for the trivial group.
  unsigned log_exponent() const { return exponents.empty() ? 0 : exponents.front(); }
  bool is_cyclic() const { return exponents.size() <= 1; }

  std::string to_string() const {
    std::string out = "(" + std::to_string(p) + "; [";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(exponents[i]);
    }
    return out + "])";
  }

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

inline AbelianInvariants make_invariants(std::uint32_t p, std::vector<unsigned> exponents) {
  for (unsigned e : exponents)
    if (e == 0) throw Error(Errc::BadParameters, "invariant exponents must be positive");
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  return {p, std::move(exponents)};
}

namespace detail {

inline std::uint32_t resolve_prime(const Group& a, std::optional<std::uint32_t> hint) {
  if (a.order() == 1) {
    if (!hint) throw Error(Errc::NotPrimePower, "trivial group carries no prime; pass one");
    return *hint;
  }
  if (!a.prime()) throw Error(Errc::NotPrimePower, "order " + std::to_string(a.order()));
  if (hint && *hint != *a.prime())
    throw Error(Errc::PrimeMismatch, "group is a " + std::to_string(*a.prime()) + "-group, not a " +
                                         std::to_string(*hint) + "-group");
  return *a.prime();
}

inline unsigned log_p(std::uint64_t x, std::uint32_t p) {
  unsigned k = 0;
  while (x > 1) {
    x /= p;
    ++k;
  }
  return k;
}

}  // namespace detail

/// Invariants from layer counts: with s_j = log_p |{a : a^{p^j} = 1}|, the
/// number of cyclic factors of exponent >= j is s_j - s_{j-1}.
inline AbelianInvariants abelian_invariants(const Group& a,
                                            std::optional<std::uint32_t> prime = std::nullopt) {
  const std::uint32_t p = detail::resolve_prime(a, prime);
  if (!a.is_abelian()) throw Error(Errc::NotAbelian, "abelian invariants of a nonabelian group");
  std::vector<std::size_t> count_by_log;  // elements of order exactly p^j
  for (Elem x = 0; x < a.order(); ++x) {
    unsigned j = detail::log_p(element_order(a, x), p);
    if (j >= count_by_log.size()) count_by_log.resize(j + 1, 0);
    ++count_by_log[j];
  }
  std::vector<unsigned> s;  // s[j]
  std::size_t cumulative = 0;
  for (std::size_t c : count_by_log) {
    cumulative += c;
    s.push_back(detail::log_p(cumulative, p));
  }
  std::vector<unsigned> at_least;  // at_least[j] for j >= 1
  at_least.push_back(0);
  for (std::size_t j = 1; j < s.size(); ++j) at_least.push_back(s[j] - s[j - 1]);
  at_least.push_back(0);
  std::vector<unsigned> exps;
  for (std::size_t j = at_least.size() - 2; j >= 1; --j)
    for (unsigned c = at_least[j] - at_least[j + 1]; c > 0; --c) exps.push_back(unsigned(j));
  return {p, std::move(exps)};
}

/// A basis b_1..b_m of an abelian p-group with |b_i| = p^{e_i} descending,
/// plus the coordinate vector of every element.
struct AbelianBasis {
  std::uint32_t p = 0;
  std::vector<Elem> basis;
  std::vector<unsigned> exponents;
  std::vector<std::uint32_t> moduli;       // p^{e_i}
  std::vector<std::uint32_t> coordinates;  // coordinates[x * rank + i]

  std::size_t rank() const { return basis.size(); }
  std::span<const std::uint32_t> coords(Elem x) const {
    return {coordinates.data() + std::size_t(x) * rank(), rank()};
  }
};

/// Maximal-order selection: repeatedly take the element of largest order
/// whose cyclic subgroup meets the span so far trivially (ties to the
/// smallest index). Each pick is a direct factor of what remains, so the
/// orders come out equal to the invariants.
inline AbelianBasis abelian_basis(const Group& a, std::optional<std::uint32_t> prime = std::nullopt) {
  const std::uint32_t p = detail::resolve_prime(a, prime);
  if (!a.is_abelian()) throw Error(Errc::NotAbelian, "basis of a nonabelian group");
  const std::size_t n = a.order();
  const auto orders = element_orders(a);

  AbelianBasis out;
  out.p = p;
  std::vector<char> in_span(n, 0);
  std::vector<Elem> span{0};
  in_span[0] = 1;
  while (span.size() < n) {
    Elem best = 0;
    Elem best_order = 0;
    for (Elem x = 1; x < n; ++x) {
      if (orders[x] <= best_order) continue;
      if (in_span[a.power(x, orders[x] / p)]) continue;
      best = x;
      best_order = orders[x];
    }
    out.basis.push_back(best);
    out.moduli.push_back(best_order);
    out.exponents.push_back(detail::log_p(best_order, p));
    std::vector<Elem> grown;
    grown.reserve(span.size() * best_order);
    Elem xt = 0;
    for (Elem t = 0; t < best_order; ++t, xt = a.mul(xt, best))
      for (Elem h : span) grown.push_back(a.mul(h, xt));
    for (Elem g : grown) in_span[g] = 1;
    span = std::move(grown);
  }

  const std::size_t m = out.basis.size();
  out.coordinates.assign(n * m, 0);
  std::vector<char> hit(n, 0);
  std::vector<std::uint32_t> v(m, 0);
  for (std::size_t count = 0; count < n; ++count) {
    Elem x = 0;
    for (std::size_t i = 0; i < m; ++i) x = a.mul(x, a.power(out.basis[i], v[i]));
    if (hit[x]++) throw std::logic_error("abelian_basis: coordinates are not a bijection");
    std::copy(v.begin(), v.end(), out.coordinates.begin() + std::ptrdiff_t(std::size_t(x) * m));
    for (std::size_t i = 0; i < m; ++i) {
      if (++v[i] < out.moduli[i]) break;
      v[i] = 0;
    }
  }
  return out;
}

/// Hom(∏ C_{p^{a_i}}, ∏ C_{p^{b_j}}) ≅ ∏_{i,j} C_{p^{min(a_i, b_j)}}.
inline AbelianInvariants hom_invariants(const AbelianInvariants& a, const AbelianInvariants& b) {
  if (a.p != b.p)
    throw Error(Errc::PrimeMismatch,
                "Hom between " + a.to_string() + " and " + b.to_string());
  std::vector<unsigned> exps;
  for (unsigned x : a.exponents)
    for (unsigned y : b.exponents) exps.push_back(std::min(x, y));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  return {a.p, std::move(exps)};
}

/// Whether ∏ C_{p^{b_i}} embeds in ∏ C_{p^{c_i}}: for every j the first has
/// no more cyclic factors of order >= p^j than the second.
inline bool embeds_invariants(const AbelianInvariants& b, const AbelianInvariants& c) {
  if (b.p != c.p)
    throw Error(Errc::PrimeMismatch, "embedding " + b.to_string() + " into " + c.to_string());
  for (unsigned j = 1; j <= b.log_exponent(); ++j) {
    unsigned lhs = 0, rhs = 0;
    for (unsigned e : b.exponents) lhs += e >= j;
    for (unsigned e : c.exponents) rhs += e >= j;
    if (lhs > rhs) return false;
  }
  return true;
}

/// Visits every homomorphism from the abelian group with basis `basis` into
/// the abelian subgroup `target` of `host`. Each homomorphism is presented as
/// its value on every element of the source (indexed by source element). The
/// visitor returns false to stop early. Returns the number visited.
template <typename Visit>
std::uint64_t for_each_hom(const Group& source, const AbelianBasis& basis, const Group& host,
                           std::span<const Elem> target, Visit&& visit) {
  const std::size_t m = basis.rank();
  std::vector<std::vector<Elem>> choices(m);
  for (std::size_t i = 0; i < m; ++i)
    for (Elem z : target)
      if (host.power(z, basis.moduli[i]) == 0) choices[i].push_back(z);
  std::vector<std::size_t> pick(m, 0);
  std::vector<Elem> images(source.order());
  std::uint64_t visited = 0;
  for (;;) {
    for (Elem x = 0; x < source.order(); ++x) {
      auto v = basis.coords(x);
      Elem y = 0;
      for (std::size_t i = 0; i < m; ++i) y = host.mul(y, host.power(choices[i][pick[i]], v[i]));
      images[x] = y;
    }
    ++visited;
    if (!visit(std::span<const Elem>(images))) return visited;
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == m) return visited;
  }
}

/// Number of homomorphisms for_each_hom would visit, without visiting them.
inline std::uint64_t hom_candidate_count(const AbelianBasis& basis, const Group& host,
                                         std::span<const Elem> target) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    std::uint64_t c = 0;
    for (Elem z : target)
      if (host.power(z, basis.moduli[i]) == 0) ++c;
    total *= c;
    if (total > (std::uint64_t(1) << 62)) return total;
  }
  return total;
}

/// Exhaustive search for an injective homomorphism between two concrete
/// abelian p-groups. Cross-check for embeds_invariants at small orders.
inline bool embeds_bruteforce(const Group& b, const Group& c) {
  if (b.order() == 1) return true;
  const AbelianBasis basis = abelian_basis(b);
  if (!c.is_abelian()) throw Error(Errc::NotAbelian, "embedding target must be abelian");
  std::vector<Elem> all(c.order());
  std::iota(all.begin(), all.end(), Elem(0));
  bool found = false;
  for_each_hom(b, basis, c, all, [&](std::span<const Elem> images) {
    std::size_t kernel = 0;
    for (Elem y : images) kernel += (y == 0);
    found = (kernel == 1);
    return !found;
  });
  return found;
}

}  // namespace autz
