#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "autz/error.hpp"

namespace autz {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 4096;

struct PrimePower {
  std::uint32_t p = 0;
  unsigned k = 0;
};

// n = p^k with k >= 1, by trial division. 1 and composite non-prime-powers
// have no prime.
inline std::optional<PrimePower> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  PrimePower out{static_cast<std::uint32_t>(p), 0};
  while (n % p == 0) {
    n /= p;
    ++out.k;
  }
  if (n != 1) return std::nullopt;
  return out;
}

/// A bijection on 0..degree-1 stored as its image array.
struct Permutation {
  std::vector<std::uint32_t> images;

  std::size_t degree() const { return images.size(); }

  bool is_bijection() const {
    std::vector<char> seen(images.size(), 0);
    for (auto v : images) {
      if (v >= images.size() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  static Permutation identity(std::size_t degree) {
    Permutation out;
    out.images.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) out.images[i] = static_cast<std::uint32_t>(i);
    return out;
  }

  // Left-to-right composition: apply *this, then `next`.
  Permutation then(const Permutation& next) const {
    Permutation out;
    out.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) out.images[i] = next.images[images[i]];
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// A finite group stored as a validated Cayley table, identity at index 0.
///
/// Instances are only produced by the factory functions below, each of which
/// runs the full validation (Latin square, identity law, associativity), so a
/// `Group` value always satisfies the group axioms. Groups are immutable and
/// may be shared read-only between threads.
class Group {
 public:
  std::size_t order() const { return n_; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }

  std::span<const Elem> row(Elem a) const {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  std::span<const Elem> table() const { return table_; }
  std::span<const Elem> inverses() const { return inverse_; }

  /// Prime p with |G| = p^k, k >= 1; empty for the trivial group and for
  /// orders that are not prime powers.
  std::optional<std::uint32_t> prime() const {
    if (!pp_) return std::nullopt;
    return pp_->p;
  }
  /// k with |G| = p^k (0 when there is no such prime).
  unsigned log_order() const { return pp_ ? pp_->k : 0; }
  bool is_p_group() const { return pp_.has_value(); }

  Elem power(Elem a, std::uint64_t e) const {
    Elem result = 0;
    Elem base = a;
    while (e) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }

  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  bool is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) return false;
    return true;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  Group with_labels(std::vector<std::string> labels) const {
    Group out = *this;
    out.labels_ = std::move(labels);
    return out;
  }

  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

  // Validating constructor over a flat row-major table. Throws autz::Error.
  static Group from_flat(std::size_t n, std::vector<Elem> flat);

 private:
  Group() = default;

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::optional<PrimePower> pp_;
  std::vector<std::string> labels_;
};

namespace detail {

inline std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

// Generators of the table viewed as a magma: smallest index not yet in the
// multiplicative closure is added until everything is reached.
inline std::vector<Elem> magma_generators(std::size_t n, const std::vector<Elem>& t) {
  std::vector<char> in(n, 0);
  std::vector<Elem> members;
  std::vector<Elem> gens;
  members.reserve(n);
  auto add = [&](Elem e, std::vector<Elem>& queue) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
      queue.push_back(e);
    }
  };
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (in[cand]) continue;
    gens.push_back(Elem(cand));
    std::vector<Elem> queue;
    add(Elem(cand), queue);
    while (!queue.empty()) {
      Elem x = queue.back();
      queue.pop_back();
      for (std::size_t i = 0; i < members.size(); ++i) {
        Elem y = members[i];
        add(t[std::size_t(x) * n + y], queue);
        add(t[std::size_t(y) * n + x], queue);
      }
    }
  }
  return gens;
}

}  // namespace detail

inline Group Group::from_flat(std::size_t n, std::vector<Elem> flat) {
  if (n == 0) throw Error(Errc::NotLatinSquare, "empty table");
  if (flat.size() != n * n) throw Error(Errc::NotLatinSquare, "table is not square");
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (flat[i] >= n)
      throw Error(Errc::NotLatinSquare, "entry (" + std::to_string(i / n) + ", " +
                                            std::to_string(i % n) + ") out of range");
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[flat[r * n + c]]++)
        throw Error(Errc::NotLatinSquare, "row " + std::to_string(r) + " repeats an entry");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[flat[r * n + c]]++)
        throw Error(Errc::NotLatinSquare, "column " + std::to_string(c) + " repeats an entry");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (flat[a] != a || flat[a * n] != a)
      throw Error(Errc::NoIdentityAtZero, "identity law fails at element " + std::to_string(a));
  }
  // Light's test: (x s) y = x (s y) for s ranging over magma generators is
  // enough, since the elements satisfying it form a submagma.
  for (Elem s : detail::magma_generators(n, flat)) {
    for (std::size_t x = 0; x < n; ++x) {
      Elem xs = flat[x * n + s];
      for (std::size_t y = 0; y < n; ++y) {
        if (flat[std::size_t(xs) * n + y] != flat[x * n + flat[std::size_t(s) * n + y]])
          throw Error(Errc::NotAssociative, "triple " + detail::triple(x, s, y));
      }
    }
  }
  Group g;
  g.n_ = n;
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (flat[a * n + b] == 0) {
        g.inverse_[a] = Elem(b);
        break;
      }
  g.table_ = std::move(flat);
  g.pp_ = prime_power(n);
  return g;
}

inline Group group_from_cayley_table(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw Error(Errc::NotLatinSquare, "row " + std::to_string(r) + " has length " +
                                            std::to_string(rows[r].size()) + ", expected " +
                                            std::to_string(n));
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return Group::from_flat(n, std::move(flat));
}

/// Builds a group on 0..n-1 from a multiplication callable, then validates it.
template <typename Mul>
  requires std::is_invocable_r_v<Elem, Mul, Elem, Elem>
Group group_from_multiplication(std::size_t n, Mul&& mul, std::size_t cap = kDefaultOrderCap) {
  if (n > cap)
    throw Error(Errc::ClosureExceedsCap,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = mul(Elem(a), Elem(b));
  return Group::from_flat(n, std::move(flat));
}

namespace detail {

struct ImagesHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

/// Closure of permutation generators. Elements are numbered in breadth-first
/// discovery order: identity first, then right multiplication by each
/// generator in input order. Products compose left to right, (a*b)(i) = b(a(i)).
inline Group group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                     std::size_t cap = kDefaultOrderCap) {
  if (cap < 1) throw Error(Errc::BadParameters, "cap must be at least 1");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].degree() != degree || !generators[g].is_bijection())
      throw Error(Errc::InvalidPermutation,
                  "generator " + std::to_string(g) + " is not a permutation of degree " +
                      std::to_string(degree));
  }
  std::unordered_map<std::vector<std::uint32_t>, Elem, detail::ImagesHash> index;
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  index.emplace(elems[0].images, 0);
  const std::size_t k = generators.size();
  std::vector<Elem> right;  // right[x * k + j] = x * g_j
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation y = elems[x].then(generators[j]);
      auto [it, fresh] = index.emplace(y.images, Elem(elems.size()));
      if (fresh) {
        if (elems.size() + 1 > cap)
          throw Error(Errc::ClosureExceedsCap,
                      "closure has more than " + std::to_string(cap) + " elements");
        elems.push_back(std::move(y));
        parent.push_back(Elem(x));
        via.push_back(j);
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  // a * x_i = (a * x_parent) * g_via, filled in discovery order.
  for (std::size_t a = 0; a < n; ++a) {
    flat[a * n] = Elem(a);
    for (std::size_t i = 1; i < n; ++i)
      flat[a * n + i] = right[std::size_t(flat[a * n + parent[i]]) * k + via[i]];
  }
  return Group::from_flat(n, std::move(flat));
}

inline Elem element_order(const Group& g, Elem x) {
  if (x >= g.order())
    throw Error(Errc::IndexOutOfRange, "element " + std::to_string(x) + " not in group of order " +
                                           std::to_string(g.order()));
  Elem k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

// Orders of all elements, indexed by element.
inline std::vector<Elem> element_orders(const Group& g) {
  std::vector<Elem> out(g.order());
  for (Elem x = 0; x < g.order(); ++x) out[x] = element_order(g, x);
  return out;
}

/// Pairs (g, h) numbered g * |H| + h.
inline Group direct_product(const Group& g, const Group& h, std::size_t cap = kDefaultOrderCap) {
  const std::size_t m = h.order();
  return group_from_multiplication(
      g.order() * m,
      [&](Elem a, Elem b) {
        return Elem(g.mul(Elem(a / m), Elem(b / m)) * m + h.mul(Elem(a % m), Elem(b % m)));
      },
      cap);
}

/// N ⋊ H on pairs (n, h) numbered n * |H| + h, with
/// (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2).
inline Group semidirect_product(const Group& n, const Group& h,
                                const std::vector<std::vector<Elem>>& action,
                                std::size_t cap = kDefaultOrderCap) {
  const std::size_t nn = n.order();
  const std::size_t hn = h.order();
  if (action.size() != hn)
    throw Error(Errc::ActionNotAutomorphism, "action has " + std::to_string(action.size()) +
                                                 " entries, expected " + std::to_string(hn));
  for (std::size_t x = 0; x < hn; ++x) {
    const auto& phi = action[x];
    if (phi.size() != nn || !Permutation{phi}.is_bijection())
      throw Error(Errc::ActionNotAutomorphism,
                  "image of h=" + std::to_string(x) + " is not a permutation of N");
    for (Elem a = 0; a < nn; ++a)
      for (Elem b = 0; b < nn; ++b)
        if (phi[n.mul(a, b)] != n.mul(phi[a], phi[b]))
          throw Error(Errc::ActionNotAutomorphism,
                      "h=" + std::to_string(x) + " breaks the product " + std::to_string(a) +
                          "*" + std::to_string(b));
  }
  for (Elem x = 0; x < hn; ++x)
    for (Elem y = 0; y < hn; ++y) {
      const auto& lhs = action[h.mul(x, y)];
      for (Elem a = 0; a < nn; ++a)
        if (lhs[a] != action[x][action[y][a]])
          throw Error(Errc::ActionNotHomomorphism,
                      "action(" + std::to_string(x) + "*" + std::to_string(y) +
                          ") differs from the composite at " + std::to_string(a));
    }
  return group_from_multiplication(
      nn * hn,
      [&](Elem a, Elem b) {
        Elem n1 = Elem(a / hn), h1 = Elem(a % hn);
        Elem n2 = Elem(b / hn), h2 = Elem(b % hn);
        return Elem(n.mul(n1, action[h1][n2]) * hn + h.mul(h1, h2));
      },
      cap);
}

}  // namespace autz
