#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "autz/error.hpp"
#include "autz/group.hpp"
#include "autz/structure.hpp"

// Named families of p-groups. Every family is built from an explicit
// multiplication rule, a semidirect product, or a permutation closure; the
// construction is noted on each function.

namespace autz::builtins {

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= p;
    if (r > (std::uint64_t(1) << 32)) throw Error(Errc::BadParameters, "order overflows");
  }
  return r;
}

inline void require_prime(std::uint64_t p) {
  auto pp = prime_power(p);
  if (!pp || pp->k != 1) throw Error(Errc::BadParameters, std::to_string(p) + " is not a prime");
}

// k with n = 2^k, or BadParameters.
inline unsigned log2_exact(std::uint64_t n, std::string_view what) {
  auto pp = prime_power(n);
  if (!pp || pp->p != 2) throw Error(Errc::BadParameters, std::string(what) + " order must be a power of 2");
  return pp->k;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1U) r = r * b % m;
    b = b * b % m;
    e >>= 1U;
  }
  return r;
}

}  // namespace detail

/// C_m, element i = g^i.
inline Group cyclic(std::uint64_t m, std::size_t cap = kDefaultOrderCap) {
  if (m < 1) throw Error(Errc::BadParameters, "cyclic order must be positive");
  return group_from_multiplication(
      m, [m](Elem a, Elem b) { return Elem((a + b) % m); }, cap);
}

/// ∏ C_{p^{e_i}} as an iterated direct product in list order.
inline Group abelian(std::uint64_t p, const std::vector<unsigned>& exponents,
                     std::size_t cap = kDefaultOrderCap) {
  detail::require_prime(p);
  std::uint64_t total = 1;
  for (unsigned e : exponents) {
    if (e == 0) throw Error(Errc::BadParameters, "exponents must be positive");
    total *= detail::checked_pow(p, e);
    if (total > cap)
      throw Error(Errc::ClosureExceedsCap, "order exceeds cap " + std::to_string(cap));
  }
  Group g = cyclic(1);
  for (unsigned e : exponents) g = direct_product(g, cyclic(detail::checked_pow(p, e)), cap);
  return g;
}

inline Group elementary(std::uint64_t p, unsigned k, std::size_t cap = kDefaultOrderCap) {
  return abelian(p, std::vector<unsigned>(k, 1), cap);
}

/// Split metacyclic C_m ⋊ C_k where the generator of C_k raises to the s-th
/// power. Element (a, b) = x^a y^b has index a * k + b.
inline Group metacyclic(std::uint64_t m, std::uint64_t k, std::uint64_t s,
                        std::size_t cap = kDefaultOrderCap) {
  if (m < 1 || k < 1) throw Error(Errc::BadParameters, "metacyclic orders must be positive");
  if (m * k > cap) throw Error(Errc::ClosureExceedsCap, "order exceeds cap " + std::to_string(cap));
  if (std::gcd(s, m) != 1 || detail::mod_pow(s, k, m) != 1 % m)
    throw Error(Errc::BadParameters, "x -> x^" + std::to_string(s) +
                                         " is not an automorphism of order dividing " +
                                         std::to_string(k));
  std::vector<std::vector<Elem>> action(k, std::vector<Elem>(m));
  for (std::uint64_t b = 0; b < k; ++b) {
    std::uint64_t sb = detail::mod_pow(s, b, m);
    for (std::uint64_t a = 0; a < m; ++a) action[b][a] = Elem(a * sb % m);
  }
  return semidirect_product(cyclic(m), cyclic(k), action, cap);
}

/// D_{2m} = <x, y | x^m, y^2, y x y = x^-1>.
inline Group dihedral(std::uint64_t order, std::size_t cap = kDefaultOrderCap) {
  if (detail::log2_exact(order, "dihedral") < 3)
    throw Error(Errc::BadParameters, "dihedral order must be at least 8");
  const std::uint64_t m = order / 2;
  return metacyclic(m, 2, m - 1, cap);
}

/// SD_{2m} = <x, y | x^m, y^2, y x y = x^{m/2 - 1}>.
inline Group semidihedral(std::uint64_t order, std::size_t cap = kDefaultOrderCap) {
  if (detail::log2_exact(order, "semidihedral") < 4)
    throw Error(Errc::BadParameters, "semidihedral order must be at least 16");
  const std::uint64_t m = order / 2;
  return metacyclic(m, 2, m / 2 - 1, cap);
}

/// M_{p^k} = <x, y | x^{p^{k-1}}, y^p, y x y^-1 = x^{1 + p^{k-2}}>.
/// At p = 2, k = 3 this is D_8.
inline Group modular(std::uint64_t p, std::uint64_t order, std::size_t cap = kDefaultOrderCap) {
  detail::require_prime(p);
  auto pp = prime_power(order);
  if (!pp || pp->p != p || pp->k < 3)
    throw Error(Errc::BadParameters, "modular group order must be p^k with k >= 3");
  const std::uint64_t m = order / p;
  return metacyclic(m, p, 1 + m / p, cap);
}

/// Q_{2m} = <x, y | x^m, y^2 = x^{m/2}, y^-1 x y = x^-1>, element x^a y^b at
/// index a * 2 + b.
inline Group quaternion(std::uint64_t order, std::size_t cap = kDefaultOrderCap) {
  if (detail::log2_exact(order, "quaternion") < 3)
    throw Error(Errc::BadParameters, "quaternion order must be at least 8");
  const std::uint64_t m = order / 2;
  return group_from_multiplication(
      order,
      [m](Elem u, Elem v) {
        std::uint64_t a1 = u / 2, b1 = u % 2, a2 = v / 2, b2 = v % 2;
        std::uint64_t a = b1 ? (a1 + m - a2) % m : (a1 + a2) % m;
        if (b1 && b2) a = (a + m / 2) % m;
        return Elem(a * 2 + (b1 ^ b2));
      },
      cap);
}

/// Split extension (∏ C_{p^{e_i}}) ⋊ C_{p^c}: the generator of the top
/// group sends the i-th basis element of the base to Σ_j rows[i][j] b_j.
/// Base elements are mixed-radix vectors as in abelian(p, exponents).
inline Group abelian_by_cyclic(std::uint64_t p, const std::vector<unsigned>& exponents, unsigned c,
                               const std::vector<std::uint64_t>& matrix,
                               std::size_t cap = kDefaultOrderCap) {
  detail::require_prime(p);
  const std::size_t r = exponents.size();
  if (r == 0 || matrix.size() != r * r)
    throw Error(Errc::BadParameters, "matrix must have rank^2 = " + std::to_string(r * r) + " entries");
  const Group base = abelian(p, exponents, cap);
  const std::uint64_t top = detail::checked_pow(p, c);
  if (base.order() * top > cap)
    throw Error(Errc::ClosureExceedsCap, "order exceeds cap " + std::to_string(cap));
  std::vector<std::uint64_t> mod(r);
  for (std::size_t i = 0; i < r; ++i) mod[i] = detail::checked_pow(p, exponents[i]);
  std::vector<Elem> phi(base.order());
  std::vector<std::uint64_t> v(r), w(r);
  for (std::uint64_t x = 0; x < base.order(); ++x) {
    std::uint64_t y = x;
    for (std::size_t i = r; i-- > 0;) {
      v[i] = y % mod[i];
      y /= mod[i];
    }
    std::fill(w.begin(), w.end(), 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) w[j] = (w[j] + v[i] * (matrix[i * r + j] % mod[j])) % mod[j];
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < r; ++j) out = out * mod[j] + w[j];
    phi[x] = Elem(out);
  }
  std::vector<std::vector<Elem>> action(top, std::vector<Elem>(base.order()));
  for (Elem x = 0; x < base.order(); ++x) action[0][x] = x;
  for (std::uint64_t h = 1; h < top; ++h)
    for (Elem x = 0; x < base.order(); ++x) action[h][x] = phi[action[h - 1][x]];
  return semidirect_product(base, cyclic(top), action, cap);
}

/// Upper unitriangular 3x3 matrices over Z/p^k, entries (a, b, c) above the
/// diagonal at index (a * q + b) * q + c.
inline Group heisenberg(std::uint64_t p, unsigned k, std::size_t cap = kDefaultOrderCap) {
  detail::require_prime(p);
  if (k < 1) throw Error(Errc::BadParameters, "heisenberg needs k >= 1");
  const std::uint64_t q = detail::checked_pow(p, k);
  const std::uint64_t n = q * q * q;
  if (n > cap) throw Error(Errc::ClosureExceedsCap, "order exceeds cap " + std::to_string(cap));
  return group_from_multiplication(
      n,
      [q](Elem u, Elem v) {
        std::uint64_t a1 = u / (q * q), b1 = u / q % q, c1 = u % q;
        std::uint64_t a2 = v / (q * q), b2 = v / q % q, c2 = v % q;
        std::uint64_t a = (a1 + a2) % q, b = (b1 + b2) % q, c = (c1 + c2 + a1 * b2) % q;
        return Elem((a * q + b) * q + c);
      },
      cap);
}

/// Upper unitriangular 4x4 matrices over F_p. The six entries
/// (m12, m13, m14, m23, m24, m34) are base-p digits, m12 most significant.
inline Group unitriangular4(std::uint64_t p, std::size_t cap = kDefaultOrderCap) {
  detail::require_prime(p);
  const std::uint64_t n = detail::checked_pow(p, 6);
  if (n > cap) throw Error(Errc::ClosureExceedsCap, "order exceeds cap " + std::to_string(cap));
  auto decode = [p](Elem e) {
    std::array<std::uint64_t, 6> d{};
    for (int i = 5; i >= 0; --i) {
      d[i] = e % p;
      e = Elem(e / p);
    }
    return d;
  };
  return group_from_multiplication(
      n,
      [p, decode](Elem u, Elem v) {
        auto x = decode(u), y = decode(v);
        // x = (12, 13, 14, 23, 24, 34)
        std::array<std::uint64_t, 6> z{
            x[0] + y[0],
            x[1] + y[1] + x[0] * y[3],
            x[2] + y[2] + x[0] * y[4] + x[1] * y[5],
            x[3] + y[3],
            x[4] + y[4] + x[3] * y[5],
            x[5] + y[5],
        };
        std::uint64_t out = 0;
        for (auto c : z) out = out * p + c % p;
        return Elem(out);
      },
      cap);
}

/// C_p ≀ C_p: base (C_p)^p as elementary(p, p), top C_p shifting
/// coordinates cyclically, (φ_s w)_i = w_{i-s}.
inline Group wreath(std::uint64_t p, std::size_t cap = kDefaultOrderCap) {
  detail::require_prime(p);
  const std::uint64_t base_order = detail::checked_pow(p, unsigned(p));
  if (base_order * p > cap)
    throw Error(Errc::ClosureExceedsCap, "order exceeds cap " + std::to_string(cap));
  const Group base = elementary(p, unsigned(p), cap);
  std::vector<std::vector<Elem>> action(p, std::vector<Elem>(base_order));
  std::vector<std::uint64_t> digits(p), shifted(p);
  for (std::uint64_t s = 0; s < p; ++s)
    for (std::uint64_t w = 0; w < base_order; ++w) {
      std::uint64_t x = w;
      for (std::uint64_t i = p; i-- > 0;) {
        digits[i] = x % p;
        x /= p;
      }
      for (std::uint64_t i = 0; i < p; ++i) shifted[i] = digits[(i + p - s) % p];
      std::uint64_t out = 0;
      for (auto d : shifted) out = out * p + d;
      action[s][w] = Elem(out);
    }
  return semidirect_product(base, cyclic(p), action, cap);
}

/// G ∘ H amalgamating <zg> with <zh> via zg ~ zh, i.e. (G x H)/<(zg, zh^-1)>.
/// Both must be central of the same order.
inline Group central_product(const Group& g, const Group& h, Elem zg, Elem zh,
                             std::size_t cap = kDefaultOrderCap) {
  if (element_order(g, zg) != element_order(h, zh))
    throw Error(Errc::BadParameters, "amalgamated elements have different orders");
  const Group prod = direct_product(g, h, g.order() * h.order());
  const Elem gen = Elem(zg * h.order() + h.inv(zh));
  Subgroup n = closure(prod, {gen});
  for (Elem x : n.elements)
    for (Elem y = 0; y < prod.order(); ++y)
      if (prod.mul(x, y) != prod.mul(y, x))
        throw Error(Errc::BadParameters, "amalgamated subgroup is not central");
  return quotient(prod, n, cap).group;
}

/// Extraspecial group of order p^{2n+1}. "plus": central product of n copies
/// of D_8 (p = 2) or heisenberg(p, 1) (p odd). "minus": the first factor is
/// Q_8 (p = 2) or modular(p, p^3) (p odd, exponent p^2).
inline Group extraspecial(std::uint64_t p, std::uint64_t order, std::string_view type,
                          std::size_t cap = kDefaultOrderCap) {
  detail::require_prime(p);
  auto pp = prime_power(order);
  if (!pp || pp->p != p || pp->k < 3 || pp->k % 2 == 0)
    throw Error(Errc::BadParameters, "extraspecial order must be p^(2n+1), n >= 1");
  if (order > cap) throw Error(Errc::ClosureExceedsCap, "order exceeds cap " + std::to_string(cap));
  if (type != "plus" && type != "minus")
    throw Error(Errc::BadParameters, "extraspecial type must be plus or minus");
  const Group plus_factor = p == 2 ? dihedral(8) : heisenberg(p, 1);
  const Group first = type == "plus" ? plus_factor : (p == 2 ? quaternion(8) : modular(p, p * p * p));
  auto central_generator = [](const Group& x) { return center(x).elements.at(1); };
  Group g = first;
  for (unsigned i = 1; i < (pp->k - 1) / 2; ++i)
    g = central_product(g, plus_factor, central_generator(g), central_generator(plus_factor), cap);
  return g;
}

}  // namespace autz::builtins
