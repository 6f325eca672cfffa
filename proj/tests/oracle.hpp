#pragma once

// Reference model of Cl(H_V) on the orthonormal basis σ_1..σ_2n
// (σ_k² = +1 for k ≤ n, −1 above). Blades are bitmasks; products are the
// textbook XOR rule with a reordering sign and the metric on shared factors.
// Shares nothing with the library beyond the scalar field.

#include <bit>
#include <cstdint>
#include <map>

#include "hyclif/multivecfor.hpp"

namespace oracle {

using hyclif::Scalar;
using Mask = std::uint32_t;

struct Element {
  int n = 0;
  std::map<Mask, Scalar> c;

  void add(Mask m, const Scalar& s) {
    Scalar& x = c[m];
    x += s;
    if (x.is_zero()) c.erase(m);
  }
  friend bool operator==(const Element& a, const Element& b) { return a.n == b.n && a.c == b.c; }
};

inline int reorder_sign(Mask a, Mask b) {
  int swaps = 0;
  for (a >>= 1; a; a >>= 1) swaps += std::popcount(a & b);
  return swaps % 2 ? -1 : 1;
}

inline int metric_sign(int n, Mask common) {
  const Mask negative = ((Mask{1} << n) - 1) << n;
  return std::popcount(common & negative) % 2 ? -1 : 1;
}

enum class Op { product, wedge, left, right };

inline Element combine(const Element& u, const Element& v, Op op) {
  Element out{u.n, {}};
  for (const auto& [a, x] : u.c)
    for (const auto& [b, y] : v.c) {
      const Mask common = a & b;
      if (op == Op::wedge && common) continue;
      if (op == Op::left && common != a) continue;   // a ⊆ b
      if (op == Op::right && common != b) continue;  // b ⊆ a
      const int s = reorder_sign(a, b) * metric_sign(u.n, common);
      out.add(a ^ b, Scalar(s) * x * y);
    }
  return out;
}

inline Element product(const Element& u, const Element& v) { return combine(u, v, Op::product); }
inline Element wedge(const Element& u, const Element& v) { return combine(u, v, Op::wedge); }
inline Element lcontract(const Element& u, const Element& v) { return combine(u, v, Op::left); }
inline Element rcontract(const Element& u, const Element& v) { return combine(u, v, Op::right); }

inline Element plus(const Element& u, const Element& v) {
  Element out = u;
  for (const auto& [m, s] : v.c) out.add(m, s);
  return out;
}

inline Element reverse(const Element& u) {
  Element out{u.n, {}};
  for (const auto& [m, s] : u.c) {
    const int r = std::popcount(m);
    out.add(m, (r * (r - 1) / 2) % 2 ? -s : s);
  }
  return out;
}

inline Element scalar(int n, const Scalar& s) {
  Element out{n, {}};
  out.add(0, s);
  return out;
}

inline Scalar scalar_part(const Element& u) {
  auto it = u.c.find(0);
  return it == u.c.end() ? Scalar() : it->second;
}

// Gram-determinant pairing, ⟨ũ v⟩₀ on an orthonormal basis.
inline Scalar bilinear(const Element& u, const Element& v) { return scalar_part(product(reverse(u), v)); }

// e_k = (σ_k − σ_{n+k})/√2, θ^k = (σ_k + σ_{n+k})/√2
inline Element generator(int n, int gen) {
  const bool is_e = gen < n;
  const int k = is_e ? gen : gen - n;
  Element out{n, {}};
  out.add(Mask{1} << k, Scalar::inv_sqrt2());
  out.add(Mask{1} << (n + k), is_e ? -Scalar::inv_sqrt2() : Scalar::inv_sqrt2());
  return out;
}

// Witt blades are outer products of their generators in ascending order.
inline Element from_library(const hyclif::Multivecfor& u) {
  const int n = u.context()->dim();
  Element out{n, {}};
  for (const auto& t : u.terms()) {
    Element blade = scalar(n, t.coeff);
    for (int g = 0; g < 2 * n; ++g)
      if (t.blade & (hyclif::Blade{1} << g)) blade = wedge(blade, generator(n, g));
    out = plus(out, blade);
  }
  return out;
}

}  // namespace oracle
