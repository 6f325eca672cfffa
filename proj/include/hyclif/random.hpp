#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hyclif/hyperbolic_space.hpp"
#include "hyclif/matrix.hpp"
#include "hyclif/multivecfor.hpp"
#include "hyclif/vecfor.hpp"

namespace hyclif {

// mt19937_64 is fully specified by the standard; the distributions are not, so
// draws reduce raw outputs directly to keep reports identical across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Independent stream for sub-task `index` of a run seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  // p/q with |p| ≤ 8, 1 ≤ q ≤ 8
  Rational rational() {
    Rational q(range(-8, 8), range(1, 8));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (sgn(r) == 0);
    return r;
  }

  // Mostly rational; one draw in four carries a √2 part.
  Scalar scalar() {
    if (chance(1, 4)) return {rational(), rational()};
    return Scalar(rational());
  }
  Scalar nonzero_scalar() {
    Scalar s;
    do s = scalar();
    while (s.is_zero());
    return s;
  }

private:
  std::mt19937_64 gen_;
};

// Each blade present with probability density_num/density_den (at most one half).
inline Multivecfor random_multivecfor(Rng& rng, const ContextPtr& ctx, std::uint64_t density_num = 1,
                                      std::uint64_t density_den = 2) {
  std::vector<Term> terms;
  for (Blade b : ctx->blades_canonical())
    if (rng.chance(density_num, density_den)) terms.push_back({b, rng.nonzero_scalar()});
  return Multivecfor::from_terms(ctx, std::move(terms));
}

inline Multivecfor random_homogeneous(Rng& rng, const ContextPtr& ctx, int r) {
  std::vector<Term> terms;
  for (Blade b : ctx->blades_canonical())
    if (grade_of(b) == r && rng.chance(1, 2)) terms.push_back({b, rng.nonzero_scalar()});
  return Multivecfor::from_terms(ctx, std::move(terms));
}

// Random element supported on the blades inside `mask`.
inline Multivecfor random_supported(Rng& rng, const ContextPtr& ctx, Blade mask) {
  std::vector<Term> terms;
  for (Blade b : ctx->blades_canonical())
    if ((b & ~mask) == 0 && rng.chance(1, 2)) terms.push_back({b, rng.nonzero_scalar()});
  return Multivecfor::from_terms(ctx, std::move(terms));
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = rng.scalar();
  return v;
}

inline Vecfor random_vecfor(Rng& rng, int n) {
  return {random_vector(rng, static_cast<std::size_t>(n)), random_vector(rng, static_cast<std::size_t>(n))};
}

inline Vecfor random_non_null_vecfor(Rng& rng, int n) {
  Vecfor x;
  do x = random_vecfor(rng, n);
  while (x.self_pairing().is_zero());
  return x;
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(rng.rational());
  return m;
}

inline Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix m;
  do m = random_matrix(rng, n, n);
  while (m.det().is_zero());
  return m;
}

inline SymmetricForm random_symmetric_form(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Scalar(rng.rational());
    if (!m.det().is_zero()) return SymmetricForm(std::move(m));
  }
}

// Span of `gens` random vectors of V (or V*) with small integer entries; may be degenerate.
inline Subspace random_subspace(Rng& rng, Ambient ambient, int n) {
  const std::size_t count = rng.below(static_cast<std::uint64_t>(n) + 1);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < count; ++i) {
    Vector v(static_cast<std::size_t>(n));
    for (auto& x : v) x = Scalar(rng.range(-2, 2));
    gens.push_back(std::move(v));
  }
  return Subspace::span(ambient, n, gens);
}

}  // namespace hyclif
