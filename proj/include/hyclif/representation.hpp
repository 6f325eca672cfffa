#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyclif/hyperbolic_space.hpp"
#include "hyclif/matrix.hpp"
#include "hyclif/multivecfor.hpp"
#include "hyclif/spinor.hpp"
#include "hyclif/vecfor.hpp"

namespace hyclif {

// Basis of ∧V as e-masks, ordered by (|S|, lexicographic on the sorted index tuple).
inline std::vector<Blade> fock_basis(int n) {
  std::vector<Blade> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& tup : increasing_tuples(n, k)) {
      Blade b = 0;
      for (int i : tup) b |= Blade{1} << (i - 1);
      out.push_back(b);
    }
  return out;
}

inline std::vector<std::string> fock_labels(const ContextPtr& ctx) {
  std::vector<std::string> out;
  for (Blade b : fock_basis(ctx->dim())) out.push_back(ctx->blade_name(b));
  return out;
}

// Endomorphism of ∧V in the fock_basis order.
class FockMatrix {
public:
  FockMatrix(int n, Matrix m) : n_(n), m_(std::move(m)) {
    if (m_.rows() != side() || m_.cols() != side()) throw Error(Errc::invalid_argument, "Fock matrix must be 2^n square");
  }
  static FockMatrix identity(int n) { return {n, Matrix::identity(std::size_t{1} << n)}; }

  int n() const { return n_; }
  std::size_t side() const { return std::size_t{1} << n_; }
  const Matrix& matrix() const { return m_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) { return {a.n_, a.m_ * b.m_}; }
  friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { a.m_ += b.m_; return a; }
  friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { a.m_ -= b.m_; return a; }
  friend FockMatrix operator*(const Scalar& s, FockMatrix a) { a.m_ *= s; return a; }
  friend bool operator==(const FockMatrix& a, const FockMatrix& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

private:
  int n_;
  Matrix m_;
};

// Columns of the linear map f: ∧V → ∧V in the fock basis.
template <class F>
FockMatrix fock_matrix_of(const ContextPtr& ctx, F&& f) {
  const auto basis = fock_basis(ctx->dim());
  std::unordered_map<Blade, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  Matrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Multivecfor image = f(Multivecfor::blade(ctx, basis[j]));
    for (const auto& t : image.terms()) {
      auto it = index.find(t.blade);
      if (it == index.end()) throw Error(Errc::domain, "map leaves the exterior algebra of V");
      m(it->second, j) = t.coeff;
    }
  }
  return {ctx->dim(), std::move(m)};
}

// φ_x(u) = √2 (x*⌟u + x_*∧u)
inline FockMatrix clifford_map_matrix(const ContextPtr& ctx, const Vecfor& x) {
  const Vecfor form_part(Vector(x.vec().size()), x.form());
  const Vecfor vec_part(x.vec(), Vector(x.form().size()));
  const Multivecfor xf = form_part.to_multivecfor(ctx);
  const Multivecfor xv = vec_part.to_multivecfor(ctx);
  return fock_matrix_of(ctx, [&](const Multivecfor& u) { return Scalar::sqrt2() * (lcontract(xf, u) + wedge(xv, u)); });
}

namespace detail {

class RepBuilder {
public:
  explicit RepBuilder(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  FockMatrix of(const Multivecfor& u) {
    Matrix m(side(), side());
    for (const auto& t : u.terms()) {
      Matrix b = blade(t.blade).matrix();
      b *= t.coeff;
      m += b;
    }
    return {ctx_->dim(), std::move(m)};
  }

  // rep(x∧A) = rep(x) rep(A) − rep(x⌟A), x the lowest factor of the blade.
  const FockMatrix& blade(Blade b) {
    if (auto it = cache_.find(b); it != cache_.end()) return it->second;
    FockMatrix r = FockMatrix::identity(ctx_->dim());
    if (b != 0) {
      const int gen = std::countr_zero(b);
      const Blade rest = b & (b - 1);
      const Multivecfor x = Multivecfor::blade(ctx_, AlgebraContext::bit(gen));
      const FockMatrix rx = generator(gen);
      const FockMatrix ra = blade(rest);
      r = rx * ra - of(lcontract(x, Multivecfor::blade(ctx_, rest)));
    }
    return cache_.emplace(b, std::move(r)).first->second;
  }

private:
  std::size_t side() const { return std::size_t{1} << ctx_->dim(); }

  FockMatrix generator(int gen) {
    const int n = ctx_->dim();
    const Vecfor x = gen < n ? Vecfor::e(n, gen + 1) : Vecfor::t(n, gen - n + 1);
    return clifford_map_matrix(ctx_, x);
  }

  ContextPtr ctx_;
  std::map<Blade, FockMatrix> cache_;
};

}  // namespace detail

namespace detail {

// Blade images depend only on n; built once per dimension and shared.
inline const std::shared_ptr<RepBuilder>& rep_builder(const ContextPtr& ctx) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<RepBuilder>> table;
  std::lock_guard lock(mu);
  auto& slot = table[ctx->dim()];
  if (!slot) {
    slot = std::make_shared<RepBuilder>(ctx);
    for (Blade b : ctx->blades_canonical()) (void)slot->blade(b);
  }
  return slot;
}

}  // namespace detail

inline FockMatrix rep(const Multivecfor& u) {
  if (!u.context()) throw Error(Errc::invalid_argument, "rep needs a context");
  // Fully populated, so concurrent reads of the cache are safe.
  return detail::rep_builder(u.context())->of(u);
}

struct EndIsoReport {
  std::size_t rank = 0;
  bool is_isomorphism = false;
  bool even_block_diagonal = false;    // even blades preserve the parity split of ∧V
  bool odd_block_antidiagonal = false;  // odd blades exchange it
};

inline constexpr int max_end_iso_dimension = 3;

inline EndIsoReport verify_end_iso(int n) {
  if (n > max_end_iso_dimension) throw Error(Errc::too_large, "verify_end_iso supports n <= 3");
  const ContextPtr ctx = AlgebraContext::make(n);
  detail::RepBuilder& builder = *detail::rep_builder(ctx);
  const auto basis = fock_basis(n);
  const std::size_t side = basis.size();
  std::vector<Vector> rows;
  EndIsoReport r;
  r.even_block_diagonal = true;
  r.odd_block_antidiagonal = true;
  for (Blade b : ctx->blades_canonical()) {
    const FockMatrix& m = builder.blade(b);
    Vector flat;
    flat.reserve(side * side);
    const bool even = grade_of(b) % 2 == 0;
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j) {
        flat.push_back(m(i, j));
        if (m(i, j).is_zero()) continue;
        const bool same = (grade_of(basis[i]) + grade_of(basis[j])) % 2 == 0;
        if (even && !same) r.even_block_diagonal = false;
        if (!even && same) r.odd_block_antidiagonal = false;
      }
    rows.push_back(std::move(flat));
  }
  r.rank = rank_of(rows);
  r.is_isomorphism = r.rank == side * side;
  return r;
}

// Applies the end-iso rank test to a base space of dimension 2n.
inline bool grandmother_dimension_check(int n) {
  if (n < 1) throw Error(Errc::out_of_range, "grandmother_dimension_check needs n >= 1");
  if (2 * n > max_end_iso_dimension) throw Error(Errc::too_large, "grandmother_dimension_check supports n = 1");
  const std::size_t expected = std::size_t{1} << (4 * n);
  return verify_end_iso(2 * n).rank == expected;
}

// 2^{4n} = (2^{2n})²; arithmetic only.
inline bool grandmother_dimension_identity(int n) {
  const std::uint64_t side = std::uint64_t{1} << (2 * n);
  return (std::uint64_t{1} << (4 * n)) == side * side;
}

// Matrix of u ↦ m⁻¹(x · m(u)).
inline FockMatrix module_action_matrix(const ContextPtr& ctx, const Vecfor& x) {
  return fock_matrix_of(ctx, [&](const Multivecfor& u) { return ideal_module_action(x, u); });
}

// S = diag((√2)^|S|)
inline FockMatrix grade_scaling(int n) {
  Vector d;
  for (Blade b : fock_basis(n)) {
    Scalar s = 1;
    for (int k = 0; k < grade_of(b); ++k) s *= Scalar::sqrt2();
    d.push_back(s);
  }
  return {n, Matrix::diagonal(d)};
}

// ---------------------------------------------------------------------------
// Cl(V,b) ⊗̂ Cl(V,−b)

// Blade arithmetic for an orthogonal basis f_1..f_n with f_i² = metric[i].
class DiagonalClifford {
public:
  explicit DiagonalClifford(Vector metric) : metric_(std::move(metric)) {}
  int dim() const { return static_cast<int>(metric_.size()); }
  const Vector& metric() const { return metric_; }

  Scalar blade_product_coeff(Blade a, Blade b) const {
    Scalar c = reorder_sign(a, b);
    for (Blade common = a & b; common; common &= common - 1) c *= metric_[static_cast<std::size_t>(std::countr_zero(common))];
    return c;
  }

private:
  // Sign of moving each factor of b left past the factors of a above it.
  static int reorder_sign(Blade a, Blade b) {
    int swaps = 0;
    for (Blade bb = b; bb; bb &= bb - 1) {
      const int i = std::countr_zero(bb);
      swaps += std::popcount(a >> (i + 1));
    }
    return swaps % 2 ? -1 : 1;
  }

  Vector metric_;
};

class GradedTensor {
public:
  using Key = std::pair<Blade, Blade>;

  GradedTensor() = default;
  static GradedTensor unit() {
    GradedTensor t;
    t.terms_[{0, 0}] = 1;
    return t;
  }
  static GradedTensor left_vector(const Vector& c) { return from_vector(c, true); }
  static GradedTensor right_vector(const Vector& c) { return from_vector(c, false); }

  const std::map<Key, Scalar>& terms() const { return terms_; }

  friend GradedTensor operator+(GradedTensor a, const GradedTensor& b) {
    for (const auto& [k, c] : b.terms_) a.add(k, c);
    return a;
  }
  friend GradedTensor operator*(const Scalar& s, GradedTensor a) {
    if (s.is_zero()) return {};
    for (auto& [k, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const GradedTensor&, const GradedTensor&) = default;

  // (a⊗̂b)(c⊗̂d) = (−1)^{|b||c|} ac ⊗̂ bd
  static GradedTensor product(const GradedTensor& x, const GradedTensor& y, const DiagonalClifford& left,
                              const DiagonalClifford& right) {
    GradedTensor out;
    for (const auto& [kx, cx] : x.terms_)
      for (const auto& [ky, cy] : y.terms_) {
        Scalar c = cx * cy;
        if ((grade_of(kx.second) * grade_of(ky.first)) % 2) c = -c;
        c *= left.blade_product_coeff(kx.first, ky.first);
        c *= right.blade_product_coeff(kx.second, ky.second);
        out.add({kx.first ^ ky.first, kx.second ^ ky.second}, c);
      }
    return out;
  }

private:
  static GradedTensor from_vector(const Vector& c, bool left) {
    GradedTensor t;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Key k = left ? Key{Blade{1} << i, 0} : Key{0, Blade{1} << i};
      t.add(k, c[i]);
    }
    return t;
  }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Key, Scalar> terms_;
};

struct Congruence {
  Matrix basis;  // columns f_i in e coordinates
  Vector metric;  // b(f_i, f_i)
};

// Symmetric Gaussian elimination: Pᵀ b P diagonal, P invertible, no square roots.
inline Congruence diagonalize(const SymmetricForm& form) {
  Matrix a = form.matrix();
  const std::size_t n = a.rows();
  Matrix p = Matrix::identity(n);
  auto add_col = [&](Matrix& m, std::size_t dst, std::size_t src, const Scalar& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
  };
  auto add_row = [&](Matrix& m, std::size_t dst, std::size_t src, const Scalar& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    // Zero pivot: fold in f_j with f = ±1; one sign gives a nonzero diagonal.
    for (std::size_t j = k + 1; j < n && a(k, k).is_zero(); ++j) {
      for (int f : {1, -1}) {
        if (!(a(j, j) + Scalar(2 * f) * a(k, j)).is_zero()) {
          add_col(a, k, j, f);
          add_row(a, k, j, f);
          add_col(p, k, j, f);
          break;
        }
      }
    }
    if (a(k, k).is_zero()) throw Error(Errc::domain, "singular bilinear form");
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j).is_zero()) continue;
      const Scalar f = -(a(k, j) / a(k, k));
      add_col(a, j, k, f);
      add_row(a, j, k, f);
      add_col(p, j, k, f);
    }
  }
  Vector d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(a(i, i));
  return {std::move(p), std::move(d)};
}

// ρ(x) = x₊⊗̂1 + 1⊗̂x₋ satisfies ρ(x)ρ(y) + ρ(y)ρ(x) = 2⟨x,y⟩ on the Witt basis.
inline bool tensor_split_check(const SymmetricForm& b) {
  const Congruence c = diagonalize(b);
  const int n = b.dim();
  const Matrix p_inv = c.basis.inverse();
  const DiagonalClifford left(c.metric);
  const DiagonalClifford right(Scalar(-1) * c.metric);
  std::vector<Vecfor> witt;
  for (int k = 1; k <= n; ++k) witt.push_back(Vecfor::e(n, k));
  for (int k = 1; k <= n; ++k) witt.push_back(Vecfor::t(n, k));
  std::vector<GradedTensor> images;
  for (const auto& x : witt) {
    const RhoSplit s = rho_b_split(b, x);
    images.push_back(GradedTensor::left_vector(p_inv * s.plus) + GradedTensor::right_vector(p_inv * s.minus));
  }
  for (std::size_t i = 0; i < witt.size(); ++i)
    for (std::size_t j = i; j < witt.size(); ++j) {
      const GradedTensor lhs = GradedTensor::product(images[i], images[j], left, right) +
                               GradedTensor::product(images[j], images[i], left, right);
      if (!(lhs == Scalar(2) * bilinear(witt[i], witt[j]) * GradedTensor::unit())) return false;
    }
  return true;
}

}  // namespace hyclif
