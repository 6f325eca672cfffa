#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyclif/matrix.hpp"
#include "hyclif/multivecfor.hpp"
#include "hyclif/vecfor.hpp"

namespace hyclif {

// ---------------------------------------------------------------------------
// Classification, conjugation, bracket

enum class Causality { positive, null, negative };

struct Classification {
  Causality causality;
  bool unit;

  friend bool operator==(const Classification&, const Classification&) = default;
};

inline const char* to_string(Causality c) {
  switch (c) {
    case Causality::positive: return "positive";
    case Causality::null: return "null";
    case Causality::negative: return "negative";
  }
  return "?";
}

inline Classification classify(const Vecfor& x) {
  const Scalar p = x.self_pairing();
  const int s = p.sign();
  const Causality c = s > 0 ? Causality::positive : (s < 0 ? Causality::negative : Causality::null);
  return {c, p == Scalar(1) || p == Scalar(-1)};
}

// x̄ = (−x_*) ⊕ x^*
inline Vecfor conjugate(const Vecfor& x) { return {Scalar(-1) * x.vec(), x.form()}; }

// [x,y] = ⟨x̄,y⟩ = x*(y_*) − y*(x_*)
inline Scalar bracket(const Vecfor& x, const Vecfor& y) { return bilinear(conjugate(x), y); }

// ---------------------------------------------------------------------------
// Orthonormal σ basis

// σ_k = (e_k ⊕ θ^k)/√2, σ_{n+k} = (−e_k ⊕ θ^k)/√2, k = 1..n.
inline std::vector<Vecfor> sigma_basis(int n) {
  std::vector<Vecfor> basis;
  const Scalar h = Scalar::inv_sqrt2();
  for (int k = 1; k <= n; ++k) basis.push_back(Vecfor::e(n, k, h) + Vecfor::t(n, k, h));
  for (int k = 1; k <= n; ++k) basis.push_back(Vecfor::e(n, k, -h) + Vecfor::t(n, k, h));
  return basis;
}

// x^k = (x*_k + x_*^k)/√2, x^{n+k} = (x*_k − x_*^k)/√2.
inline Vector sigma_components(const Vecfor& x) {
  const int n = x.dim();
  const Scalar h = Scalar::inv_sqrt2();
  Vector c(static_cast<std::size_t>(2 * n));
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    c[k] = h * (x.form()[k] + x.vec()[k]);
    c[static_cast<std::size_t>(n) + k] = h * (x.form()[k] - x.vec()[k]);
  }
  return c;
}

inline Vecfor from_sigma_components(const Vector& c) {
  const int n = static_cast<int>(c.size() / 2);
  const auto basis = sigma_basis(n);
  Vecfor x(n);
  for (std::size_t j = 0; j < c.size(); ++j) x = x + c[j] * basis[j];
  return x;
}

inline Matrix gram_matrix(const std::vector<Vecfor>& basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = bilinear(basis[i], basis[j]);
  return g;
}

// Reciprocal basis {b^j}: ⟨b^j, b_l⟩ = δ^j_l, from the exact inverse Gram matrix.
inline std::vector<Vecfor> reciprocal_basis(const std::vector<Vecfor>& basis) {
  const Matrix ginv = gram_matrix(basis).inverse();
  std::vector<Vecfor> out;
  const int n = basis.front().dim();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Vecfor r(n);
    for (std::size_t l = 0; l < basis.size(); ++l) r = r + ginv(j, l) * basis[l];
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orientation

inline Multivecfor wedge_all(const ContextPtr& ctx, const std::vector<Vecfor>& vs) {
  Multivecfor acc = one(ctx);
  for (const auto& v : vs) acc = wedge(acc, v.to_multivecfor(ctx));
  return acc;
}

// σ = σ1 ∧ … ∧ σ2n, built from the σ basis itself.
inline Multivecfor orientation_sigma(const ContextPtr& ctx) { return wedge_all(ctx, sigma_basis(ctx->dim())); }

// σ built from the dual pair e'_i = Σ_j A_ji e_j, θ'^i = Σ_j (A⁻¹)_ij θ^j.
inline Multivecfor orientation_from_dual_pair(const ContextPtr& ctx, const Matrix& a) {
  const int n = ctx->dim();
  if (a.rows() != static_cast<std::size_t>(n) || !a.is_square())
    throw Error(Errc::invalid_argument, "basis change must be n x n");
  const Matrix ainv = a.inverse();
  const Scalar h = Scalar::inv_sqrt2();
  std::vector<Vecfor> e_new, t_new;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    e_new.emplace_back(a.column(i), Vector(static_cast<std::size_t>(n)));
    t_new.emplace_back(Vector(static_cast<std::size_t>(n)), ainv.row(i));
  }
  std::vector<Vecfor> sig;
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) sig.push_back(h * (e_new[k] + t_new[k]));
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) sig.push_back(h * (t_new[k] - e_new[k]));
  return wedge_all(ctx, sig);
}

// ---------------------------------------------------------------------------
// Second-order space H_V ⊕ H_V*, coordinates over (σ_1..σ_2n ; σ^1..σ^2n)

inline Matrix second_order_form(int n) {
  const std::size_t m = static_cast<std::size_t>(2 * n);
  Matrix f(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    f(i, m + i) = 1;
    f(m + i, i) = 1;
  }
  return f;
}

// Σ_k, Σ_{n+k} = (σ ⊕ σ^)/√2 and Σ_{2n+k}, Σ_{3n+k} = (−σ ⊕ σ^)/√2.
inline std::vector<Vector> second_order_basis(int n) {
  const std::size_t m = static_cast<std::size_t>(2 * n);
  const Scalar h = Scalar::inv_sqrt2();
  std::vector<Vector> out;
  for (int sign : {1, -1}) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector v(2 * m);
      v[j] = sign > 0 ? h : -h;
      v[m + j] = h;
      out.push_back(std::move(v));
    }
  }
  return out;
}

inline Matrix second_order_gram(int n) {
  const auto basis = second_order_basis(n);
  const Matrix f = second_order_form(n);
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = dot(basis[i], f * basis[j]);
  return g;
}

// ---------------------------------------------------------------------------
// Symmetric forms and the split ρ_b : H_V → (V,b) ⊕ (V,−b)

class SymmetricForm {
public:
  explicit SymmetricForm(Matrix b) : b_(std::move(b)) {
    if (!b_.is_square() || b_.rows() == 0) throw Error(Errc::invalid_argument, "form must be square");
    if (!b_.is_symmetric()) throw Error(Errc::invalid_argument, "form is not symmetric");
    if (b_.det().is_zero()) throw Error(Errc::domain, "singular bilinear form");
    reciprocal_ = b_.inverse();
  }

  int dim() const { return static_cast<int>(b_.rows()); }
  const Matrix& matrix() const { return b_; }
  // b^{ik}, with b^{ik} b_{kj} = δ^i_j
  const Matrix& reciprocal() const { return reciprocal_; }

  Scalar operator()(const Vector& x, const Vector& y) const { return dot(x, b_ * y); }

private:
  Matrix b_;
  Matrix reciprocal_;
};

struct RhoSplit {
  Vector plus;
  Vector minus;
};

// x_± = (b*x* ± x_*)/√2
inline RhoSplit rho_b_split(const SymmetricForm& b, const Vecfor& x) {
  if (b.dim() != x.dim()) throw Error(Errc::invalid_argument, "form and vecfor dimensions differ");
  const Vector raised = b.reciprocal() * x.form();
  const Scalar h = Scalar::inv_sqrt2();
  return {h * (raised + x.vec()), h * (raised - x.vec())};
}

// b(x₊,y₊) − b(x₋,y₋)
inline Scalar rho_b_pairing(const SymmetricForm& b, const RhoSplit& x, const RhoSplit& y) {
  return b(x.plus, y.plus) - b(x.minus, y.minus);
}

// ---------------------------------------------------------------------------
// Subspaces and null subspaces

enum class Ambient { V, V_dual, H_V };

// Span of an exactly independent list of coordinate vectors.
class Subspace {
public:
  Subspace(Ambient ambient, int n, std::vector<Vector> basis)
      : ambient_(ambient), n_(n), basis_(std::move(basis)) {
    for (const auto& v : basis_)
      if (v.size() != ambient_dim()) throw Error(Errc::invalid_argument, "basis vector has wrong length");
    if (rank_of(basis_) != basis_.size()) throw Error(Errc::domain, "subspace basis is linearly dependent");
  }

  // Independent spanning subset of arbitrary generators (rref rows).
  static Subspace span(Ambient ambient, int n, const std::vector<Vector>& gens) {
    std::vector<Vector> basis;
    if (!gens.empty()) {
      const auto [r, pivots] = Matrix::from_rows(gens).rref();
      for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(r.row(i));
    }
    return {ambient, n, std::move(basis)};
  }
  static Subspace whole(Ambient ambient, int n) {
    Subspace z(ambient, n, {});
    const Matrix id = Matrix::identity(z.ambient_dim());
    for (std::size_t i = 0; i < z.ambient_dim(); ++i) z.basis_.push_back(id.row(i));
    return z;
  }

  Ambient ambient() const { return ambient_; }
  int n() const { return n_; }
  std::size_t ambient_dim() const { return static_cast<std::size_t>(ambient_ == Ambient::H_V ? 2 * n_ : n_); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const {
    if (is_zero(v)) return true;
    std::vector<Vector> rows = basis_;
    rows.push_back(v);
    return rank_of(rows) == basis_.size();
  }
  bool is_subspace_of(const Subspace& o) const {
    return ambient_ == o.ambient_ &&
           std::all_of(basis_.begin(), basis_.end(), [&](const Vector& v) { return o.contains(v); });
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.is_subspace_of(b);
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.require_same_ambient(b);
    std::vector<Vector> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return span(a.ambient_, a.n_, gens);
  }

  // Solves Σαᵢaᵢ = Σβⱼbⱼ directly; independent of the null-space calculus.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.require_same_ambient(b);
    if (a.dim() == 0 || b.dim() == 0) return {a.ambient_, a.n_, {}};
    std::vector<Vector> cols = a.basis_;
    for (const auto& v : b.basis_) cols.push_back(Scalar(-1) * v);
    const auto kernel = Matrix::from_columns(cols).nullspace();
    std::vector<Vector> gens;
    for (const auto& k : kernel) {
      Vector w(a.ambient_dim());
      for (std::size_t i = 0; i < a.dim(); ++i) w = w + k[i] * a.basis_[i];
      gens.push_back(std::move(w));
    }
    return span(a.ambient_, a.n_, gens);
  }

private:
  void require_same_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_ || n_ != o.n_) throw Error(Errc::invalid_argument, "subspaces in different spaces");
  }

  Ambient ambient_;
  int n_;
  std::vector<Vector> basis_;
};

// S′ = {α : α(y) = 0 ∀ y ∈ S}; also maps V* subspaces back into V.
inline Subspace null_subspace(const Subspace& s) {
  if (s.ambient() == Ambient::H_V) throw Error(Errc::invalid_argument, "null subspace needs V or V* input");
  const Ambient target = s.ambient() == Ambient::V ? Ambient::V_dual : Ambient::V;
  if (s.dim() == 0) return Subspace::whole(target, s.n());
  return {target, s.n(), Matrix::from_rows(s.basis()).nullspace()};
}

// I(S) = S ⊕ S′ inside H_V.
inline Subspace isotropic_I(const Subspace& s) {
  if (s.ambient() != Ambient::V) throw Error(Errc::invalid_argument, "I(S) expects S inside V");
  const Subspace sp = null_subspace(s);
  const std::size_t n = static_cast<std::size_t>(s.n());
  std::vector<Vector> basis;
  for (const auto& v : s.basis()) {
    Vector w(2 * n);
    std::copy(v.begin(), v.end(), w.begin());
    basis.push_back(std::move(w));
  }
  for (const auto& a : sp.basis()) {
    Vector w(2 * n);
    std::copy(a.begin(), a.end(), w.begin() + static_cast<std::ptrdiff_t>(n));
    basis.push_back(std::move(w));
  }
  return {Ambient::H_V, s.n(), std::move(basis)};
}

// Gram of ⟨,⟩ in Witt coordinates.
inline Matrix witt_gram(int n) {
  const std::size_t m = static_cast<std::size_t>(n);
  Matrix g(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    g(i, m + i) = 1;
    g(m + i, i) = 1;
  }
  return g;
}

inline bool totally_isotropic(const Subspace& s) {
  if (s.ambient() != Ambient::H_V) throw Error(Errc::invalid_argument, "isotropy is defined in H_V");
  const Matrix g = witt_gram(s.n());
  for (const auto& x : s.basis())
    for (const auto& y : s.basis())
      if (!dot(x, g * y).is_zero()) return false;
  return true;
}

}  // namespace hyclif
