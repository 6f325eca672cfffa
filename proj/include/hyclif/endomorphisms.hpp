#pragma once

#include <utility>
#include <vector>

#include "hyclif/hyperbolic_space.hpp"
#include "hyclif/matrix.hpp"
#include "hyclif/vecfor.hpp"

namespace hyclif {

// Linear map on V, V* or H_V stored as its matrix in the e / θ / Witt basis.
template <Ambient Space>
class LinearMap {
public:
  explicit LinearMap(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw Error(Errc::invalid_argument, "endomorphism matrix must be square");
  }
  static LinearMap identity(std::size_t dim) { return LinearMap(Matrix::identity(dim)); }

  const Matrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  int n() const { return static_cast<int>(Space == Ambient::H_V ? size() / 2 : size()); }

  Vector operator()(const Vector& v) const { return m_ * v; }

  Scalar trace() const { return m_.trace(); }
  Scalar det() const { return m_.det(); }
  std::size_t rank() const { return m_.rank(); }

  Subspace image() const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < size(); ++j) cols.push_back(m_.column(j));
    return Subspace::span(Space, n(), cols);
  }
  Subspace kernel() const { return {Space, n(), m_.nullspace()}; }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ * b.m_); }
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

private:
  Matrix m_;
};

using LinMapV = LinearMap<Ambient::V>;
using LinMapVDual = LinearMap<Ambient::V_dual>;
using HEndo = LinearMap<Ambient::H_V>;

// (φ*α)x = α(φx): in the θ basis the dual acts by the transpose.
inline LinMapVDual dual_map(const LinMapV& phi) { return LinMapVDual(phi.matrix().transpose()); }
inline LinMapV dual_map(const LinMapVDual& phi) { return LinMapV(phi.matrix().transpose()); }

// φ(S) ⊆ S
inline bool stabilizes(const Subspace& s, const Matrix& m) {
  return std::all_of(s.basis().begin(), s.basis().end(), [&](const Vector& v) { return s.contains(m * v); });
}

// I(φ) = φ ⊕ φ*
inline HEndo isotropic_extension(const LinMapV& phi) {
  const std::size_t n = phi.size();
  const Matrix dual = phi.matrix().transpose();
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = phi.matrix()(i, j);
      m(n + i, n + j) = dual(i, j);
    }
  return HEndo(std::move(m));
}

// y_* ↦ x*(y_*) x_*
inline LinMapV vecfor_endo(const Vecfor& x) {
  const std::size_t n = static_cast<std::size_t>(x.dim());
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x.vec()[i] * x.form()[j];
  return LinMapV(std::move(m));
}

namespace detail {
inline Scalar non_null_pairing(const Vecfor& x, const char* what) {
  Scalar c = x.self_pairing();
  if (c.is_zero()) throw Error(Errc::domain, std::string(what) + " of a null vecfor is undefined");
  return c;
}
}  // namespace detail

// P_x y_* = (x*y_* / x*x_*) x_*, extended isotropically.
inline HEndo projection(const Vecfor& x) {
  const Scalar c = detail::non_null_pairing(x, "projection");
  Matrix p = vecfor_endo(x).matrix();
  p *= c.inverse();
  return isotropic_extension(LinMapV(std::move(p)));
}

// R_x y_* = y_* − 2 (x*(y_*)/x*(x_*)) x_*, extended isotropically.
inline HEndo reflection(const Vecfor& x) {
  const Scalar c = detail::non_null_pairing(x, "reflection");
  Matrix r = vecfor_endo(x).matrix();
  r *= Scalar(-2) * c.inverse();
  r += Matrix::identity(static_cast<std::size_t>(x.dim()));
  return isotropic_extension(LinMapV(std::move(r)));
}

// Columns are the σ_k in Witt coordinates.
inline Matrix witt_to_sigma_change(int n) {
  std::vector<Vector> cols;
  for (const auto& s : sigma_basis(n)) cols.push_back(s.coords());
  return Matrix::from_columns(cols);
}

// Matrix of f in the σ basis: C⁻¹ M C.
inline Matrix endo_matrix_sigma(const HEndo& f) {
  const Matrix c = witt_to_sigma_change(f.n());
  return c.inverse() * f.matrix() * c;
}

inline HEndo endo_from_sigma_matrix(const Matrix& m_sigma) {
  const Matrix c = witt_to_sigma_change(static_cast<int>(m_sigma.rows() / 2));
  return HEndo(c * m_sigma * c.inverse());
}

// ⟨f y, z⟩ = ⟨y, f z⟩ for all y, z, i.e. Mᵀ G = G M.
inline bool is_self_dual(const Matrix& m, const Matrix& gram) { return m.transpose() * gram == gram * m; }
// ⟨f y, f z⟩ = ⟨y, z⟩, i.e. Mᵀ G M = G.
inline bool is_orthogonal(const Matrix& m, const Matrix& gram) { return m.transpose() * gram * m == gram; }

// Gram of ⟨,⟩ in the σ basis: diag(1,…,1,−1,…,−1).
inline Matrix sigma_gram(int n) {
  Vector d(static_cast<std::size_t>(2 * n), 1);
  for (std::size_t i = static_cast<std::size_t>(n); i < d.size(); ++i) d[i] = -1;
  return Matrix::diagonal(d);
}

struct HyperplaneRep {
  std::vector<Vector> s0_basis;  // S₀(α), n−1 vectors
  Vector point;                  // a point of S_a(α)
};

// Deterministic: S₀ from reduced row echelon form with pivot order e1..en,
// the point is (a / α_j) e_j for the first nonzero α_j.
inline HyperplaneRep hyperplane_representation(const Vector& alpha, const Scalar& a) {
  if (is_zero(alpha)) throw Error(Errc::domain, "hyperplanes of the zero form are undefined");
  HyperplaneRep rep;
  rep.s0_basis = Matrix::from_rows({alpha}).nullspace();
  std::size_t j = 0;
  while (alpha[j].is_zero()) ++j;
  rep.point = Vector(alpha.size());
  rep.point[j] = a / alpha[j];
  return rep;
}

}  // namespace hyclif
