#pragma once

#include <utility>

#include "hyclif/matrix.hpp"
#include "hyclif/multivecfor.hpp"

namespace hyclif {

// x = x_* ⊕ x^*: n vector components on e_k and n form components on θ^k.
class Vecfor {
public:
  Vecfor() = default;
  explicit Vecfor(int n) : vec_(static_cast<std::size_t>(n)), form_(static_cast<std::size_t>(n)) {}
  Vecfor(Vector vec, Vector form) : vec_(std::move(vec)), form_(std::move(form)) {
    if (vec_.size() != form_.size()) throw Error(Errc::invalid_argument, "vecfor parts differ in dimension");
  }

  static Vecfor e(int n, int k, Scalar c = 1) {
    Vecfor x(n);
    x.vec_.at(static_cast<std::size_t>(k - 1)) = std::move(c);
    return x;
  }
  static Vecfor t(int n, int k, Scalar c = 1) {
    Vecfor x(n);
    x.form_.at(static_cast<std::size_t>(k - 1)) = std::move(c);
    return x;
  }

  // Witt coordinates (x_*^1..x_*^n, x*_1..x*_n).
  static Vecfor from_coords(const Vector& c) {
    if (c.size() % 2) throw Error(Errc::invalid_argument, "odd coordinate count for vecfor");
    const auto n = static_cast<std::ptrdiff_t>(c.size() / 2);
    return {Vector(c.begin(), c.begin() + n), Vector(c.begin() + n, c.end())};
  }

  static Vecfor from_multivecfor(const Multivecfor& u) {
    const auto& ctx = u.context();
    if (!ctx) throw Error(Errc::invalid_argument, "vecfor from context-free element");
    if (auto g = u.homogeneous_grade(); g && *g != 1)
      throw Error(Errc::invalid_argument, "element is not a vecfor (grade 1)");
    Vecfor x(ctx->dim());
    for (const auto& t : u.terms()) {
      const int gen = std::countr_zero(t.blade);
      if (gen < ctx->dim()) {
        x.vec_[static_cast<std::size_t>(gen)] = t.coeff;
      } else {
        x.form_[static_cast<std::size_t>(gen - ctx->dim())] = t.coeff;
      }
    }
    return x;
  }

  int dim() const { return static_cast<int>(vec_.size()); }
  const Vector& vec() const { return vec_; }
  const Vector& form() const { return form_; }

  Vector coords() const {
    Vector c = vec_;
    c.insert(c.end(), form_.begin(), form_.end());
    return c;
  }

  Multivecfor to_multivecfor(const ContextPtr& ctx) const {
    if (ctx->dim() != dim()) throw Error(Errc::context_mismatch, "vecfor dimension differs from context");
    std::vector<Term> terms;
    for (int k = 0; k < dim(); ++k) {
      if (!vec_[static_cast<std::size_t>(k)].is_zero()) terms.push_back({ctx->e(k + 1), vec_[static_cast<std::size_t>(k)]});
      if (!form_[static_cast<std::size_t>(k)].is_zero()) terms.push_back({ctx->t(k + 1), form_[static_cast<std::size_t>(k)]});
    }
    return Multivecfor::from_terms(ctx, std::move(terms));
  }

  // x^*(x_*)
  Scalar self_pairing() const { return dot(form_, vec_); }

  friend Vecfor operator+(const Vecfor& a, const Vecfor& b) { return {a.vec_ + b.vec_, a.form_ + b.form_}; }
  friend Vecfor operator-(const Vecfor& a, const Vecfor& b) { return {a.vec_ - b.vec_, a.form_ - b.form_}; }
  friend Vecfor operator*(const Scalar& s, const Vecfor& a) { return {s * a.vec_, s * a.form_}; }
  friend bool operator==(const Vecfor&, const Vecfor&) = default;

private:
  Vector vec_;
  Vector form_;
};

// ⟨x,y⟩ = x*(y_*) + y*(x_*)
inline Scalar bilinear(const Vecfor& x, const Vecfor& y) {
  if (x.dim() != y.dim()) throw Error(Errc::context_mismatch, "vecfors of different dimension");
  return dot(x.form(), y.vec()) + dot(y.form(), x.vec());
}

// 𝔡 = x⌟ acting on the exterior algebra.
inline Multivecfor differential_apply(const Vecfor& x, const Multivecfor& u) {
  if (!u.context()) return u;
  return lcontract(x.to_multivecfor(u.context()), u);
}

}  // namespace hyclif
