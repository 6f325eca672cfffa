#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyclif/context.hpp"
#include "hyclif/scalar.hpp"

namespace hyclif {

struct Term {
  Blade blade;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Element of the exterior algebra of H_V, equivalently of Cl(H_V).
// Terms are nonzero and kept in canonical (grade, mask) order.
class Multivecfor {
public:
  Multivecfor() = default;
  explicit Multivecfor(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Multivecfor scalar(ContextPtr ctx, Scalar s) {
    return blade(std::move(ctx), 0, std::move(s));
  }
  static Multivecfor blade(ContextPtr ctx, Blade b, Scalar s = 1) {
    if (b & ~ctx->full_mask()) throw Error(Errc::out_of_range, "blade outside context");
    Multivecfor u(std::move(ctx));
    if (!s.is_zero()) u.terms_.push_back({b, std::move(s)});
    return u;
  }
  static Multivecfor e(ContextPtr ctx, int k) {
    check_index(*ctx, k);
    const Blade b = ctx->e(k);
    return blade(std::move(ctx), b);
  }
  static Multivecfor t(ContextPtr ctx, int k) {
    check_index(*ctx, k);
    const Blade b = ctx->t(k);
    return blade(std::move(ctx), b);
  }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(Blade b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, Blade x) { return canonical_less(t.blade, x); });
    return (it != terms_.end() && it->blade == b) ? it->coeff : Scalar{};
  }

  // Scalar part ⟨u⟩_0.
  Scalar scalar_part() const { return coeff(0); }

  std::optional<int> homogeneous_grade() const {
    if (terms_.empty()) return std::nullopt;
    const int g = grade_of(terms_.front().blade);
    if (grade_of(terms_.back().blade) != g) return std::nullopt;
    return g;
  }

  // Every stored blade is drawn from `mask` only.
  bool supported_in(Blade mask) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return (t.blade & ~mask) == 0; });
  }

  Multivecfor operator-() const {
    Multivecfor r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Multivecfor& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coeff *= s;
    }
    return *this;
  }

  friend Multivecfor operator*(Multivecfor u, const Scalar& s) { return u *= s; }
  friend Multivecfor operator*(const Scalar& s, Multivecfor u) { return u *= s; }

  friend bool operator==(const Multivecfor& a, const Multivecfor& b) {
    return a.terms_ == b.terms_ && (a.ctx_ == b.ctx_ || a.terms_.empty());
  }

  // Build from arbitrary (possibly repeated, possibly zero) terms.
  static Multivecfor from_terms(ContextPtr ctx, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return canonical_less(a.blade, b.blade); });
    Multivecfor u(std::move(ctx));
    for (auto& t : terms) {
      if (!u.terms_.empty() && u.terms_.back().blade == t.blade) {
        u.terms_.back().coeff += t.coeff;
      } else {
        u.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(u.terms_, [](const Term& t) { return t.coeff.is_zero(); });
    return u;
  }

  template <class F>
  Multivecfor map_terms(F&& f) const {
    Multivecfor r(ctx_);
    for (const auto& t : terms_) {
      Scalar c = f(t);
      if (!c.is_zero()) r.terms_.push_back({t.blade, std::move(c)});
    }
    return r;
  }

  static void check_index(const AlgebraContext& ctx, int k) {
    if (k < 1 || k > ctx.dim())
      throw Error(Errc::out_of_range, "generator index " + std::to_string(k) + " outside 1.." +
                                          std::to_string(ctx.dim()));
  }

private:
  ContextPtr ctx_;
  std::vector<Term> terms_;
};

namespace detail {

inline const ContextPtr& common_context(const Multivecfor& a, const Multivecfor& b) {
  if (!a.context()) return b.context();
  if (b.context() && a.context() != b.context())
    throw Error(Errc::context_mismatch, "operands belong to different algebra contexts");
  return a.context();
}

// Collects blade coefficients; dense for small algebras.
class Accumulator {
public:
  explicit Accumulator(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (ctx_ && ctx_->blade_count() <= dense_limit) {
      dense_.resize(ctx_->blade_count());
      touched_flag_.assign(ctx_->blade_count(), false);
    }
  }

  Scalar& at(Blade b) {
    if (dense_.empty()) return sparse_[b];
    if (!touched_flag_[b]) {
      touched_flag_[b] = true;
      touched_.push_back(b);
    }
    return dense_[b];
  }

  void add(Blade b, const Scalar& s, std::int64_t k = 1) { at(b).add_scaled(s, k); }
  void add_product(Blade b, const Scalar& x, const Scalar& y, std::int64_t k) {
    at(b).add_product(x, y, k);
  }
  void add(const Multivecfor& u, std::int64_t k = 1) {
    for (const auto& t : u.terms()) add(t.blade, t.coeff, k);
  }

  Multivecfor finish() && {
    std::vector<Term> terms;
    if (!dense_.empty()) {
      for (Blade b : touched_)
        if (!dense_[b].is_zero()) terms.push_back({b, std::move(dense_[b])});
    } else {
      for (auto& [b, s] : sparse_)
        if (!s.is_zero()) terms.push_back({b, std::move(s)});
    }
    return Multivecfor::from_terms(ctx_, std::move(terms));
  }

private:
  static constexpr std::size_t dense_limit = 4096;
  ContextPtr ctx_;
  std::vector<Scalar> dense_;
  std::vector<bool> touched_flag_;
  std::vector<Blade> touched_;
  std::unordered_map<Blade, Scalar> sparse_;
};

}  // namespace detail

inline Multivecfor operator+(const Multivecfor& a, const Multivecfor& b) {
  detail::Accumulator acc(detail::common_context(a, b));
  acc.add(a);
  acc.add(b);
  return std::move(acc).finish();
}
inline Multivecfor operator-(const Multivecfor& a, const Multivecfor& b) {
  detail::Accumulator acc(detail::common_context(a, b));
  acc.add(a);
  acc.add(b, -1);
  return std::move(acc).finish();
}
inline Multivecfor& operator+=(Multivecfor& a, const Multivecfor& b) { return a = a + b; }
inline Multivecfor& operator-=(Multivecfor& a, const Multivecfor& b) { return a = a - b; }

// ---------------------------------------------------------------------------
// Grade structure and involutions

inline Multivecfor grade_part(const Multivecfor& u, int r) {
  if (!u.context()) return u;
  if (r < 0 || r > u.context()->generator_count())
    throw Error(Errc::out_of_range, "grade " + std::to_string(r) + " outside 0.." +
                                        std::to_string(u.context()->generator_count()));
  return u.map_terms([r](const Term& t) { return grade_of(t.blade) == r ? t.coeff : Scalar{}; });
}

inline Multivecfor even_part(const Multivecfor& u) {
  return u.map_terms([](const Term& t) { return grade_of(t.blade) % 2 == 0 ? t.coeff : Scalar{}; });
}
inline Multivecfor odd_part(const Multivecfor& u) {
  return u.map_terms([](const Term& t) { return grade_of(t.blade) % 2 == 1 ? t.coeff : Scalar{}; });
}

enum class Involution { grade, reversion, conjugation };

inline int involution_sign(Involution kind, int r) {
  switch (kind) {
    case Involution::grade: return (r % 2) ? -1 : 1;
    case Involution::reversion: return ((r * (r - 1) / 2) % 2) ? -1 : 1;
    case Involution::conjugation: return ((r * (r + 1) / 2) % 2) ? -1 : 1;
  }
  return 1;
}

inline Multivecfor involution(const Multivecfor& u, Involution kind) {
  return u.map_terms([kind](const Term& t) {
    return involution_sign(kind, grade_of(t.blade)) < 0 ? -t.coeff : t.coeff;
  });
}
inline Multivecfor grade_involution(const Multivecfor& u) { return involution(u, Involution::grade); }
inline Multivecfor reversion(const Multivecfor& u) { return involution(u, Involution::reversion); }
inline Multivecfor conjugation(const Multivecfor& u) { return involution(u, Involution::conjugation); }

// ---------------------------------------------------------------------------
// Products

inline Multivecfor wedge(const Multivecfor& u, const Multivecfor& v) {
  detail::Accumulator acc(detail::common_context(u, v));
  for (const auto& a : u.terms())
    for (const auto& b : v.terms())
      if (const int s = wedge_sign(a.blade, b.blade); s != 0)
        acc.add_product(a.blade | b.blade, a.coeff, b.coeff, s);
  return std::move(acc).finish();
}

// Gram-determinant extension of ⟨,⟩; distinct grades are orthogonal.
inline Scalar bilinear(const Multivecfor& u, const Multivecfor& v) {
  const auto& ctx = detail::common_context(u, v);
  Scalar s;
  for (const auto& a : u.terms())
    for (const auto& b : v.terms()) {
      if (grade_of(a.blade) != grade_of(b.blade)) continue;
      if (const auto k = ctx->blade_bilinear(a.blade, b.blade); k != 0) s.add_product(a.coeff, b.coeff, k);
    }
  return s;
}

// u ⌟ v, adjoint to left wedge: ⟨u⌟v, w⟩ = ⟨v, ũ∧w⟩.
inline Multivecfor lcontract(const Multivecfor& u, const Multivecfor& v) {
  const auto& ctx = detail::common_context(u, v);
  detail::Accumulator acc(ctx);
  for (const auto& a : u.terms())
    for (const auto& b : v.terms()) {
      if (grade_of(a.blade) > grade_of(b.blade)) continue;
      for (const auto& [m, k] : ctx->blade_lcontract(a.blade, b.blade)) acc.add_product(m, a.coeff, b.coeff, k);
    }
  return std::move(acc).finish();
}

// v ⌞ u = (ũ ⌟ ṽ)~, adjoint to right wedge: ⟨v⌞u, w⟩ = ⟨v, w∧ũ⟩.
inline Multivecfor rcontract(const Multivecfor& v, const Multivecfor& u) {
  return reversion(lcontract(reversion(u), reversion(v)));
}

// Clifford product.
inline Multivecfor gp(const Multivecfor& u, const Multivecfor& v) {
  const auto& ctx = detail::common_context(u, v);
  detail::Accumulator acc(ctx);
  for (const auto& a : u.terms())
    for (const auto& b : v.terms())
      for (const auto& [m, k] : ctx->blade_gp(a.blade, b.blade)) acc.add_product(m, a.coeff, b.coeff, k);
  return std::move(acc).finish();
}

inline Multivecfor operator*(const Multivecfor& u, const Multivecfor& v) { return gp(u, v); }

// ---------------------------------------------------------------------------
// Distinguished elements and Hodge duality

inline Multivecfor one(const ContextPtr& ctx) { return Multivecfor::scalar(ctx, 1); }

// e_* = e1∧…∧en
inline Multivecfor e_star(const ContextPtr& ctx) { return Multivecfor::blade(ctx, ctx->e_mask()); }
// θ* = t1∧…∧tn
inline Multivecfor theta_star(const ContextPtr& ctx) { return Multivecfor::blade(ctx, ctx->t_mask()); }

// Orientation element e_*∧θ*; equal to σ1∧…∧σ2n (checked in hyperbolic_space).
inline Multivecfor orientation(const ContextPtr& ctx) { return wedge(e_star(ctx), theta_star(ctx)); }

// ★u = ũ ⌟ σ
inline Multivecfor hodge(const Multivecfor& u) {
  if (!u.context()) return u;
  return lcontract(reversion(u), orientation(u.context()));
}

// ★⁻¹u = σ̃ ⌞ ũ
inline Multivecfor hodge_inv(const Multivecfor& u) {
  if (!u.context()) return u;
  return rcontract(reversion(orientation(u.context())), reversion(u));
}

enum class PoincareDirection { sharp_down, sharp_up };

// D_# : ∧V* → ∧V, u* ↦ ũ*⌟e_*;  D^# : ∧V → ∧V*, u_* ↦ θ*⌞ū_*.
inline Multivecfor poincare_iso(const Multivecfor& u, PoincareDirection dir) {
  const auto& ctx = u.context();
  if (!ctx) return u;
  if (dir == PoincareDirection::sharp_down) {
    if (!u.supported_in(ctx->t_mask()))
      throw Error(Errc::invalid_argument, "D_# requires an element of the form algebra (t-blades only)");
    return lcontract(reversion(u), e_star(ctx));
  }
  if (!u.supported_in(ctx->e_mask()))
    throw Error(Errc::invalid_argument, "D^# requires an element of the vector algebra (e-blades only)");
  return rcontract(theta_star(ctx), conjugation(u));
}
inline Multivecfor sharp_down(const Multivecfor& u) { return poincare_iso(u, PoincareDirection::sharp_down); }
inline Multivecfor sharp_up(const Multivecfor& u) { return poincare_iso(u, PoincareDirection::sharp_up); }

}  // namespace hyclif
