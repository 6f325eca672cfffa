#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyclif/matrix.hpp"
#include "hyclif/multivecfor.hpp"
#include "hyclif/text.hpp"
#include "hyclif/vecfor.hpp"

namespace hyclif {

// Coordinates of a multivecfor over all 4^n blades (index = blade mask).
inline Vector dense_coords(const Multivecfor& u, std::size_t blades) {
  Vector v(blades);
  for (const auto& t : u.terms()) v[t.blade] = t.coeff;
  return v;
}

inline Multivecfor from_dense(const ContextPtr& ctx, const Vector& v) {
  std::vector<Term> terms;
  for (Blade b = 0; b < v.size(); ++b)
    if (!v[b].is_zero()) terms.push_back({b, v[b]});
  return Multivecfor::from_terms(ctx, std::move(terms));
}

// Incrementally built, fully reduced row basis.
class EchelonSpan {
public:
  explicit EchelonSpan(std::size_t width) : width_(width) {}

  std::size_t dim() const { return rows_.size(); }

  Vector reduce(Vector v) const {
    for (const auto& [p, row] : rows_) {
      if (v[p].is_zero()) continue;
      const Scalar f = v[p];
      for (std::size_t j = 0; j < width_; ++j)
        if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  // Returns true if v enlarged the span.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < width_ && r[p].is_zero()) ++p;
    if (p == width_) return false;
    const Scalar inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    for (auto& [q, row] : rows_) {
      if (row[p].is_zero()) continue;
      const Scalar f = row[p];
      for (std::size_t j = 0; j < width_; ++j)
        if (!r[j].is_zero()) row[j] -= f * r[j];
    }
    rows_.emplace_back(p, std::move(r));
    return true;
  }

private:
  std::size_t width_;
  std::vector<std::pair<std::size_t, Vector>> rows_;
};

inline constexpr int max_ideal_dimension = 4;

struct IdealBasis {
  Multivecfor generator;
  std::vector<Multivecfor> span;

  std::size_t dim() const { return span.size(); }

  bool contains(const Multivecfor& u) const {
    const auto& ctx = generator.context();
    EchelonSpan e(ctx->blade_count());
    for (const auto& s : span) e.insert(dense_coords(s, ctx->blade_count()));
    return e.contains(dense_coords(u, ctx->blade_count()));
  }

  // Exact coordinates of u against span, if u lies in the ideal.
  std::optional<Vector> coordinates(const Multivecfor& u) const {
    const std::size_t w = generator.context()->blade_count();
    std::vector<Vector> cols;
    for (const auto& s : span) cols.push_back(dense_coords(s, w));
    return Matrix::from_columns(cols).solve(dense_coords(u, w));
  }
};

// Left ideal Cl·g: multiply every blade by g in canonical order and keep the
// products that enlarge the span.
inline IdealBasis ideal_span(const Multivecfor& g) {
  if (g.is_zero()) throw Error(Errc::domain, "the zero element generates the zero ideal");
  const auto& ctx = g.context();
  if (ctx->dim() > max_ideal_dimension) throw Error(Errc::too_large, "ideal_span supports n <= 4");
  IdealBasis out{g, {}};
  EchelonSpan e(ctx->blade_count());
  for (Blade b : ctx->blades_canonical()) {
    Multivecfor p = gp(Multivecfor::blade(ctx, b), g);
    if (e.insert(dense_coords(p, ctx->blade_count()))) out.span.push_back(std::move(p));
  }
  return out;
}

// No proper nonzero subideal is exhibited by the basis elements of Cl·g or by
// `samples` random combinations of them (coefficients in [-3, 3], seeded).
inline bool minimality_check(const Multivecfor& g, int samples = 8, std::uint64_t seed = 1) {
  if (g.context() && g.context()->dim() > 3) throw Error(Errc::too_large, "minimality_check supports n <= 3");
  const IdealBasis base = ideal_span(g);
  for (const auto& psi : base.span)
    if (ideal_span(psi).dim() != base.dim()) return false;
  std::uint64_t state = seed;
  auto next = [&state] {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  for (int s = 0; s < samples; ++s) {
    Multivecfor psi(g.context());
    for (const auto& b : base.span) psi += Scalar(static_cast<long>(next() % 7) - 3) * b;
    if (psi.is_zero()) continue;
    if (ideal_span(psi).dim() != base.dim()) return false;
  }
  return true;
}

// m: ∧V → Cl·θ*, u ↦ u θ*
inline Multivecfor ideal_embed(const Multivecfor& u) {
  if (!u.supported_in(u.context()->e_mask())) throw Error(Errc::invalid_argument, "ideal_embed expects an element of the exterior algebra of V");
  return gp(u, theta_star(u.context()));
}

// m⁻¹; the ideal's elements u θ* are determined blade by blade since
// e_S θ* = e_S ∧ θ* + (terms of lower e-grade), solved exactly.
inline Multivecfor ideal_extract(const Multivecfor& w) {
  const auto& ctx = w.context();
  const std::size_t width = ctx->blade_count();
  std::vector<Blade> fock;
  for (Blade b : ctx->blades_canonical())
    if ((b & ~ctx->e_mask()) == 0) fock.push_back(b);
  std::vector<Vector> cols;
  for (Blade b : fock) cols.push_back(dense_coords(ideal_embed(Multivecfor::blade(ctx, b)), width));
  auto c = Matrix::from_columns(cols).solve(dense_coords(w, width));
  if (!c) throw Error(Errc::domain, "element does not lie in the ideal generated by theta*");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < fock.size(); ++i)
    if (!(*c)[i].is_zero()) terms.push_back({fock[i], (*c)[i]});
  return Multivecfor::from_terms(ctx, std::move(terms));
}

// m⁻¹(x · m(u))
inline Multivecfor ideal_module_action(const Vecfor& x, const Multivecfor& u) {
  return ideal_extract(gp(x.to_multivecfor(u.context()), ideal_embed(u)));
}

// ---------------------------------------------------------------------------
// Spinor components

// Increasing k-tuples of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// ψ = s + v_μ θ^μ + ½ f_μν θ^μθ^ν + … with antisymmetric components stored
// on increasing tuples: grade[k][i] is the component for increasing_tuples(n,k)[i].
struct SpinorRep {
  int n = 0;
  std::vector<Vector> grade;

  static SpinorRep zero(int n) {
    SpinorRep s{n, {}};
    for (int k = 0; k <= n; ++k) s.grade.emplace_back(increasing_tuples(n, k).size());
    return s;
  }

  friend bool operator==(const SpinorRep&, const SpinorRep&) = default;
};

// The 1/k! in front of the full antisymmetric sum cancels against the k!
// orderings of each increasing tuple.
inline Multivecfor spinor_compose(const ContextPtr& ctx, const SpinorRep& s) {
  if (s.n != ctx->dim() || static_cast<int>(s.grade.size()) != s.n + 1)
    throw Error(Errc::context_mismatch, "spinor components do not match the context dimension");
  std::vector<Term> terms;
  for (int k = 0; k <= s.n; ++k) {
    const auto tuples = increasing_tuples(s.n, k);
    if (s.grade[static_cast<std::size_t>(k)].size() != tuples.size())
      throw Error(Errc::invalid_argument, "wrong number of grade-" + std::to_string(k) + " spinor components");
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      const Scalar& c = s.grade[static_cast<std::size_t>(k)][i];
      if (c.is_zero()) continue;
      Blade b = 0;
      for (int mu : tuples[i]) b |= ctx->t(mu);
      terms.push_back({b, c});
    }
  }
  return Multivecfor::from_terms(ctx, std::move(terms));
}

inline SpinorRep spinor_decompose(const Multivecfor& u) {
  const auto& ctx = u.context();
  if (!ctx) throw Error(Errc::invalid_argument, "spinor_decompose needs a context");
  if (!u.supported_in(ctx->t_mask()))
    throw Error(Errc::invalid_argument, "spinor_decompose expects an element supported on theta blades only");
  SpinorRep s = SpinorRep::zero(ctx->dim());
  for (int k = 0; k <= s.n; ++k) {
    const auto tuples = increasing_tuples(s.n, k);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      Blade b = 0;
      for (int mu : tuples[i]) b |= ctx->t(mu);
      s.grade[static_cast<std::size_t>(k)][i] = u.coeff(b);
    }
  }
  return s;
}

// Keys: s, v, f for grades 0..2, p for the top grade once n >= 3, g<k> between.
inline std::string spinor_key(int n, int k) {
  if (k == 0) return "s";
  if (k == 1) return "v";
  if (k == 2) return "f";
  if (k == n) return "p";
  return "g" + std::to_string(k);
}

inline Json to_json(const SpinorRep& s) {
  Json j = Json::object();
  for (int k = 0; k <= s.n; ++k) {
    const auto& g = s.grade[static_cast<std::size_t>(k)];
    if (k == 0 || (k == s.n && k >= 3)) {
      j[spinor_key(s.n, k)] = to_json(g[0]);
      continue;
    }
    Json arr = Json::array();
    for (const auto& c : g) arr.push_back(to_json(c));
    j[spinor_key(s.n, k)] = arr;
  }
  return j;
}

inline SpinorRep spinor_from_json(int n, const Json& j) {
  SpinorRep s = SpinorRep::zero(n);
  for (int k = 0; k <= n; ++k) {
    const std::string key = spinor_key(n, k);
    if (!j.contains(key)) continue;
    const Json& v = j.at(key);
    auto& g = s.grade[static_cast<std::size_t>(k)];
    if (!v.is_array()) {
      if (g.size() != 1) throw Error(Errc::invalid_argument, "spinor component '" + key + "' must be a list");
      g[0] = scalar_from_json(v);
      continue;
    }
    if (v.size() != g.size())
      throw Error(Errc::invalid_argument, "spinor component '" + key + "' needs " + std::to_string(g.size()) + " entries");
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = scalar_from_json(v[i]);
  }
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (int k = 0; k <= n; ++k) known = known || key == spinor_key(n, k);
    if (!known) throw Error(Errc::invalid_argument, "unknown spinor component '" + key + "'");
  }
  return s;
}

}  // namespace hyclif
