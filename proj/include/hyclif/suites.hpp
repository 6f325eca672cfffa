#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hyclif/endomorphisms.hpp"
#include "hyclif/hyperbolic_space.hpp"
#include "hyclif/random.hpp"
#include "hyclif/representation.hpp"
#include "hyclif/spinor.hpp"
#include "hyclif/text.hpp"

namespace hyclif {

struct IdentityResult {
  std::string suite;
  std::string name;
  bool passed = true;
  int trials = 0;
  std::string counterexample;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
  }

  std::string text() const {
    std::ostringstream os;
    os << "suite " << suite << "  n=" << n << "  trials=" << trials << "  seed=" << seed << '\n';
    for (const auto& r : results) {
      os << (r.passed ? "PASS  " : "FAIL  ") << r.suite << '/' << r.name << "  (" << r.trials
         << (r.trials == 1 ? " trial)" : " trials)") << '\n';
      if (!r.passed) os << "      counterexample: " << r.counterexample << '\n';
    }
    os << results.size() - failures() << '/' << results.size() << " identities passed\n";
    return os.str();
  }
};

namespace suite_detail {

using Outcome = std::optional<std::string>;  // counterexample text on failure
using Check = std::function<Outcome(Rng&)>;

struct Case {
  std::string name;
  bool randomized;  // false: deterministic, run once
  Check check;
};

class Builder {
public:
  explicit Builder(std::string suite) : suite_(std::move(suite)) {}
  void add(std::string name, Check c) { cases_.push_back({std::move(name), true, std::move(c)}); }
  void once(std::string name, Check c) { cases_.push_back({std::move(name), false, std::move(c)}); }
  const std::string& suite() const { return suite_; }
  std::vector<Case>& cases() { return cases_; }

private:
  std::string suite_;
  std::vector<Case> cases_;
};

inline std::string show(std::initializer_list<std::pair<const char*, Multivecfor>> vals) {
  std::string s;
  for (const auto& [name, v] : vals) s += (s.empty() ? "" : "; ") + std::string(name) + " = " + to_string(v);
  return s;
}

inline Outcome expect(bool ok, const std::function<std::string()>& describe) {
  if (ok) return std::nullopt;
  return describe();
}

inline Outcome same(const Multivecfor& lhs, const Multivecfor& rhs,
                    std::initializer_list<std::pair<const char*, Multivecfor>> inputs) {
  if (lhs == rhs) return std::nullopt;
  return show(inputs) + "; lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs);
}

inline std::string show_vector(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

inline std::string show_matrix(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? "; " : "") + show_vector(m.row(i));
  return s + "]";
}

inline Multivecfor mv(const Vecfor& x, const ContextPtr& ctx) { return x.to_multivecfor(ctx); }
inline Multivecfor vec_part(const Vecfor& x, const ContextPtr& ctx) { return mv({x.vec(), Vector(x.vec().size())}, ctx); }
inline Multivecfor form_part(const Vecfor& x, const ContextPtr& ctx) { return mv({Vector(x.vec().size()), x.form()}, ctx); }

inline std::string vf(const Vecfor& x, const ContextPtr& ctx) { return to_string(mv(x, ctx)); }

inline Multivecfor no_scalar(Multivecfor u) { return u - Multivecfor::scalar(u.context(), u.scalar_part()); }

// ---------------------------------------------------------------------------

inline void contractions(Builder& b, const ContextPtr& ctx) {
  const int n = ctx->dim();
  auto R = [ctx](Rng& r) { return random_multivecfor(r, ctx); };

  b.add("adjoint_left: <u_|v,w> = <v,~u^w>", [=](Rng& r) {
    auto u = R(r), v = R(r), w = R(r);
    return expect(bilinear(lcontract(u, v), w) == bilinear(v, wedge(reversion(u), w)), [&] { return show({{"u", u}, {"v", v}, {"w", w}}); });
  });
  b.add("adjoint_right: <v|_u,w> = <v,w^~u>", [=](Rng& r) {
    auto u = R(r), v = R(r), w = R(r);
    return expect(bilinear(rcontract(v, u), w) == bilinear(v, wedge(w, reversion(u))), [&] { return show({{"u", u}, {"v", v}, {"w", w}}); });
  });
  b.add("vector: x_|y = y|_x... x_|y = x|_y = <x,y>", [=](Rng& r) {
    auto x = mv(random_vecfor(r, n), ctx), y = mv(random_vecfor(r, n), ctx);
    const Multivecfor ip = Multivecfor::scalar(ctx, bilinear(x, y));
    return expect(lcontract(x, y) == ip && rcontract(x, y) == ip, [&] { return show({{"x", x}, {"y", y}}); });
  });
  b.add("neutral: 1_|u = u|_1 = u", [=](Rng& r) {
    auto u = R(r);
    return expect(lcontract(one(ctx), u) == u && rcontract(u, one(ctx)) == u, [&] { return show({{"u", u}}); });
  });
  b.add("neutral: x_|1 = 1|_x = 0", [=](Rng& r) {
    auto x = mv(random_vecfor(r, n), ctx);
    return expect(lcontract(x, one(ctx)).is_zero() && rcontract(one(ctx), x).is_zero(), [&] { return show({{"x", x}}); });
  });
  b.add("grade involution: (u_|v)^ = u^ _| v^", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(grade_involution(lcontract(u, v)), lcontract(grade_involution(u), grade_involution(v)), {{"u", u}, {"v", v}});
  });
  b.add("grade involution: (u|_v)^ = u^ |_ v^", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(grade_involution(rcontract(u, v)), rcontract(grade_involution(u), grade_involution(v)), {{"u", u}, {"v", v}});
  });
  // Reversion swaps the sides of a contraction: x_|(y^z) is odd under y^z -> -(y^z)
  // for vectors, so ~u _| ~v cannot be the reverse of u_|v.
  b.add("reversion: (u_|v)~ = ~v |_ ~u", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(reversion(lcontract(u, v)), rcontract(reversion(v), reversion(u)), {{"u", u}, {"v", v}});
  });
  b.add("reversion: (u|_v)~ = ~v _| ~u", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(reversion(rcontract(u, v)), lcontract(reversion(v), reversion(u)), {{"u", u}, {"v", v}});
  });
  b.add("u_|(v_|w) = (u^v)_|w", [=](Rng& r) {
    auto u = R(r), v = R(r), w = R(r);
    return same(lcontract(u, lcontract(v, w)), lcontract(wedge(u, v), w), {{"u", u}, {"v", v}, {"w", w}});
  });
  b.add("(u|_v)|_w = u|_(v^w)", [=](Rng& r) {
    auto u = R(r), v = R(r), w = R(r);
    return same(rcontract(rcontract(u, v), w), rcontract(u, wedge(v, w)), {{"u", u}, {"v", v}, {"w", w}});
  });
  b.add("(u_|v)|_w = u_|(v|_w)", [=](Rng& r) {
    auto u = R(r), v = R(r), w = R(r);
    return same(rcontract(lcontract(u, v), w), lcontract(u, rcontract(v, w)), {{"u", u}, {"v", v}, {"w", w}});
  });
  b.add("x_|(u^v) = (x_|u)^v + u^ ^ (x_|v)", [=](Rng& r) {
    auto x = mv(random_vecfor(r, n), ctx);
    auto u = R(r), v = R(r);
    return same(lcontract(x, wedge(u, v)), wedge(lcontract(x, u), v) + wedge(grade_involution(u), lcontract(x, v)),
                {{"x", x}, {"u", u}, {"v", v}});
  });
  b.add("(u^v)|_x = u^(v|_x) + (u|_x)^v^", [=](Rng& r) {
    auto x = mv(random_vecfor(r, n), ctx);
    auto u = R(r), v = R(r);
    return same(rcontract(wedge(u, v), x), wedge(u, rcontract(v, x)) + wedge(rcontract(u, x), grade_involution(v)),
                {{"x", x}, {"u", u}, {"v", v}});
  });
  b.add("x^(u_|v) = u^ _|(x^v) - (u^ |_x)_|v", [=](Rng& r) {
    auto x = mv(random_vecfor(r, n), ctx);
    auto u = R(r), v = R(r);
    const auto uh = grade_involution(u);
    return same(wedge(x, lcontract(u, v)), lcontract(uh, wedge(x, v)) - lcontract(rcontract(uh, x), v),
                {{"x", x}, {"u", u}, {"v", v}});
  });
  b.add("(u|_v)^x = (u^x)|_v^ - u|_(x_|v^)", [=](Rng& r) {
    auto x = mv(random_vecfor(r, n), ctx);
    auto u = R(r), v = R(r);
    const auto vh = grade_involution(v);
    return same(wedge(rcontract(u, v), x), rcontract(wedge(u, x), vh) - rcontract(u, lcontract(x, vh)),
                {{"x", x}, {"u", u}, {"v", v}});
  });
  b.add("even part: u+ _| v = v |_ u+", [=](Rng& r) {
    auto u = even_part(R(r)), v = R(r);
    return same(lcontract(u, v), rcontract(v, u), {{"u+", u}, {"v", v}});
  });
  b.add("odd part: u- _| v = v^ |_ u-^", [=](Rng& r) {
    auto u = odd_part(R(r)), v = R(r);
    return same(lcontract(u, v), rcontract(grade_involution(v), grade_involution(u)), {{"u-", u}, {"v", v}});
  });
  b.add("u^(v_|sigma) = (u_|v)_|sigma", [=](Rng& r) {
    auto u = R(r), v = R(r);
    const auto s = orientation(ctx);
    return same(wedge(u, lcontract(v, s)), lcontract(lcontract(u, v), s), {{"u", u}, {"v", v}});
  });
  b.add("(sigma|_u)^v = sigma|_(u|_v)", [=](Rng& r) {
    auto u = R(r), v = R(r);
    const auto s = orientation(ctx);
    return same(wedge(rcontract(s, u), v), rcontract(s, rcontract(u, v)), {{"u", u}, {"v", v}});
  });
  b.add("isotropy: u_* _| v_* = 0 and u* _| v* = 0 (no scalar part in u)", [=](Rng& r) {
    auto ue = no_scalar(random_supported(r, ctx, ctx->e_mask())), ve = random_supported(r, ctx, ctx->e_mask());
    auto ut = no_scalar(random_supported(r, ctx, ctx->t_mask())), vt = random_supported(r, ctx, ctx->t_mask());
    return expect(lcontract(ue, ve).is_zero() && lcontract(ut, vt).is_zero(),
                  [&] { return show({{"u_*", ue}, {"v_*", ve}, {"u*", ut}, {"v*", vt}}); });
  });
  b.add("mixed element: x_|(u_*^u*) = (x*_|u_*)^u* + u_*^ ^ (x_*_|u*)", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    auto ue = random_supported(r, ctx, ctx->e_mask()), ut = random_supported(r, ctx, ctx->t_mask());
    const auto lhs = lcontract(mv(x, ctx), wedge(ue, ut));
    const auto rhs = wedge(lcontract(form_part(x, ctx), ue), ut) + wedge(grade_involution(ue), lcontract(vec_part(x, ctx), ut));
    return same(lhs, rhs, {{"x", mv(x, ctx)}, {"u_*", ue}, {"u*", ut}});
  });
  b.add("mixed-grade pairing: <u_*^u*, v_*^v*> = (-1)^(rs) u*(v_*) v*(u_*)", [=](Rng& r) {
    const int rr = static_cast<int>(r.below(static_cast<std::uint64_t>(n) + 1));
    const int ss = static_cast<int>(r.below(static_cast<std::uint64_t>(n) + 1));
    auto part = [&](Blade mask, int g) {
      std::vector<Term> t;
      for (Blade bl : ctx->blades_canonical())
        if ((bl & ~mask) == 0 && grade_of(bl) == g && r.chance(1, 2)) t.push_back({bl, r.nonzero_scalar()});
      return Multivecfor::from_terms(ctx, std::move(t));
    };
    auto ue = part(ctx->e_mask(), rr), ut = part(ctx->t_mask(), ss);
    auto ve = part(ctx->e_mask(), ss), vt = part(ctx->t_mask(), rr);
    Scalar rhs = bilinear(ut, ve) * bilinear(vt, ue);
    if ((rr * ss) % 2) rhs = -rhs;
    return expect(bilinear(wedge(ue, ut), wedge(ve, vt)) == rhs,
                  [&] { return show({{"u_*", ue}, {"u*", ut}, {"v_*", ve}, {"v*", vt}}); });
  });
  // Differential structure d = x_|
  b.add("differential: d(d u) = 0", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    auto u = R(r);
    return expect(differential_apply(x, differential_apply(x, u)).is_zero(), [&] { return show({{"x", mv(x, ctx)}, {"u", u}}); });
  });
  b.add("differential: d u^ + (d u)^ = 0", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    auto u = R(r);
    return expect((differential_apply(x, grade_involution(u)) + grade_involution(differential_apply(x, u))).is_zero(),
                  [&] { return show({{"x", mv(x, ctx)}, {"u", u}}); });
  });
  b.add("differential: d(u^v) = (d u)^v + u^ ^ d v", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    auto u = R(r), v = R(r);
    return same(differential_apply(x, wedge(u, v)),
                wedge(differential_apply(x, u), v) + wedge(grade_involution(u), differential_apply(x, v)),
                {{"x", mv(x, ctx)}, {"u", u}, {"v", v}});
  });
  b.add("differential on exterior algebras of V and V*: d_* = x*_|, d^* = x_*_|", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    auto ue = random_supported(r, ctx, ctx->e_mask()), ve = random_supported(r, ctx, ctx->e_mask());
    auto ut = random_supported(r, ctx, ctx->t_mask()), vt = random_supported(r, ctx, ctx->t_mask());
    const auto xf = form_part(x, ctx), xv = vec_part(x, ctx);
    bool ok = lcontract(xf, lcontract(xf, ue)).is_zero() && lcontract(xv, lcontract(xv, ut)).is_zero();
    ok = ok && lcontract(xf, wedge(ue, ve)) == wedge(lcontract(xf, ue), ve) + wedge(grade_involution(ue), lcontract(xf, ve));
    ok = ok && lcontract(xv, wedge(ut, vt)) == wedge(lcontract(xv, ut), vt) + wedge(grade_involution(ut), lcontract(xv, vt));
    ok = ok && lcontract(xf, ue).supported_in(ctx->e_mask()) && lcontract(xv, ut).supported_in(ctx->t_mask());
    return expect(ok, [&] { return show({{"x", mv(x, ctx)}, {"u_*", ue}, {"v_*", ve}, {"u*", ut}, {"v*", vt}}); });
  });
  b.add("wedge: graded anticommutativity u^v = (-1)^(rs) v^u", [=](Rng& r) {
    const int rr = static_cast<int>(r.below(static_cast<std::uint64_t>(2 * n) + 1));
    const int ss = static_cast<int>(r.below(static_cast<std::uint64_t>(2 * n) + 1));
    auto u = random_homogeneous(r, ctx, rr), v = random_homogeneous(r, ctx, ss);
    auto rhs = wedge(v, u);
    if ((rr * ss) % 2) rhs = -rhs;
    return same(wedge(u, v), rhs, {{"u", u}, {"v", v}});
  });
  b.add("wedge: associativity", [=](Rng& r) {
    auto u = R(r), v = R(r), w = R(r);
    return same(wedge(wedge(u, v), w), wedge(u, wedge(v, w)), {{"u", u}, {"v", v}, {"w", w}});
  });
  b.add("bilinear: symmetric, grade-orthogonal", [=](Rng& r) {
    auto u = R(r), v = R(r);
    Scalar by_grade;
    for (int g = 0; g <= 2 * n; ++g) by_grade += bilinear(grade_part(u, g), grade_part(v, g));
    return expect(bilinear(u, v) == bilinear(v, u) && bilinear(u, v) == by_grade, [&] { return show({{"u", u}, {"v", v}}); });
  });
}

inline void products(Builder& b, const ContextPtr& ctx) {
  const int n = ctx->dim();
  auto R = [ctx](Rng& r) { return random_multivecfor(r, ctx); };
  auto X = [ctx, n](Rng& r) { return mv(random_vecfor(r, n), ctx); };
  const Multivecfor sigma = orientation(ctx);
  const Scalar half = Scalar(Rational(1, 2));

  b.add("associativity: (uv)w = u(vw)", [=](Rng& r) {
    auto u = R(r), v = R(r), w = R(r);
    return same(gp(gp(u, v), w), gp(u, gp(v, w)), {{"u", u}, {"v", v}, {"w", w}});
  });
  b.add("vector product: xu = x_|u + x^u", [=](Rng& r) {
    auto x = X(r), u = R(r);
    return same(gp(x, u), lcontract(x, u) + wedge(x, u), {{"x", x}, {"u", u}});
  });
  b.add("Clifford relation: xy + yx = 2<x,y>", [=](Rng& r) {
    auto x = X(r), y = X(r);
    return same(gp(x, y) + gp(y, x), Multivecfor::scalar(ctx, Scalar(2) * bilinear(x, y)), {{"x", x}, {"y", y}});
  });
  b.add("involutions: (uv)^ = u^v^, (uv)~ = ~v~u, (uv)- = v-u-", [=](Rng& r) {
    auto u = R(r), v = R(r);
    const auto uv = gp(u, v);
    const bool ok = grade_involution(uv) == gp(grade_involution(u), grade_involution(v)) &&
                    reversion(uv) == gp(reversion(v), reversion(u)) && conjugation(uv) == gp(conjugation(v), conjugation(u));
    return expect(ok, [&] { return show({{"u", u}, {"v", v}}); });
  });
  b.add("u_|sigma = u sigma", [=](Rng& r) {
    auto u = R(r);
    return same(lcontract(u, sigma), gp(u, sigma), {{"u", u}});
  });
  b.add("sigma|_u = sigma u", [=](Rng& r) {
    auto u = R(r);
    return same(rcontract(sigma, u), gp(sigma, u), {{"u", u}});
  });
  b.add("<u,vw> = <~v u,w> = <u ~w,v>", [=](Rng& r) {
    auto u = R(r), v = R(r), w = R(r);
    const Scalar a = bilinear(u, gp(v, w));
    return expect(a == bilinear(gp(reversion(v), u), w) && a == bilinear(gp(u, reversion(w)), v),
                  [&] { return show({{"u", u}, {"v", v}, {"w", w}}); });
  });
  b.add("x^u = (xu + u^x)/2", [=](Rng& r) {
    auto x = X(r), u = R(r);
    return same(wedge(x, u), half * (gp(x, u) + gp(grade_involution(u), x)), {{"x", x}, {"u", u}});
  });
  b.add("u^x = (ux + xu^)/2", [=](Rng& r) {
    auto x = X(r), u = R(r);
    return same(wedge(u, x), half * (gp(u, x) + gp(x, grade_involution(u))), {{"x", x}, {"u", u}});
  });
  b.add("x_|u = (xu - u^x)/2", [=](Rng& r) {
    auto x = X(r), u = R(r);
    return same(lcontract(x, u), half * (gp(x, u) - gp(grade_involution(u), x)), {{"x", x}, {"u", u}});
  });
  b.add("u|_x = (ux - xu^)/2", [=](Rng& r) {
    auto x = X(r), u = R(r);
    return same(rcontract(u, x), half * (gp(u, x) - gp(x, grade_involution(u))), {{"x", x}, {"u", u}});
  });
  b.add("x_|(uv) = (x_|u)v + u^(x_|v)", [=](Rng& r) {
    auto x = X(r), u = R(r), v = R(r);
    return same(lcontract(x, gp(u, v)), gp(lcontract(x, u), v) + gp(grade_involution(u), lcontract(x, v)),
                {{"x", x}, {"u", u}, {"v", v}});
  });
  b.add("(uv)|_x = u(v|_x) + (u|_x)v^", [=](Rng& r) {
    auto x = X(r), u = R(r), v = R(r);
    return same(rcontract(gp(u, v), x), gp(u, rcontract(v, x)) + gp(rcontract(u, x), grade_involution(v)),
                {{"x", x}, {"u", u}, {"v", v}});
  });
  b.add("x^(uv) = (x_|u)v + u^(x^v) = (x^u)v - u^(x_|v)", [=](Rng& r) {
    auto x = X(r), u = R(r), v = R(r);
    const auto lhs = wedge(x, gp(u, v));
    const auto uh = grade_involution(u);
    const bool ok = lhs == gp(lcontract(x, u), v) + gp(uh, wedge(x, v)) && lhs == gp(wedge(x, u), v) - gp(uh, lcontract(x, v));
    return expect(ok, [&] { return show({{"x", x}, {"u", u}, {"v", v}}); });
  });
  b.add("(uv)^x = u(v^x) - (u|_x)v^ = u(v|_x) + (u^x)v^", [=](Rng& r) {
    auto x = X(r), u = R(r), v = R(r);
    const auto lhs = wedge(gp(u, v), x);
    const auto vh = grade_involution(v);
    const bool ok = lhs == gp(u, wedge(v, x)) - gp(rcontract(u, x), vh) && lhs == gp(u, rcontract(v, x)) + gp(wedge(u, x), vh);
    return expect(ok, [&] { return show({{"x", x}, {"u", u}, {"v", v}}); });
  });
  b.add("mixed element: x(u_*^u*) = (x* u_*)^u* + u_*^ ^ (x_* u*)", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    auto ue = random_supported(r, ctx, ctx->e_mask()), ut = random_supported(r, ctx, ctx->t_mask());
    const auto lhs = gp(mv(x, ctx), wedge(ue, ut));
    const auto rhs = wedge(gp(form_part(x, ctx), ue), ut) + wedge(grade_involution(ue), gp(vec_part(x, ctx), ut));
    return same(lhs, rhs, {{"x", mv(x, ctx)}, {"u_*", ue}, {"u*", ut}});
  });
  b.once("sigma^2 = 1", [=](Rng&) { return same(gp(sigma, sigma), one(ctx), {{"sigma", sigma}}); });
  b.once("Witt relations: e_k e_l + e_l e_k = 0, t^k t^l + t^l t^k = 0, t^k e_l + e_l t^k = 2 delta", [=](Rng&) -> Outcome {
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        auto ek = Multivecfor::e(ctx, k), el = Multivecfor::e(ctx, l), tk = Multivecfor::t(ctx, k), tl = Multivecfor::t(ctx, l);
        const bool ok = (gp(ek, el) + gp(el, ek)).is_zero() && (gp(tk, tl) + gp(tl, tk)).is_zero() &&
                        gp(tk, el) + gp(el, tk) == Multivecfor::scalar(ctx, k == l ? 2 : 0);
        if (!ok) return "k = " + std::to_string(k) + ", l = " + std::to_string(l);
      }
    return std::nullopt;
  });

  // Representation on the exterior algebra of V.
  b.add("Clifford map: phi_x^2 = <x,x> Id", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    const FockMatrix phi = clifford_map_matrix(ctx, x);
    return expect(phi * phi == bilinear(x, x) * FockMatrix::identity(n), [&] { return "x = " + vf(x, ctx); });
  });
  b.add("rep homomorphism: rep(uv) = rep(u) rep(v)", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return expect(rep(gp(u, v)) == rep(u) * rep(v), [&] { return show({{"u", u}, {"v", v}}); });
  });
  b.once("rep(1) = Id", [=](Rng&) { return expect(rep(one(ctx)) == FockMatrix::identity(n), [] { return std::string("rep(1)"); }); });
  b.once("end iso: rank of blade images = 4^n; even blocks diagonal, odd antidiagonal", [=](Rng&) {
    const EndIsoReport rep = verify_end_iso(n);
    return expect(rep.is_isomorphism && rep.rank == (std::size_t{1} << (2 * n)) && rep.even_block_diagonal && rep.odd_block_antidiagonal,
                  [&] { return "rank = " + std::to_string(rep.rank); });
  });
  if (n == 1)
    b.once("grandmother: rank of Cl(H_V2) images = 16", [](Rng&) {
      return expect(grandmother_dimension_check(1), [] { return std::string("n = 1"); });
    });
  b.add("tensor split: rho(x)rho(y) + rho(y)rho(x) = 2<x,y> in Cl(V,b) (x) Cl(V,-b)", [=](Rng& r) {
    const SymmetricForm form = random_symmetric_form(r, static_cast<std::size_t>(n));
    return expect(tensor_split_check(form), [&] { return "b = " + show_matrix(form.matrix()); });
  });
}

inline void hodge_suite(Builder& b, const ContextPtr& ctx) {
  const int n = ctx->dim();
  auto R = [ctx](Rng& r) { return random_multivecfor(r, ctx); };
  const Multivecfor sigma = orientation(ctx);
  const Multivecfor sign_n = Multivecfor::scalar(ctx, n % 2 ? -1 : 1);

  b.once("*sigma = (-1)^n, *^-1 sigma = 1", [=](Rng&) {
    return expect(hodge(sigma) == sign_n && hodge_inv(sigma) == one(ctx), [&] { return show({{"*sigma", hodge(sigma)}}); });
  });
  b.add("inverse: *^-1 * u = u = * *^-1 u", [=](Rng& r) {
    auto u = R(r);
    return expect(hodge_inv(hodge(u)) == u && hodge(hodge_inv(u)) == u, [&] { return show({{"u", u}}); });
  });
  b.add("<*u,*v> = (-1)^n <u,v>", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return expect(bilinear(hodge(u), hodge(v)) == sign_n.scalar_part() * bilinear(u, v), [&] { return show({{"u", u}, {"v", v}}); });
  });
  b.add("*(u^v) = ~v _| *u", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(hodge(wedge(u, v)), lcontract(reversion(v), hodge(u)), {{"u", u}, {"v", v}});
  });
  b.add("*^-1(u^v) = (*^-1 v)|_~u", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(hodge_inv(wedge(u, v)), rcontract(hodge_inv(v), reversion(u)), {{"u", u}, {"v", v}});
  });
  b.add("*(u|_v) = ~v ^ *u", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(hodge(rcontract(u, v)), wedge(reversion(v), hodge(u)), {{"u", u}, {"v", v}});
  });
  b.add("*^-1(u_|v) = (*^-1 v)^~u", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(hodge_inv(lcontract(u, v)), wedge(hodge_inv(v), reversion(u)), {{"u", u}, {"v", v}});
  });
  b.add("grade: grade(*u) = 2n - grade(u)", [=](Rng& r) {
    const int g = static_cast<int>(r.below(static_cast<std::uint64_t>(2 * n) + 1));
    auto u = random_homogeneous(r, ctx, g);
    return expect(u.is_zero() || hodge(u).homogeneous_grade() == 2 * n - g, [&] { return show({{"u", u}}); });
  });
  b.add("*u = ~u sigma, *^-1 u = ~sigma ~u", [=](Rng& r) {
    auto u = R(r);
    return expect(hodge(u) == gp(reversion(u), sigma) && hodge_inv(u) == gp(reversion(sigma), reversion(u)),
                  [&] { return show({{"u", u}}); });
  });
  b.add("*(uv) = ~v(*u)", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(hodge(gp(u, v)), gp(reversion(v), hodge(u)), {{"u", u}, {"v", v}});
  });
  // ~sigma (uv)~ = ~sigma ~v ~u
  b.add("*^-1(uv) = (*^-1 v)~u", [=](Rng& r) {
    auto u = R(r), v = R(r);
    return same(hodge_inv(gp(u, v)), gp(hodge_inv(v), reversion(u)), {{"u", u}, {"v", v}});
  });
  b.add("vecfor: *x = (x*_|e_*)^t* - e_*^(t*|_x_*)", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    const auto rhs = wedge(lcontract(form_part(x, ctx), e_star(ctx)), theta_star(ctx)) -
                     wedge(e_star(ctx), rcontract(theta_star(ctx), vec_part(x, ctx)));
    return same(hodge(mv(x, ctx)), rhs, {{"x", mv(x, ctx)}});
  });
  b.add("Poincare: *u* = D_# u* ^ t*, *u_* = e_* ^ D^# u_*", [=](Rng& r) {
    auto ue = random_supported(r, ctx, ctx->e_mask()), ut = random_supported(r, ctx, ctx->t_mask());
    return expect(hodge(ut) == wedge(sharp_down(ut), theta_star(ctx)) && hodge(ue) == wedge(e_star(ctx), sharp_up(ue)),
                  [&] { return show({{"u_*", ue}, {"u*", ut}}); });
  });
  b.add("Poincare: *(u_*^u*) = D_# u* ^ D^# u_*", [=](Rng& r) {
    auto ue = random_supported(r, ctx, ctx->e_mask()), ut = random_supported(r, ctx, ctx->t_mask());
    return same(hodge(wedge(ue, ut)), wedge(sharp_down(ut), sharp_up(ue)), {{"u_*", ue}, {"u*", ut}});
  });
  b.add("Poincare: D_# and D^# map grade r to grade n - r", [=](Rng& r) {
    const int g = static_cast<int>(r.below(static_cast<std::uint64_t>(n) + 1));
    auto ue = grade_part(random_supported(r, ctx, ctx->e_mask()), g);
    auto ut = grade_part(random_supported(r, ctx, ctx->t_mask()), g);
    const bool ok = (ut.is_zero() || (sharp_down(ut).homogeneous_grade() == n - g && sharp_down(ut).supported_in(ctx->e_mask()))) &&
                    (ue.is_zero() || (sharp_up(ue).homogeneous_grade() == n - g && sharp_up(ue).supported_in(ctx->t_mask())));
    return expect(ok, [&] { return show({{"u_*", ue}, {"u*", ut}}); });
  });
}

inline void witt(Builder& b, const ContextPtr& ctx) {
  const int n = ctx->dim();
  const auto sig = sigma_basis(n);

  b.once("sigma basis Gram = diag(1^n, (-1)^n)", [=](Rng&) {
    const Matrix g = gram_matrix(sig);
    return expect(g == sigma_gram(n), [&] { return show_matrix(g); });
  });
  b.once("sigma anticommutation: s_k s_l + s_l s_k = +-2 delta", [=](Rng&) -> Outcome {
    for (int k = 0; k < 2 * n; ++k)
      for (int l = 0; l < 2 * n; ++l) {
        const auto sk = mv(sig[static_cast<std::size_t>(k)], ctx), sl = mv(sig[static_cast<std::size_t>(l)], ctx);
        const int expected = k != l ? 0 : (k < n ? 2 : -2);
        if (!(gp(sk, sl) + gp(sl, sk) == Multivecfor::scalar(ctx, expected)))
          return "k = " + std::to_string(k + 1) + ", l = " + std::to_string(l + 1);
      }
    return std::nullopt;
  });
  b.once("orientation: s_1^...^s_2n = e_*^t*, <sigma,sigma> = (-1)^n", [=](Rng&) {
    const auto s = orientation_sigma(ctx);
    return expect(s == orientation(ctx) && bilinear(s, s) == Scalar(n % 2 ? -1 : 1), [&] { return show({{"sigma", s}}); });
  });
  b.add("orientation: GL(n) invariance of sigma", [=](Rng& r) {
    const Matrix a = random_invertible(r, static_cast<std::size_t>(n));
    return expect(orientation_from_dual_pair(ctx, a) == orientation(ctx), [&] { return "A = " + show_matrix(a); });
  });
  b.add("sigma components: sum x^k s_k = x", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    const Vector c = sigma_components(x);
    Vecfor back(n);
    for (std::size_t k = 0; k < c.size(); ++k) back = back + c[k] * sig[k];
    return expect(back == x && from_sigma_components(c) == x, [&] { return "x = " + vf(x, ctx); });
  });
  b.add("conjugate: <x-,x> = 0, <x-,x-> = -<x,x>, components swap", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    const Vecfor xb = conjugate(x);
    const Vector c = sigma_components(x), cb = sigma_components(xb);
    bool ok = bilinear(xb, x).is_zero() && bilinear(xb, xb) == -bilinear(x, x);
    for (int k = 0; k < n; ++k) {
      const auto i = static_cast<std::size_t>(k), j = static_cast<std::size_t>(n + k);
      ok = ok && cb[i] == c[j] && cb[j] == c[i];
    }
    return expect(ok, [&] { return "x = " + vf(x, ctx); });
  });
  b.add("bracket: [x,y] = <x-,y> = x*(y_*) - y*(x_*) = -[y,x]", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n), y = random_vecfor(r, n);
    const Scalar br = bracket(x, y);
    const bool ok = br == bilinear(conjugate(x), y) && br == dot(x.form(), y.vec()) - dot(y.form(), x.vec()) && br == -bracket(y, x);
    return expect(ok, [&] { return "x = " + vf(x, ctx) + "; y = " + vf(y, ctx); });
  });
  b.add("bilinear form: <x,y> = x*(y_*) + y*(x_*), also as multivecfors", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n), y = random_vecfor(r, n);
    const Scalar v = dot(x.form(), y.vec()) + dot(y.form(), x.vec());
    return expect(bilinear(x, y) == v && bilinear(mv(x, ctx), mv(y, ctx)) == v, [&] { return "x = " + vf(x, ctx) + "; y = " + vf(y, ctx); });
  });
  b.add("isotropy: <x_*,y_*> = <x*,y*> = 0", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n), y = random_vecfor(r, n);
    const bool ok = bilinear(vec_part(x, ctx), vec_part(y, ctx)).is_zero() && bilinear(form_part(x, ctx), form_part(y, ctx)).is_zero();
    return expect(ok, [&] { return "x = " + vf(x, ctx) + "; y = " + vf(y, ctx); });
  });
  b.once("reciprocal basis: s^k = s_k, s^(n+k) = -s_(n+k)", [=](Rng&) {
    const auto rec = reciprocal_basis(sig);
    bool ok = true;
    for (int k = 0; k < 2 * n; ++k) {
      const auto i = static_cast<std::size_t>(k);
      ok = ok && rec[i] == (k < n ? sig[i] : Scalar(-1) * sig[i]);
    }
    return expect(ok, [] { return std::string("reciprocal of the sigma basis"); });
  });
  b.once("second order space: Gram of Sigma basis = diag(1^2n, (-1)^2n)", [=](Rng&) {
    const Matrix g = second_order_gram(n);
    Vector d(static_cast<std::size_t>(4 * n), 1);
    for (std::size_t i = static_cast<std::size_t>(2 * n); i < d.size(); ++i) d[i] = -1;
    return expect(g == Matrix::diagonal(d), [&] { return show_matrix(g); });
  });
  b.add("rho_b isometry: b(x+,y+) - b(x-,y-) = <x,y>", [=](Rng& r) {
    const SymmetricForm form = random_symmetric_form(r, static_cast<std::size_t>(n));
    const Vecfor x = random_vecfor(r, n), y = random_vecfor(r, n);
    return expect(rho_b_pairing(form, rho_b_split(form, x), rho_b_split(form, y)) == bilinear(x, y),
                  [&] { return "b = " + show_matrix(form.matrix()) + "; x = " + vf(x, ctx) + "; y = " + vf(y, ctx); });
  });
  b.add("rho_b image of sigma basis: s_k -> ((e_k+e^k) + (e^k-e_k))/2, s_(n+k) -> ((e^k-e_k) + (e^k+e_k))/2", [=](Rng& r) {
    const SymmetricForm form = random_symmetric_form(r, static_cast<std::size_t>(n));
    bool ok = true;
    for (int k = 0; k < n; ++k) {
      const Vector ek = Matrix::identity(static_cast<std::size_t>(n)).column(static_cast<std::size_t>(k));
      const Vector eup = form.reciprocal().column(static_cast<std::size_t>(k));
      const RhoSplit a = rho_b_split(form, sig[static_cast<std::size_t>(k)]);
      const RhoSplit c = rho_b_split(form, sig[static_cast<std::size_t>(n + k)]);
      const Scalar h = Rational(1, 2);
      ok = ok && a.plus == h * (ek + eup) && a.minus == h * (eup - ek) && c.plus == h * (eup - ek) && c.minus == h * (eup + ek);
    }
    return expect(ok, [&] { return "b = " + show_matrix(form.matrix()); });
  });
  b.add("null subspaces: S'' = S, dim S + dim S' = n, dim S* = n - dim S'", [=](Rng& r) {
    const Subspace s = random_subspace(r, Ambient::V, n);
    const Subspace sp = null_subspace(s);
    const bool ok = null_subspace(sp) == s && s.dim() + sp.dim() == static_cast<std::size_t>(n) &&
                    static_cast<std::size_t>(n) - sp.dim() == s.dim();
    return expect(ok, [&] { return "S dim " + std::to_string(s.dim()); });
  });
  b.add("null subspaces: S1 in S2 => S2' in S1'", [=](Rng& r) {
    const Subspace s1 = random_subspace(r, Ambient::V, n);
    const Subspace s2 = s1 + random_subspace(r, Ambient::V, n);
    return expect(null_subspace(s2).is_subspace_of(null_subspace(s1)), [] { return std::string("nested pair"); });
  });
  b.add("null subspaces: (S1+S2)' = S1' cap S2', (S1 cap S2)' = S1' + S2'", [=](Rng& r) {
    const Subspace s1 = random_subspace(r, Ambient::V, n), s2 = random_subspace(r, Ambient::V, n);
    const bool ok = null_subspace(s1 + s2) == intersect(null_subspace(s1), null_subspace(s2)) &&
                    null_subspace(intersect(s1, s2)) == null_subspace(s1) + null_subspace(s2);
    return expect(ok, [&] { return "dims " + std::to_string(s1.dim()) + ", " + std::to_string(s2.dim()); });
  });
  b.add("I(S): totally isotropic of dimension n", [=](Rng& r) {
    const Subspace s = random_subspace(r, Ambient::V, n);
    const Subspace i = isotropic_I(s);
    return expect(i.dim() == static_cast<std::size_t>(n) && totally_isotropic(i), [&] { return "S dim " + std::to_string(s.dim()); });
  });
}

inline void endo(Builder& b, const ContextPtr& ctx) {
  const int n = ctx->dim();
  const auto un = static_cast<std::size_t>(n);
  auto M = [un](Rng& r) { return random_matrix(r, un, un); };

  b.add("dual map: phi** = phi, (phi psi)* = psi* phi*", [=](Rng& r) {
    const LinMapV phi(M(r)), psi(M(r));
    const bool ok = dual_map(dual_map(phi)) == phi && dual_map(phi * psi) == dual_map(psi) * dual_map(phi);
    return expect(ok, [&] { return "phi = " + show_matrix(phi.matrix()) + "; psi = " + show_matrix(psi.matrix()); });
  });
  b.add("dual map: ker phi* = (im phi)'", [=](Rng& r) {
    Matrix m = M(r);
    if (r.chance(1, 2)) m(0, 0) = 0;  // often singular at small n
    const LinMapV phi(m);
    return expect(dual_map(phi).kernel() == null_subspace(phi.image()), [&] { return "phi = " + show_matrix(m); });
  });
  b.add("dual map: det phi* = det phi, tr phi* = tr phi", [=](Rng& r) {
    const LinMapV phi(M(r));
    const auto d = dual_map(phi);
    return expect(d.det() == phi.det() && d.trace() == phi.trace(), [&] { return "phi = " + show_matrix(phi.matrix()); });
  });
  // The V* block is the transpose, so composition reverses there.
  b.add("isotropic extension: I(phi psi) = phi psi + psi* phi*, I(id) = id", [=](Rng& r) {
    const LinMapV phi(M(r)), psi(M(r));
    const Matrix prod = isotropic_extension(phi * psi).matrix();
    const Matrix v_block = isotropic_extension(phi).matrix() * isotropic_extension(psi).matrix();
    const Matrix d_block = isotropic_extension(psi).matrix() * isotropic_extension(phi).matrix();
    bool ok = isotropic_extension(LinMapV::identity(un)) == HEndo::identity(2 * un);
    for (std::size_t i = 0; i < 2 * un; ++i)
      for (std::size_t j = 0; j < 2 * un; ++j) {
        const bool lower = i >= un && j >= un;
        ok = ok && prod(i, j) == (lower ? d_block(i, j) : v_block(i, j));
      }
    return expect(ok, [&] { return "phi = " + show_matrix(phi.matrix()); });
  });
  b.add("isotropic extension: phi(S) in S => I(phi) stabilizes I(S)", [=](Rng& r) {
    const Subspace s = random_subspace(r, Ambient::V, n);
    // φ = P + Q with P mapping V into S and Q killing S, so φ(S) ⊆ S.
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < un; ++j) {
      Vector c(un);
      for (const auto& v : s.basis()) c = c + Scalar(r.rational()) * v;
      cols.push_back(c);
    }
    const Matrix phi = Matrix::from_columns(cols);
    const bool ok = stabilizes(s, phi) && stabilizes(isotropic_I(s), isotropic_extension(LinMapV(phi)).matrix());
    return expect(ok, [&] { return "phi = " + show_matrix(phi); });
  });
  b.add("vecfor endo: rank <= 1, dual y* -> y*(x_*) x*", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    const LinMapV f = vecfor_endo(x);
    const Vector y = random_vector(r, un);
    const bool ok = f.rank() <= 1 && dual_map(f)(y) == dot(y, x.vec()) * x.form();
    return expect(ok, [&] { return "x = " + vf(x, ctx); });
  });
  b.add("projection: P^2 = P, self-dual (Witt and sigma), V-image = span{x_*}", [=](Rng& r) {
    const Vecfor x = random_non_null_vecfor(r, n);
    const HEndo p = projection(x);
    const Matrix ps = endo_matrix_sigma(p);
    const LinMapV pv_map = vecfor_endo(x);
    const bool ok = p * p == p && is_self_dual(p.matrix(), witt_gram(n)) && is_self_dual(ps, sigma_gram(n)) &&
                    endo_from_sigma_matrix(ps) == p && pv_map.image() == Subspace::span(Ambient::V, n, {x.vec()});
    return expect(ok, [&] { return "x = " + vf(x, ctx); });
  });
  b.add("reflection: R^2 = 1, orthogonal (Witt and sigma)", [=](Rng& r) {
    const Vecfor x = random_non_null_vecfor(r, n);
    const HEndo rf = reflection(x);
    const Matrix rs = endo_matrix_sigma(rf);
    const bool ok = rf * rf == HEndo::identity(2 * un) && is_orthogonal(rf.matrix(), witt_gram(n)) && is_orthogonal(rs, sigma_gram(n));
    return expect(ok, [&] { return "x = " + vf(x, ctx); });
  });
  b.add("reflection preserves <y,z>", [=](Rng& r) {
    const Vecfor x = random_non_null_vecfor(r, n), y = random_vecfor(r, n), z = random_vecfor(r, n);
    const HEndo rf = reflection(x);
    const Vecfor ry = Vecfor::from_coords(rf(y.coords())), rz = Vecfor::from_coords(rf(z.coords()));
    return expect(bilinear(ry, rz) == bilinear(y, z), [&] { return "x = " + vf(x, ctx) + "; y = " + vf(y, ctx) + "; z = " + vf(z, ctx); });
  });
  b.once("sigma pattern: P, R of s_k are diagonal in the sigma basis at k and n+k", [=](Rng&) -> Outcome {
    const auto sig = sigma_basis(n);
    for (int k = 0; k < n; ++k) {
      Vector dp(2 * un), dr(2 * un, 1);
      dp[static_cast<std::size_t>(k)] = dp[static_cast<std::size_t>(n + k)] = 1;
      dr[static_cast<std::size_t>(k)] = dr[static_cast<std::size_t>(n + k)] = -1;
      const Matrix ps = endo_matrix_sigma(projection(sig[static_cast<std::size_t>(k)]));
      const Matrix rs = endo_matrix_sigma(reflection(sig[static_cast<std::size_t>(k)]));
      if (!(ps == Matrix::diagonal(dp)) || !(rs == Matrix::diagonal(dr)))
        return "k = " + std::to_string(k + 1) + "; P = " + show_matrix(ps) + "; R = " + show_matrix(rs);
    }
    return std::nullopt;
  });
  b.once("null vecfor: projection and reflection are rejected", [=](Rng&) {
    bool rejected = false;
    try {
      (void)projection(Vecfor::e(n, 1));
    } catch (const Error& e) {
      rejected = e.code() == Errc::domain;
    }
    return expect(rejected, [] { return std::string("x = e1"); });
  });
  b.add("hyperplanes: alpha(S0) = 0, alpha(p) = a, scaling by 1/a and negation", [=](Rng& r) {
    Vector alpha;
    do alpha = random_vector(r, un);
    while (is_zero(alpha));
    const Scalar a = r.nonzero_scalar();
    const HyperplaneRep h = hyperplane_representation(alpha, a);
    const HyperplaneRep h1 = hyperplane_representation(alpha, 1);
    const HyperplaneRep hs = hyperplane_representation(a * alpha, 1);
    const HyperplaneRep hn = hyperplane_representation(alpha, -1);
    bool ok = h.s0_basis.size() == un - 1 && rank_of(h.s0_basis) == un - 1 && dot(alpha, h.point) == a;
    for (const auto& v : h.s0_basis) ok = ok && dot(alpha, v).is_zero();
    ok = ok && hs.point == a.inverse() * h1.point && hn.point == Scalar(-1) * h1.point;
    return expect(ok, [&] { return "alpha = " + show_vector(alpha) + "; a = " + to_string(a); });
  });
}

inline void ideals(Builder& b, const ContextPtr& ctx) {
  const int n = ctx->dim();
  const Multivecfor th = theta_star(ctx);
  const auto ideal = std::make_shared<IdealBasis>(ideal_span(th));
  const auto span = std::make_shared<EchelonSpan>(ctx->blade_count());
  for (const auto& s : ideal->span) span->insert(dense_coords(s, ctx->blade_count()));

  b.once("dim Cl t* = 2^n, e_*^t* = sigma, t* t* = 0", [=](Rng&) {
    const bool ok = ideal->dim() == (std::size_t{1} << n) && wedge(e_star(ctx), th) == orientation_sigma(ctx) && gp(th, th).is_zero();
    return expect(ok, [&] { return "dim = " + std::to_string(ideal->dim()); });
  });
  b.once("minimality of Cl t*", [=](Rng&) { return expect(minimality_check(th), [] { return std::string("g = theta*"); }); });
  b.once("Cl 1 is not minimal", [=](Rng&) { return expect(!minimality_check(one(ctx)), [] { return std::string("g = 1"); }); });
  b.add("left closure: u psi in Cl t*", [=](Rng& r) {
    auto u = random_multivecfor(r, ctx);
    Multivecfor psi(ctx);
    for (const auto& s : ideal->span) psi += Scalar(r.rational()) * s;
    return expect(span->contains(dense_coords(gp(u, psi), ctx->blade_count())), [&] { return show({{"u", u}, {"psi", psi}}); });
  });
  b.add("module action: m^-1(x m(u)) = x_*^u + 2 x*_|u", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    auto u = random_supported(r, ctx, ctx->e_mask());
    const auto rhs = wedge(vec_part(x, ctx), u) + Scalar(2) * lcontract(form_part(x, ctx), u);
    return same(ideal_module_action(x, u), rhs, {{"x", mv(x, ctx)}, {"u", u}});
  });
  b.add("grade scaling: S A_x S^-1 = phi_x", [=](Rng& r) {
    const Vecfor x = random_vecfor(r, n);
    const FockMatrix s = grade_scaling(n);
    const FockMatrix s_inv(n, s.matrix().inverse());
    return expect(s * module_action_matrix(ctx, x) * s_inv == clifford_map_matrix(ctx, x), [&] { return "x = " + vf(x, ctx); });
  });
  b.add("m is a bijection onto the ideal: m^-1 m u = u", [=](Rng& r) {
    auto u = random_supported(r, ctx, ctx->e_mask());
    return same(ideal_extract(ideal_embed(u)), u, {{"u", u}});
  });
  b.add("exterior algebra of V*: u* v* = u* ^ v*", [=](Rng& r) {
    auto ut = random_supported(r, ctx, ctx->t_mask()), vt = random_supported(r, ctx, ctx->t_mask());
    return same(gp(ut, vt), wedge(ut, vt), {{"u*", ut}, {"v*", vt}});
  });
  b.add("spinor components: decompose(compose(c)) = c", [=](Rng& r) {
    auto u = random_supported(r, ctx, ctx->t_mask());
    const SpinorRep s = spinor_decompose(u);
    return expect(spinor_compose(ctx, s) == u && spinor_from_json(n, to_json(s)) == s, [&] { return show({{"psi", u}}); });
  });
}

inline std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace suite_detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"contractions", "products", "hodge", "witt", "endo", "ideals"};
  return names;
}

// Each identity draws from its own stream derived from (seed, identity name), so
// reports do not depend on scheduling; identities run on worker threads and are
// collected by index.
inline SuiteReport run_suite(const std::string& name, int n, int trials, std::uint64_t seed, unsigned threads = 0) {
  using namespace suite_detail;
  const bool known = name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
  if (!known) throw Error(Errc::unknown_name, "unknown suite '" + name + "'");
  if (trials < 1) throw Error(Errc::invalid_argument, "trials must be positive");
  if (n < 1 || n > 3) throw Error(Errc::too_large, "identity suites support 1 <= n <= 3");
  const ContextPtr ctx = AlgebraContext::make(n);

  std::vector<Builder> builders;
  for (const auto& s : suite_names()) {
    if (name != "all" && name != s) continue;
    Builder b(s);
    if (s == "contractions") contractions(b, ctx);
    if (s == "products") products(b, ctx);
    if (s == "hodge") hodge_suite(b, ctx);
    if (s == "witt") witt(b, ctx);
    if (s == "endo") endo(b, ctx);
    if (s == "ideals") ideals(b, ctx);
    builders.push_back(std::move(b));
  }
  struct Job {
    std::string suite;
    Case c;
  };
  std::vector<Job> jobs;
  for (auto& b : builders)
    for (auto& c : b.cases()) jobs.push_back({b.suite(), std::move(c)});

  SuiteReport report{name, n, trials, seed, std::vector<IdentityResult>(jobs.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      IdentityResult res{job.suite, job.c.name, true, 0, {}};
      Rng rng = Rng::stream(seed, name_hash(job.suite + "/" + job.c.name));
      const int count = job.c.randomized ? trials : 1;
      for (int t = 0; t < count && res.passed; ++t) {
        ++res.trials;
        try {
          if (auto bad = job.c.check(rng)) {
            res.passed = false;
            res.counterexample = "trial " + std::to_string(t + 1) + ": " + *bad;
          }
        } catch (const std::exception& e) {
          res.passed = false;
          res.counterexample = "trial " + std::to_string(t + 1) + ": exception: " + e.what();
        }
      }
      report.results[i] = std::move(res);
    }
  };
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace hyclif
