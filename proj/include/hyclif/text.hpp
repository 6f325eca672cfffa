#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyclif/matrix.hpp"
#include "hyclif/multivecfor.hpp"
#include "hyclif/vecfor.hpp"

namespace hyclif {

namespace detail {

inline bool is_integer(const Scalar& s) { return s.is_rational() && s.rat().get_den() == 1; }

// Coefficient text for a term whose magnitude is already nonnegative (or mixed).
inline std::string coefficient_prefix(const Scalar& c, const std::string& blade) {
  if (c.is_one()) return blade;
  if (!c.is_rational() && sgn(c.rat()) != 0) return "(" + to_string(c) + ") " + blade;
  if (is_integer(c)) return to_string(c) + blade;
  return to_string(c) + " " + blade;
}

}  // namespace detail

// Canonical text: terms in (grade, mask) order, e.g. `1 - e1^t1`, `2t1 - 1/2 e2`,
// `1/2+3/4 r2`, `(1+r2) e1`.
inline std::string to_string(const Multivecfor& u) {
  if (u.is_zero()) return "0";
  const auto& ctx = u.context();
  std::string out;
  bool first = true;
  for (const auto& t : u.terms()) {
    Scalar c = t.coeff;
    bool negative = false;
    if (c.is_rational() || sgn(c.rat()) == 0) {
      negative = c.sign() < 0;
      if (negative) c = -c;
    }
    std::string body = t.blade == 0 ? to_string(c) : detail::coefficient_prefix(c, ctx->blade_name(t.blade));
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Multivecfor& u) { return os << to_string(u); }

inline std::string to_string(const Vecfor& x, const ContextPtr& ctx) { return to_string(x.to_multivecfor(ctx)); }

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::json;

inline Json to_json(const Scalar& s) { return Json{{"rat", s.rat().get_str()}, {"rat_r2", s.r2().get_str()}}; }

inline Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_object() && j.contains("rat")) {
    Rational r2 = j.contains("rat_r2") ? parse_rational(j.at("rat_r2").get<std::string>()) : Rational(0);
    return {parse_rational(j.at("rat").get<std::string>()), r2};
  }
  throw Error(Errc::invalid_argument, "expected a scalar: integer, \"p/q\" string or {\"rat\",\"rat_r2\"}");
}

inline Json to_json(const Multivecfor& u) {
  Json terms = Json::array();
  const int n = u.context() ? u.context()->dim() : 0;
  for (const auto& t : u.terms()) {
    Json blade = Json::array();
    for (Blade m = t.blade; m; m &= m - 1) blade.push_back(u.context()->generator_name(std::countr_zero(m)));
    terms.push_back(Json{{"blade", blade}, {"coeff", to_json(t.coeff)}});
  }
  return Json{{"dim", n}, {"terms", terms}};
}

inline Multivecfor multivecfor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
    throw Error(Errc::invalid_argument, "expected {\"dim\": N, \"terms\": [...]}");
  const ContextPtr ctx = AlgebraContext::make(j.at("dim").get<int>());
  Multivecfor out(ctx);
  for (const auto& t : j.at("terms")) {
    Multivecfor blade = one(ctx);
    for (const auto& g : t.at("blade")) {
      const std::string name = g.get<std::string>();
      if (name.size() < 2 || (name[0] != 'e' && name[0] != 't') ||
          name.find_first_not_of("0123456789", 1) != std::string::npos || name.size() > 4)
        throw Error(Errc::invalid_argument, "bad generator name '" + name + "'");
      const int k = std::stoi(name.substr(1));
      blade = wedge(blade, name[0] == 'e' ? Multivecfor::e(ctx, k) : Multivecfor::t(ctx, k));
    }
    out += scalar_from_json(t.at("coeff")) * blade;
  }
  return out;
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::invalid_argument, "matrix must be a JSON array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(Errc::invalid_argument, "matrix row must be an array");
    Vector row;
    for (const auto& x : r) row.push_back(scalar_from_json(x));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

// CSV of scalar strings; the first line documents the basis order.
inline std::string to_csv(const Matrix& m, const std::vector<std::string>& basis) {
  std::ostringstream os;
  os << "# basis:";
  for (std::size_t i = 0; i < basis.size(); ++i) os << (i ? "," : " ") << basis[i];
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << to_string(m(i, j));
    os << '\n';
  }
  return os.str();
}

}  // namespace hyclif
