#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hyclif/multivecfor.hpp"
#include "hyclif/text.hpp"

namespace hyclif {

enum class TableProduct { geometric, wedge, lcontract };
enum class TableFormat { text, csv, json };

inline TableProduct parse_table_product(const std::string& s) {
  if (s == "geometric") return TableProduct::geometric;
  if (s == "wedge") return TableProduct::wedge;
  if (s == "lcontract") return TableProduct::lcontract;
  throw Error(Errc::invalid_argument, "unknown product '" + s + "' (geometric, wedge, lcontract)");
}

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "text") return TableFormat::text;
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  throw Error(Errc::invalid_argument, "unknown format '" + s + "' (text, csv, json)");
}

inline const char* product_name(TableProduct p) {
  switch (p) {
    case TableProduct::geometric: return "geometric";
    case TableProduct::wedge: return "wedge";
    case TableProduct::lcontract: return "lcontract";
  }
  return "";
}

inline const char* product_symbol(TableProduct p) {
  switch (p) {
    case TableProduct::geometric: return "*";
    case TableProduct::wedge: return "^";
    case TableProduct::lcontract: return "_|";
  }
  return "";
}

struct CayleyTable {
  TableProduct product;
  int n;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;  // cells[row][col] = row op col
};

inline CayleyTable cayley_table(TableProduct product, int n) {
  if (n < 1) throw Error(Errc::out_of_range, "dimension must be at least 1");
  if (n > 3) throw Error(Errc::too_large, "tables are limited to n <= 3");
  const ContextPtr ctx = AlgebraContext::make(n);
  const auto blades = ctx->blades_canonical();
  CayleyTable t{product, n, {}, {}};
  for (Blade b : blades) t.labels.push_back(to_string(Multivecfor::blade(ctx, b)));
  for (Blade a : blades) {
    const Multivecfor u = Multivecfor::blade(ctx, a);
    std::vector<std::string> row;
    for (Blade b : blades) {
      const Multivecfor v = Multivecfor::blade(ctx, b);
      switch (product) {
        case TableProduct::geometric: row.push_back(to_string(gp(u, v))); break;
        case TableProduct::wedge: row.push_back(to_string(wedge(u, v))); break;
        case TableProduct::lcontract: row.push_back(to_string(lcontract(u, v))); break;
      }
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

// text: aligned grid, the corner holds the product symbol; csv: same grid,
// comma separated (cells never contain commas); json: labels and rows of strings.
inline std::string emit_table(TableProduct product, int n, TableFormat format) {
  const CayleyTable t = cayley_table(product, n);
  std::vector<std::vector<std::string>> grid;
  grid.push_back({product_symbol(product)});
  grid[0].insert(grid[0].end(), t.labels.begin(), t.labels.end());
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    std::vector<std::string> row{t.labels[i]};
    row.insert(row.end(), t.cells[i].begin(), t.cells[i].end());
    grid.push_back(std::move(row));
  }

  std::string out;
  switch (format) {
    case TableFormat::text: {
      std::vector<std::size_t> width(grid[0].size(), 0);
      for (const auto& row : grid)
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
      for (const auto& row : grid) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
          line += row[j];
          if (j + 1 < row.size()) line += std::string(width[j] - row[j].size() + 2, ' ');
        }
        out += line + '\n';
      }
      break;
    }
    case TableFormat::csv:
      for (const auto& row : grid) {
        for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + row[j];
        out += '\n';
      }
      break;
    case TableFormat::json: {
      Json j;
      j["product"] = product_name(product);
      j["dim"] = n;
      j["basis"] = t.labels;
      j["rows"] = t.cells;
      out = j.dump(2) + '\n';
      break;
    }
  }
  return out;
}

}  // namespace hyclif
