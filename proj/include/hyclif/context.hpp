#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyclif/error.hpp"
#include "hyclif/matrix.hpp"

namespace hyclif {

// Wedge of Witt generators, bits 0..n-1 = e1..en, bits n..2n-1 = t1..tn.
using Blade = std::uint32_t;

inline int grade_of(Blade b) { return std::popcount(b); }

// (grade, mask) order used for every printed or enumerated listing.
inline bool canonical_less(Blade a, Blade b) {
  const int ga = grade_of(a), gb = grade_of(b);
  return ga != gb ? ga < gb : a < b;
}

// Sign of reordering a∧b into canonical order; 0 when a and b share a factor.
inline int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Blade t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  return (swaps & 1) ? -1 : 1;
}

// Sparse integer combination of blades; blade-level product results.
using Expansion = std::vector<std::pair<Blade, std::int64_t>>;

inline constexpr int max_dimension = 14;

class AlgebraContext {
public:
  static std::shared_ptr<const AlgebraContext> make(int n) {
    if (n < 1 || n > max_dimension)
      throw Error(Errc::out_of_range,
                  "dimension " + std::to_string(n) + " outside 1.." + std::to_string(max_dimension));
    // One context per dimension, so equal dimensions compare equal and share the memo.
    static std::mutex mutex;
    static std::shared_ptr<const AlgebraContext> interned[max_dimension + 1];
    std::lock_guard lock(mutex);
    auto& slot = interned[n];
    if (!slot) slot.reset(new AlgebraContext(n));
    return slot;
  }

  int dim() const { return n_; }
  int generator_count() const { return 2 * n_; }
  std::size_t blade_count() const { return std::size_t{1} << (2 * n_); }

  Blade e_mask() const { return (Blade{1} << n_) - 1; }
  Blade t_mask() const { return e_mask() << n_; }
  Blade full_mask() const { return (Blade{1} << (2 * n_)) - 1; }

  // generator ids: 0..n-1 -> e_{i+1}, n..2n-1 -> t_{i-n+1}
  static Blade bit(int gen) { return Blade{1} << gen; }
  Blade e(int k) const { return bit(k - 1); }
  Blade t(int k) const { return bit(n_ + k - 1); }

  int gram(int i, int j) const { return gram_[static_cast<std::size_t>(i * 2 * n_ + j)]; }
  Matrix gram_matrix() const {
    Matrix g(2 * n_, 2 * n_);
    for (int i = 0; i < 2 * n_; ++i)
      for (int j = 0; j < 2 * n_; ++j) g(i, j) = gram(i, j);
    return g;
  }

  std::string generator_name(int gen) const {
    return gen < n_ ? "e" + std::to_string(gen + 1) : "t" + std::to_string(gen - n_ + 1);
  }
  std::string blade_name(Blade b) const {
    if (b == 0) return "1";
    std::string s;
    for (Blade m = b; m; m &= m - 1) {
      if (!s.empty()) s += '^';
      s += generator_name(std::countr_zero(m));
    }
    return s;
  }

  // All 4^n blades in canonical (grade, mask) order.
  std::vector<Blade> blades_canonical() const {
    std::vector<std::vector<Blade>> by_grade(static_cast<std::size_t>(2 * n_ + 1));
    for (Blade b = 0; b <= full_mask(); ++b) by_grade[static_cast<std::size_t>(grade_of(b))].push_back(b);
    std::vector<Blade> out;
    out.reserve(blade_count());
    for (auto& g : by_grade) out.insert(out.end(), g.begin(), g.end());
    return out;
  }

  // x ⌟ B for a single generator x.
  Expansion generator_lcontract(int gen, Blade b) const {
    Expansion out;
    int pos = 0;
    for (Blade m = b; m; m &= m - 1, ++pos) {
      const int g = std::countr_zero(m);
      const int w = gram(gen, g);
      if (w != 0) out.emplace_back(b & ~bit(g), (pos & 1) ? -w : w);
    }
    return out;
  }

  // A ⌟ B via (x∧A')⌟B = x⌟(A'⌟B) with x the lowest factor of A.
  Expansion blade_lcontract(Blade a, Blade b) const {
    if (a == 0) return {{b, 1}};
    if (grade_of(a) > grade_of(b)) return {};
    const int x = std::countr_zero(a);
    const Expansion inner = blade_lcontract(a & (a - 1), b);
    Expansion out;
    for (const auto& [m, c] : inner)
      for (const auto& [m2, c2] : generator_lcontract(x, m)) out.emplace_back(m2, c * c2);
    return normalize(std::move(out));
  }

  // Gram determinant of the factor lists of two blades of equal grade.
  std::int64_t blade_bilinear(Blade a, Blade b) const {
    const int r = grade_of(a);
    if (r != grade_of(b)) return 0;
    if (r == 0) return 1;
    std::vector<int> ga, gb;
    for (Blade m = a; m; m &= m - 1) ga.push_back(std::countr_zero(m));
    for (Blade m = b; m; m &= m - 1) gb.push_back(std::countr_zero(m));
    std::vector<std::int64_t> mat(static_cast<std::size_t>(r * r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) mat[static_cast<std::size_t>(i * r + j)] = gram(ga[static_cast<std::size_t>(i)], gb[static_cast<std::size_t>(j)]);
    return int_det(std::move(mat), r);
  }

  // Memoized Clifford product of two blades (thread-safe).
  const Expansion& blade_gp(Blade a, Blade b) const {
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    {
      std::shared_lock lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Expansion value = compute_blade_gp(a, b);
    std::unique_lock lock(memo_mutex_);
    return memo_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t memo_size() const {
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
  }

private:
  explicit AlgebraContext(int n) : n_(n), gram_(static_cast<std::size_t>(4 * n * n), 0) {
    for (int i = 0; i < n; ++i) {
      gram_[static_cast<std::size_t>(i * 2 * n + n + i)] = 1;
      gram_[static_cast<std::size_t>((n + i) * 2 * n + i)] = 1;
    }
  }

  static Expansion normalize(Expansion terms) {
    std::sort(terms.begin(), terms.end());
    Expansion out;
    for (const auto& [m, c] : terms) {
      if (!out.empty() && out.back().first == m) {
        out.back().second += c;
      } else {
        out.emplace_back(m, c);
      }
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
  }

  // x·M = x⌟M + x∧M for a generator x and blade M.
  Expansion generator_gp(int gen, Blade m) const {
    Expansion out = generator_lcontract(gen, m);
    if (const int s = wedge_sign(bit(gen), m); s != 0) out.emplace_back(m | bit(gen), s);
    return out;
  }

  // Recursive peeling: (x∧A')·B = x·(A'·B) − (x⌟A')·B.
  Expansion compute_blade_gp(Blade a, Blade b) const {
    if (a == 0) return {{b, 1}};
    const int x = std::countr_zero(a);
    const Blade rest = a & (a - 1);
    Expansion out;
    for (const auto& [m, c] : blade_gp(rest, b))
      for (const auto& [m2, c2] : generator_gp(x, m)) out.emplace_back(m2, c * c2);
    for (const auto& [m, c] : generator_lcontract(x, rest))
      for (const auto& [m2, c2] : blade_gp(m, b)) out.emplace_back(m2, -c * c2);
    return normalize(std::move(out));
  }

  static std::int64_t int_det(std::vector<std::int64_t> a, int n) {
    // Bareiss; entries stay small for Witt Gram blocks.
    auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i * n + j)]; };
    std::int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (at(k, k) == 0) {
        int p = k + 1;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return 0;
        for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
  }

  int n_;
  std::vector<int> gram_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, Expansion> memo_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

}  // namespace hyclif
