#pragma once

// Rank of a family of sparse vectors over the fraction field of a Laurent ring.
//
// rank_exact is authoritative: vectors are cleared of x-denominators and eliminated
// fraction-free (unit pivots are divided out, other pivots cross-multiplied), with
// integer content removed after every update.
//
// rank_modular specialises x (and a) into a large prime field. A ring map can only
// lose rank, so its result is a lower bound for rank_exact.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blobrep/rings.hpp"

namespace blobrep {

/// Sorted (index, nonzero value) list.
template <class R>
using SparseVector = std::vector<std::pair<std::uint64_t, R>>;

template <class R>
SparseVector<R> to_sparse(const std::vector<R>& dense) {
  SparseVector<R> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
  }
  return out;
}

namespace detail {

template <class R>
SparseVector<R> scale(const SparseVector<R>& v, const R& c) {
  SparseVector<R> out;
  out.reserve(v.size());
  for (const auto& [i, e] : v) {
    R p = e * c;
    if (!p.is_zero()) out.emplace_back(i, std::move(p));
  }
  return out;
}

// alpha * u - beta * w
template <class R>
SparseVector<R> combine(const R& alpha, const SparseVector<R>& u, const R& beta, const SparseVector<R>& w) {
  SparseVector<R> out;
  out.reserve(u.size() + w.size());
  auto i = u.begin();
  auto j = w.begin();
  while (i != u.end() || j != w.end()) {
    if (j == w.end() || (i != u.end() && i->first < j->first)) {
      R p = alpha * i->second;
      if (!p.is_zero()) out.emplace_back(i->first, std::move(p));
      ++i;
    } else if (i == u.end() || j->first < i->first) {
      R p = -(beta * j->second);
      if (!p.is_zero()) out.emplace_back(j->first, std::move(p));
      ++j;
    } else {
      R p = alpha * i->second - beta * j->second;
      if (!p.is_zero()) out.emplace_back(i->first, std::move(p));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class R>
const R* find_entry(const SparseVector<R>& v, std::uint64_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::uint64_t k) { return e.first < k; });
  if (it != v.end() && it->first == index) return &it->second;
  return nullptr;
}

// Multiplies by the power of x that makes the smallest exponent zero, then divides out
// the integer content. Both are nonzero scalings and leave the span unchanged.
template <class C>
void normalize(SparseVector<Laurent<C>>& v) {
  if (v.empty()) return;
  int lo = v.front().second.min_exponent();
  std::int64_t g = 0;
  for (const auto& [i, e] : v) {
    lo = std::min(lo, e.min_exponent());
    g = std::gcd(g, CoeffTraits<Laurent<C>>::content(e));
  }
  for (auto& [i, e] : v) {
    if (lo != 0) e = e.shifted(-lo);
    if (g > 1) e = CoeffTraits<Laurent<C>>::divide_integer(e, g);
  }
}

struct PivotRow {
  std::uint64_t column;
  std::size_t row;
};

}  // namespace detail

/// Rank over the fraction field. Vectors must have entries in one Laurent ring.
template <class C>
std::size_t rank_exact(const std::vector<SparseVector<Laurent<C>>>& vectors) {
  using R = Laurent<C>;
  std::unordered_map<std::uint64_t, std::size_t> column_weight;
  for (const auto& v : vectors) {
    for (const auto& [i, e] : v) ++column_weight[i];
  }

  std::vector<SparseVector<R>> rows;
  std::vector<detail::PivotRow> pivots;
  for (const auto& input : vectors) {
    SparseVector<R> v = input;
    detail::normalize(v);
    for (const auto& pr : pivots) {
      if (v.empty()) break;
      const R* c = detail::find_entry(v, pr.column);
      if (c == nullptr) continue;
      const R coeff = *c;
      const SparseVector<R>& row = rows[pr.row];
      const R& p = detail::find_entry(row, pr.column)[0];
      if (p.is_unit()) {
        v = detail::combine(R(1), v, coeff * p.unit_inverse(), row);
      } else {
        v = detail::combine(p, v, coeff, row);
      }
      detail::normalize(v);
    }
    if (v.empty()) continue;

    // Prefer a unit pivot, then the sparsest column.
    auto better = [&](const auto& l, const auto& r) {
      const bool lu = l.second.is_unit();
      const bool ru = r.second.is_unit();
      if (lu != ru) return lu;
      const auto lw = column_weight[l.first];
      const auto rw = column_weight[r.first];
      if (lw != rw) return lw < rw;
      return l.first < r.first;
    };
    const auto best = std::min_element(v.begin(), v.end(), better);
    pivots.push_back({best->first, rows.size()});
    rows.push_back(std::move(v));
  }
  return rows.size();
}

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// A prime p = 1 (mod 8) near 2^62, so F_p contains a root of a^4 + 1.
inline std::uint64_t random_prime_1_mod_8(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << 61, (1ULL << 62) - 1);
  for (;;) {
    const std::uint64_t candidate = (dist(rng) & ~7ULL) | 1ULL;
    if (is_prime_u64(candidate)) return candidate;
  }
}

// A random primitive 8th root of unity mod p (a root of a^4 + 1).
inline std::uint64_t random_root_of_a4_plus_1(std::uint64_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(2, p - 2);
  for (;;) {
    const std::uint64_t g = dist(rng);
    if (powmod(g, (p - 1) / 2, p) != p - 1) continue;
    const std::uint64_t zeta = powmod(g, (p - 1) / 8, p);
    const std::uint64_t odd = 2 * std::uniform_int_distribution<std::uint64_t>(0, 3)(rng) + 1;
    return powmod(zeta, odd, p);
  }
}

template <class C>
std::uint64_t evaluate_mod(const Laurent<C>& poly, std::uint64_t p, std::uint64_t x, std::uint64_t x_inv,
                           std::uint64_t a) {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : poly.terms()) {
    const std::uint64_t xe = e >= 0 ? powmod(x, static_cast<std::uint64_t>(e), p)
                                    : powmod(x_inv, static_cast<std::uint64_t>(-e), p);
    acc = (acc + mulmod(CoeffTraits<C>::reduce_mod(c, p, a), xe, p)) % p;
  }
  return acc;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> vectors,
                              std::uint64_t p) {
  using Vec = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  std::vector<Vec> rows;  // pivot entry normalised to 1 and stored first
  std::vector<std::uint64_t> pivot_col;
  for (auto& v : vectors) {
    for (std::size_t k = 0; k < rows.size() && !v.empty(); ++k) {
      auto it = std::lower_bound(v.begin(), v.end(), pivot_col[k],
                                 [](const auto& e, std::uint64_t c) { return e.first < c; });
      if (it == v.end() || it->first != pivot_col[k]) continue;
      const std::uint64_t factor = it->second;
      Vec out;
      out.reserve(v.size() + rows[k].size());
      auto i = v.begin();
      auto j = rows[k].begin();
      while (i != v.end() || j != rows[k].end()) {
        if (j == rows[k].end() || (i != v.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == v.end() || j->first < i->first) {
          out.emplace_back(j->first, (p - mulmod(factor, j->second, p)) % p);
          ++j;
        } else {
          const std::uint64_t val = (i->second + p - mulmod(factor, j->second, p)) % p;
          if (val != 0) out.emplace_back(i->first, val);
          ++i;
          ++j;
        }
      }
      v = std::move(out);
    }
    if (v.empty()) continue;
    const auto [col, val] = v.front();
    const std::uint64_t inv = powmod(val, p - 2, p);
    for (auto& e : v) e.second = mulmod(e.second, inv, p);
    pivot_col.push_back(col);
    rows.push_back(std::move(v));
  }
  return rows.size();
}

}  // namespace detail

/// Lower bound for rank_exact: the maximum rank seen over `trials` random
/// specialisations x -> random nonzero residue (and a -> random root of a^4 + 1)
/// modulo a random prime near 2^62.
template <class C>
std::size_t rank_modular(const std::vector<SparseVector<Laurent<C>>>& vectors, int trials,
                         std::uint64_t seed = 0x5eedULL) {
  if (trials < 1) throw std::invalid_argument("rank_modular: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t p = detail::random_prime_1_mod_8(rng);
    const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(2, p - 2)(rng);
    const std::uint64_t x_inv = detail::powmod(x, p - 2, p);
    const std::uint64_t a = detail::random_root_of_a4_plus_1(p, rng);
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> reduced;
    reduced.reserve(vectors.size());
    for (const auto& v : vectors) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> r;
      for (const auto& [i, e] : v) {
        const std::uint64_t val = detail::evaluate_mod(e, p, x, x_inv, a);
        if (val != 0) r.emplace_back(i, val);
      }
      reduced.push_back(std::move(r));
    }
    best = std::max(best, detail::rank_mod_p(std::move(reduced), p));
  }
  return best;
}

}  // namespace blobrep
