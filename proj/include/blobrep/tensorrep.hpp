#pragma once

// Tensor-space matrices.
//
// Rows and columns are indexed by sequences s in {1,2}^n encoded as
// sum_i (s_i - 1) 2^{n-i}: the first letter is the most significant bit and 1 sorts
// before 2.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "blobrep/diagrams.hpp"
#include "blobrep/rank.hpp"
#include "blobrep/rings.hpp"

namespace blobrep {

/// Letter s_pos (1-based) of the sequence encoded by `index` of length n.
inline int sequence_letter(std::uint32_t index, int n, int pos) {
  return static_cast<int>((index >> static_cast<unsigned>(n - pos)) & 1U) + 1;
}

inline std::string sequence_string(std::uint32_t index, int n) {
  std::string s;
  for (int pos = 1; pos <= n; ++pos) s += static_cast<char>('0' + sequence_letter(index, n, pos));
  return s;
}

inline std::uint32_t sequence_index(const std::string& letters) {
  std::uint32_t idx = 0;
  for (char c : letters) {
    if (c != '1' && c != '2') throw std::invalid_argument("sequence letters must be 1 or 2: " + letters);
    idx = (idx << 1U) | static_cast<std::uint32_t>(c - '1');
  }
  return idx;
}

/// Sparse matrix on ({1,2}^rows_log2) x ({1,2}^cols_log2); zero entries are never stored.
template <class R>
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, R>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(int rows_log2, int cols_log2)
      : rows_log2_(rows_log2), cols_log2_(cols_log2), rows_(std::size_t{1} << rows_log2) {
    if (rows_log2 < 0 || cols_log2 < 0 || rows_log2 > 24 || cols_log2 > 24) {
      throw std::invalid_argument("matrix dimension out of supported range");
    }
  }

  static SparseMatrix identity(int n) {
    SparseMatrix out(n, n);
    for (std::uint32_t i = 0; i < out.rows(); ++i) out.rows_[i].emplace_back(i, R(1));
    return out;
  }

  /// Builds from (row, col, value) triplets; duplicates are summed.
  static SparseMatrix from_triplets(int rows_log2, int cols_log2,
                                    const std::vector<std::tuple<std::uint32_t, std::uint32_t, R>>& triplets) {
    SparseMatrix out(rows_log2, cols_log2);
    std::vector<std::map<std::uint32_t, R>> acc(out.rows());
    for (const auto& [r, c, v] : triplets) {
      if (r >= out.rows() || c >= out.cols()) throw std::out_of_range("matrix entry out of range");
      acc[r][c] += v;
    }
    for (std::uint32_t r = 0; r < out.rows(); ++r) {
      for (auto& [c, v] : acc[r]) {
        if (!v.is_zero()) out.rows_[r].emplace_back(c, std::move(v));
      }
    }
    return out;
  }

  [[nodiscard]] int rows_log2() const { return rows_log2_; }
  [[nodiscard]] int cols_log2() const { return cols_log2_; }
  [[nodiscard]] std::uint32_t rows() const { return std::uint32_t{1} << static_cast<unsigned>(rows_log2_); }
  [[nodiscard]] std::uint32_t cols() const { return std::uint32_t{1} << static_cast<unsigned>(cols_log2_); }
  [[nodiscard]] const Row& row(std::uint32_t r) const { return rows_.at(r); }

  [[nodiscard]] std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const auto& r : rows_) k += r.size();
    return k;
  }
  [[nodiscard]] bool is_zero() const { return nonzeros() == 0; }

  [[nodiscard]] R at(std::uint32_t r, std::uint32_t c) const {
    const Row& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t k) { return e.first < k; });
    if (it != row.end() && it->first == c) return it->second;
    return R();
  }

  /// Applies f to every entry, dropping results that are zero.
  template <class S, class F>
  [[nodiscard]] SparseMatrix<S> map(F&& f) const {
    SparseMatrix<S> out(rows_log2_, cols_log2_);
    for (std::uint32_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        S s = f(v);
        if (!s.is_zero()) out.mutable_row(r).emplace_back(c, std::move(s));
      }
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_log2_ != b.rows_log2_) throw std::invalid_argument("matrix product shape mismatch");
    SparseMatrix out(a.rows_log2_, b.cols_log2_);
    std::map<std::uint32_t, R> acc;
    for (std::uint32_t r = 0; r < a.rows(); ++r) {
      acc.clear();
      for (const auto& [k, av] : a.rows_[r]) {
        for (const auto& [c, bv] : b.rows_[k]) acc[c] += av * bv;
      }
      for (auto& [c, v] : acc) {
        if (!v.is_zero()) out.rows_[r].emplace_back(c, std::move(v));
      }
    }
    return out;
  }

  friend SparseMatrix operator*(const R& s, const SparseMatrix& a) {
    if (s.is_zero()) return SparseMatrix(a.rows_log2_, a.cols_log2_);
    return a.template map<R>([&](const R& v) { return s * v; });
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_log2_ != b.rows_log2_ || a.cols_log2_ != b.cols_log2_) {
      throw std::invalid_argument("matrix sum shape mismatch");
    }
    SparseMatrix out(a.rows_log2_, a.cols_log2_);
    for (std::uint32_t r = 0; r < a.rows(); ++r) {
      auto i = a.rows_[r].begin();
      auto j = b.rows_[r].begin();
      auto& dst = out.rows_[r];
      while (i != a.rows_[r].end() || j != b.rows_[r].end()) {
        if (j == b.rows_[r].end() || (i != a.rows_[r].end() && i->first < j->first)) {
          dst.push_back(*i++);
        } else if (i == a.rows_[r].end() || j->first < i->first) {
          dst.push_back(*j++);
        } else {
          R s = i->second + j->second;
          if (!s.is_zero()) dst.emplace_back(i->first, std::move(s));
          ++i;
          ++j;
        }
      }
    }
    return out;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + R(-1) * b; }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  Row& mutable_row(std::uint32_t r) { return rows_.at(r); }

 private:
  int rows_log2_ = 0;
  int cols_log2_ = 0;
  std::vector<Row> rows_{1};
};

template <class R>
SparseMatrix<R> matrix_product(const SparseMatrix<R>& a, const SparseMatrix<R>& b) {
  return a * b;
}

template <class R>
SparseMatrix<R> scalar_product(const R& c, const SparseMatrix<R>& a) {
  return c * a;
}

/// Row-major flattening into one vector of length rows * cols.
template <class R>
SparseVector<R> flatten(const SparseMatrix<R>& a) {
  SparseVector<R> out;
  out.reserve(a.nonzeros());
  for (std::uint32_t r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) out.emplace_back(std::uint64_t{r} * a.cols() + c, v);
  }
  return out;
}

inline SparseMatrix<CycloLaurent> embed(const SparseMatrix<LaurentInt>& a) {
  return a.map<CycloLaurent>([](const LaurentInt& v) { return embed(v); });
}

/// Positions of the nonzero entries.
struct Mask {
  int rows_log2 = 0;
  int cols_log2 = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> positions;  // row-major

  friend bool operator==(const Mask&, const Mask&) = default;
};

template <class R>
Mask mask(const SparseMatrix<R>& a) {
  Mask out{a.rows_log2(), a.cols_log2(), {}};
  for (std::uint32_t r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) out.positions.emplace_back(r, c);
  }
  return out;
}

inline bool mask_eq(const Mask& a, const Mask& b) {
  if (a.rows_log2 != b.rows_log2 || a.cols_log2 != b.cols_log2) throw std::invalid_argument("mask shape mismatch");
  return a.positions == b.positions;
}

template <class R, class S>
bool mask_eq(const SparseMatrix<R>& a, const SparseMatrix<S>& b) {
  return mask_eq(mask(a), mask(b));
}

/// R_q(D) with q = half^2. Each through line (i j') contributes delta(v_i, w_j); each
/// arc with endpoints i < j on one edge contributes half^{+1} when its letters read
/// (1,2) left to right and half^{-1} when they read (2,1), and zero when equal.
template <class R>
SparseMatrix<R> r_matrix(const Pairing& d, const R& half) {
  const int n = d.north();
  const int m = d.south();
  const R inverse = half.unit_inverse();
  const auto chords = d.pairs();
  const std::size_t lines = chords.size();
  std::vector<std::tuple<std::uint32_t, std::uint32_t, R>> triplets;
  triplets.reserve(std::size_t{1} << lines);
  auto row_bit = [&](int node) { return std::uint32_t{1} << static_cast<unsigned>(n - 1 - node); };
  auto col_bit = [&](int node) { return std::uint32_t{1} << static_cast<unsigned>(m - 1 - (node - n)); };
  for (std::size_t choice = 0; choice < (std::size_t{1} << lines); ++choice) {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    int exponent = 0;
    for (std::size_t k = 0; k < lines; ++k) {
      const bool flip = (choice >> k) & 1U;
      const auto [a, b] = chords[k];  // a < b, so a is northern whenever the chord touches the north
      if (a < n && b >= n) {
        if (flip) {
          row |= row_bit(a);
          col |= col_bit(b);
        }
      } else if (b < n) {
        // letters (1,2) unflipped, (2,1) flipped
        row |= flip ? row_bit(a) : row_bit(b);
        exponent += flip ? -1 : 1;
      } else {
        col |= flip ? col_bit(a) : col_bit(b);
        exponent += flip ? -1 : 1;
      }
    }
    R value(1);
    for (int k = 0; k < exponent; ++k) value = value * half;
    for (int k = 0; k > exponent; --k) value = value * inverse;
    triplets.emplace_back(row, col, std::move(value));
  }
  return SparseMatrix<R>::from_triplets(n, m, triplets);
}

/// R_q(D) over Z[x, x^-1] with q = x^2.
inline SparseMatrix<LaurentInt> r_matrix(const Pairing& d) { return r_matrix(d, LaurentInt::x_power(1)); }

template <class R>
using LocalMatrix = std::array<std::array<R, 4>, 4>;

/// The 4x4 block with rows/cols ordered (11, 12, 21, 22):
///   0 0 0 0 / 0 q 1 0 / 0 1 q^-1 0 / 0 0 0 chi
template <class R>
LocalMatrix<R> local_u_matrix(const R& chi, const R& param) {
  LocalMatrix<R> l{};
  l[1][1] = param;
  l[1][2] = R(1);
  l[2][1] = R(1);
  l[2][2] = param.unit_inverse();
  l[3][3] = chi;
  return l;
}

/// sign * L acting on tensor factors (i, i+1) of N, identity elsewhere.
template <class R>
SparseMatrix<R> place_local(const LocalMatrix<R>& local, int i, int factors, int sign) {
  if (i < 1 || i > factors - 1) throw std::out_of_range("place_local: position out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("place_local: sign must be +1 or -1");
  const unsigned hi = static_cast<unsigned>(factors - i);
  const unsigned lo = hi - 1;
  const std::uint32_t clear = ~((1U << hi) | (1U << lo));
  SparseMatrix<R> out(factors, factors);
  for (std::uint32_t r = 0; r < out.rows(); ++r) {
    const std::uint32_t lr = ((r >> hi) & 1U) * 2 + ((r >> lo) & 1U);
    for (std::uint32_t lc = 0; lc < 4; ++lc) {
      const R& v = local[lr][lc];
      if (v.is_zero()) continue;
      const std::uint32_t c = (r & clear) | ((lc >> 1U) << hi) | ((lc & 1U) << lo);
      out.mutable_row(r).emplace_back(c, sign == 1 ? v : -v);
    }
    auto& row = out.mutable_row(r);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return out;
}

/// M_2^param(U_i) on N factors: -U^param at (i, i+1).
template <class R>
SparseMatrix<R> m2_matrix(const R& param, int i, int factors) {
  return place_local(local_u_matrix(R(), param), i, factors, -1);
}

/// Images of the blob generators: e and U_1..U_{n-1}. For mirror representations each
/// U_i image may also be supplied as a factor pair (left, right).
template <class R>
struct Representation {
  int factors = 0;  // matrices act on ({1,2}^factors)
  std::optional<SparseMatrix<R>> e;
  std::map<int, SparseMatrix<R>> u;
  std::map<int, std::pair<SparseMatrix<R>, SparseMatrix<R>>> u_factors;
};

/// Parameters of the mirror representation rho_0 on 2n factors.
struct Rho0Config {
  int n = 1;
  int m = 1;

  /// r = a^2 q^m
  [[nodiscard]] CycloLaurent r() const { return a_power(2) * CycloLaurent::x_power(2 * m); }
  /// s = a^5 x
  [[nodiscard]] CycloLaurent s() const { return a_power(5) * CycloLaurent::x_power(1); }
  /// t = a^3 x
  [[nodiscard]] CycloLaurent t() const { return a_power(3) * CycloLaurent::x_power(1); }
};

/// rho_0: e -> a^-2 M_2^r(U_n), U_i -> M_2^s(U_{n-i}) M_2^t(U_{n+i}) on 2n factors.
inline Representation<CycloLaurent> rho0(const Rho0Config& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("rho0: n must be >= 1");
  const int factors = 2 * cfg.n;
  Representation<CycloLaurent> rep;
  rep.factors = factors;
  rep.e = a_power(-2) * m2_matrix(cfg.r(), cfg.n, factors);
  for (int i = 1; i <= cfg.n - 1; ++i) {
    auto left = m2_matrix(cfg.s(), cfg.n - i, factors);
    auto right = m2_matrix(cfg.t(), cfg.n + i, factors);
    rep.u.emplace(i, left * right);
    rep.u_factors.emplace(i, std::pair{std::move(left), std::move(right)});
  }
  return rep;
}

/// The TL representation U_i -> R(U_i) on n factors (no e).
inline Representation<LaurentInt> tl_representation(int n) {
  Representation<LaurentInt> rep;
  rep.factors = n;
  for (int i = 1; i <= n - 1; ++i) rep.u.emplace(i, r_matrix(generator_u(i, n)));
  return rep;
}

}  // namespace blobrep
