#pragma once

// Exact coefficient rings.
//
//   CheckedInt   64-bit integers; arithmetic throws std::overflow_error instead of wrapping.
//   CycloInt     Z[a]/(a^4 + 1), stored on the basis {1, a, a^2, a^3}.
//   Laurent<C>   C[x, x^-1] as a sorted list of (exponent, nonzero coefficient).
//
// LaurentInt = Laurent<CheckedInt> holds the generic parameter ring with q = x^2.
// CycloLaurent = Laurent<CycloInt> is the codomain ring of the mirror representation.
// Laurent<LaurentInt> gives a second independent formal parameter.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blobrep {

class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT: implicit by intent

  [[nodiscard]] constexpr std::int64_t value() const { return v_; }
  [[nodiscard]] constexpr bool is_zero() const { return v_ == 0; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt: addition overflow");
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt: subtraction overflow");
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt: multiplication overflow");
    return r;
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt c) { return os << c.v_; }

 private:
  std::int64_t v_ = 0;
};

/// Element c0 + c1 a + c2 a^2 + c3 a^3 of Z[a]/(a^4 + 1).
class CycloInt {
 public:
  constexpr CycloInt() = default;
  constexpr CycloInt(std::int64_t c0) : c_{c0, 0, 0, 0} {}  // NOLINT: integer embedding
  CycloInt(CheckedInt c0) : c_{c0, 0, 0, 0} {}               // NOLINT
  CycloInt(CheckedInt c0, CheckedInt c1, CheckedInt c2, CheckedInt c3) : c_{c0, c1, c2, c3} {}

  /// a^k for any integer k, rewritten into the basis using a^4 = -1.
  static CycloInt a_power(int k) {
    int r = ((k % 8) + 8) % 8;
    std::int64_t sign = 1;
    if (r >= 4) {
      sign = -1;
      r -= 4;
    }
    CycloInt out;
    out.c_[static_cast<std::size_t>(r)] = sign;
    return out;
  }

  [[nodiscard]] CheckedInt coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] const std::array<CheckedInt, 4>& coeffs() const { return c_; }
  [[nodiscard]] bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](CheckedInt v) { return v.is_zero(); });
  }

  friend CycloInt operator+(const CycloInt& a, const CycloInt& b) {
    CycloInt r;
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend CycloInt operator-(const CycloInt& a, const CycloInt& b) {
    CycloInt r;
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    CycloInt r;
    for (std::size_t i = 0; i < 4; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < 4; ++j) {
        if (b.c_[j].is_zero()) continue;
        const CheckedInt p = a.c_[i] * b.c_[j];
        const std::size_t k = i + j;
        if (k < 4) {
          r.c_[k] += p;
        } else {
          r.c_[k - 4] -= p;
        }
      }
    }
    return r;
  }
  CycloInt operator-() const { return CycloInt() - *this; }
  CycloInt& operator+=(const CycloInt& o) { return *this = *this + o; }
  CycloInt& operator-=(const CycloInt& o) { return *this = *this - o; }
  CycloInt& operator*=(const CycloInt& o) { return *this = *this * o; }

  friend bool operator==(const CycloInt&, const CycloInt&) = default;
  friend auto operator<=>(const CycloInt&, const CycloInt&) = default;

  friend std::ostream& operator<<(std::ostream& os, const CycloInt& c) {
    bool first = true;
    for (std::size_t i = 0; i < 4; ++i) {
      const std::int64_t v = c.c_[i].value();
      if (v == 0) continue;
      if (!first) os << (v > 0 ? "+" : "-");
      else if (v < 0) os << "-";
      first = false;
      const std::int64_t av = std::llabs(v);
      if (i == 0 || av != 1) os << av;
      if (i == 1) os << "a";
      if (i >= 2) os << "a^" << i;
    }
    if (first) os << "0";
    return os;
  }

 private:
  std::array<CheckedInt, 4> c_{};
};

template <class C>
class Laurent;

namespace detail {

// Per-coefficient-ring hooks used by rank computation and unit inversion.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<CheckedInt> {
  static std::int64_t content(const CheckedInt& c) { return std::llabs(c.value()); }
  static CheckedInt divide_integer(const CheckedInt& c, std::int64_t g) { return c.value() / g; }
  static bool is_unit(const CheckedInt& c) { return c.value() == 1 || c.value() == -1; }
  static CheckedInt unit_inverse(const CheckedInt& c) {
    if (!is_unit(c)) throw std::domain_error("integer is not a unit");
    return c;
  }
  // Nonzero test of an evaluation mod p: the caller supplies the image of a (unused here).
  static std::uint64_t reduce_mod(const CheckedInt& c, std::uint64_t p, std::uint64_t /*a_image*/) {
    const std::int64_t v = c.value() % static_cast<std::int64_t>(p);
    return v < 0 ? static_cast<std::uint64_t>(v + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(v);
  }
};

template <>
struct CoeffTraits<CycloInt> {
  static std::int64_t content(const CycloInt& c) {
    std::int64_t g = 0;
    for (const auto& v : c.coeffs()) g = std::gcd(g, std::llabs(v.value()));
    return g;
  }
  static CycloInt divide_integer(const CycloInt& c, std::int64_t g) {
    return {c.coeff(0).value() / g, c.coeff(1).value() / g, c.coeff(2).value() / g, c.coeff(3).value() / g};
  }
  // Units recognised here are the monomials +-a^k; these are the only ones the library produces.
  static bool is_unit(const CycloInt& c) {
    int nonzero = 0;
    for (const auto& v : c.coeffs()) {
      if (v.is_zero()) continue;
      if (v.value() != 1 && v.value() != -1) return false;
      ++nonzero;
    }
    return nonzero == 1;
  }
  static CycloInt unit_inverse(const CycloInt& c) {
    if (!is_unit(c)) throw std::domain_error("cyclotomic integer is not a monomial unit");
    for (int k = 0; k < 4; ++k) {
      const std::int64_t v = c.coeff(k).value();
      if (v == 0) continue;
      // (v a^k)^-1 = v a^-k
      return CycloInt::a_power(-k) * CycloInt(v);
    }
    throw std::logic_error("unreachable");
  }
  static std::uint64_t reduce_mod(const CycloInt& c, std::uint64_t p, std::uint64_t a_image);
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t CoeffTraits<CycloInt>::reduce_mod(const CycloInt& c, std::uint64_t p,
                                                      std::uint64_t a_image) {
  std::uint64_t acc = 0;
  std::uint64_t apow = 1;
  for (int k = 0; k < 4; ++k) {
    const std::uint64_t ck = CoeffTraits<CheckedInt>::reduce_mod(c.coeff(k), p, 0);
    acc = (acc + mulmod(ck, apow, p)) % p;
    apow = mulmod(apow, a_image, p);
  }
  return acc;
}

}  // namespace detail

/// Laurent polynomials over a coefficient ring C, canonical: strictly increasing
/// exponents and no zero coefficient.
template <class C>
class Laurent {
 public:
  using Coeff = C;
  using Term = std::pair<int, C>;

  Laurent() = default;
  Laurent(std::int64_t c) : Laurent(C(c), 0) {}  // NOLINT: integer embedding
  Laurent(const C& c, int exponent = 0) {          // NOLINT: coefficient embedding
    if (!c.is_zero()) terms_.emplace_back(exponent, c);
  }

  static Laurent x_power(int k) { return Laurent(C(1), k); }

  /// Builds from arbitrary (exponent, coefficient) terms; merges duplicates and drops zeros.
  static Laurent from_terms(std::vector<Term> terms) {
    Laurent out;
    out.terms_ = std::move(terms);
    out.canonicalize();
    return out;
  }

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] int min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
  [[nodiscard]] int max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

  [[nodiscard]] C coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return C();
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.push_back(*j++);
      } else {
        C s = i->second + j->second;
        if (!s.is_zero()) r.terms_.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Laurent r;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      const Laurent& mono = a.terms_.size() == 1 ? a : b;
      const Laurent& other = a.terms_.size() == 1 ? b : a;
      const auto& [me, mc] = mono.terms_.front();
      r.terms_.reserve(other.terms_.size());
      for (const auto& [e, c] : other.terms_) {
        C p = &other == &a ? c * mc : mc * c;
        if (!p.is_zero()) r.terms_.emplace_back(e + me, std::move(p));
      }
      return r;
    }
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.terms_.emplace_back(ea + eb, ca * cb);
    }
    r.canonicalize();
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  /// Multiplies by x^k.
  [[nodiscard]] Laurent shifted(int k) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
  }

  /// Non-negative integer power; x^-1 powers go through unit_inverse().
  [[nodiscard]] Laurent pow(int k) const {
    if (k < 0) return unit_inverse().pow(-k);
    Laurent result(1);
    Laurent base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  /// Units of C[x, x^-1] recognised here: c x^k with c a unit of C.
  [[nodiscard]] bool is_unit() const {
    return is_monomial() && detail::CoeffTraits<C>::is_unit(terms_.front().second);
  }
  [[nodiscard]] Laurent unit_inverse() const {
    if (!is_unit()) throw std::domain_error("Laurent polynomial is not a unit");
    return Laurent(detail::CoeffTraits<C>::unit_inverse(terms_.front().second), -terms_.front().first);
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;
  friend auto operator<=>(const Laurent& a, const Laurent& b) { return a.terms_ <=> b.terms_; }

  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (e != 0) os << "x^" << e;
    }
    return os;
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& l, const Term& r) { return l.first < r.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

using LaurentInt = Laurent<CheckedInt>;
using CycloLaurent = Laurent<CycloInt>;
/// Two independent formal parameters: outer variable y over inner ring Z[x, x^-1].
using BiLaurent = Laurent<LaurentInt>;

namespace detail {

// Laurent polynomials are themselves usable as coefficients (for BiLaurent).
template <class C>
struct CoeffTraits<Laurent<C>> {
  static std::int64_t content(const Laurent<C>& p) {
    std::int64_t g = 0;
    for (const auto& [e, c] : p.terms()) g = std::gcd(g, CoeffTraits<C>::content(c));
    return g;
  }
  static Laurent<C> divide_integer(const Laurent<C>& p, std::int64_t g) {
    std::vector<typename Laurent<C>::Term> t;
    for (const auto& [e, c] : p.terms()) t.emplace_back(e, CoeffTraits<C>::divide_integer(c, g));
    return Laurent<C>::from_terms(std::move(t));
  }
  static bool is_unit(const Laurent<C>& p) { return p.is_unit(); }
  static Laurent<C> unit_inverse(const Laurent<C>& p) { return p.unit_inverse(); }
};

}  // namespace detail

/// The balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n} with q = x^2.
/// [0] = 0 and [-n] = -[n].
inline LaurentInt quantum_integer(int n) {
  if (n == 0) return {};
  if (n < 0) return -quantum_integer(-n);
  std::vector<LaurentInt::Term> terms;
  for (int k = n - 1; k >= 1 - n; k -= 2) terms.emplace_back(2 * k, CheckedInt(1));
  return LaurentInt::from_terms(std::move(terms));
}

/// q^k = x^{2k}.
template <class R = LaurentInt>
R q_power(int k) {
  return R::x_power(2 * k);
}

/// Ring injection Z[x, x^-1] -> Z[a, x, x^-1]/(a^4 + 1).
inline CycloLaurent embed(const LaurentInt& p) {
  std::vector<CycloLaurent::Term> t;
  t.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) t.emplace_back(e, CycloInt(c));
  return CycloLaurent::from_terms(std::move(t));
}

/// Embeds Z[x, x^-1] as the inner ring of BiLaurent (the outer variable is absent).
inline BiLaurent embed_inner(const LaurentInt& p) { return BiLaurent(p, 0); }

/// The element a^k of CycloLaurent.
inline CycloLaurent a_power(int k) { return CycloLaurent(CycloInt::a_power(k), 0); }

/// Sum of coefficients (evaluation at x = 1) of an integer Laurent polynomial.
inline std::int64_t evaluate_at_one(const LaurentInt& p) {
  CheckedInt s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s.value();
}

/// Parameters of the blob algebra: loop value [2], blobbed-loop value gamma and blob
/// idempotent scalar delta_e.
template <class R = LaurentInt>
struct BlobParams {
  R delta;
  R gamma;
  R delta_e;

  /// Integral form: gamma = q^{m-1} - q^{1-m}, delta_e = q^m - q^{-m}.
  static BlobParams integral(int m) {
    return {quantum_integer(2), q_power(m - 1) - q_power(1 - m), q_power(m) - q_power(-m)};
  }

};

inline BlobParams<CycloLaurent> embed(const BlobParams<LaurentInt>& p) {
  return {embed(p.delta), embed(p.gamma), embed(p.delta_e)};
}

}  // namespace blobrep
