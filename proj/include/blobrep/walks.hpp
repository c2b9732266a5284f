#pragma once

// Walks on the 1-Pascal graph, the envelope order on walk pairs, raising moves and the
// word map from walk pairs to Temperley-Lieb words.
//
// A walk of length n is a sequence in {1,2}^n (1 = step right, 2 = step left) whose
// column profile h(t) never goes negative. Pairs share an endpoint column c.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "blobrep/diagrams.hpp"
#include "blobrep/words.hpp"

namespace blobrep {

class Walk {
 public:
  Walk() = default;
  explicit Walk(std::vector<int> steps) : steps_(std::move(steps)) {
    int h = 0;
    for (int s : steps_) {
      if (s != 1 && s != 2) throw std::invalid_argument("walk steps must be 1 or 2");
      h += s == 1 ? 1 : -1;
      if (h < 0) throw std::invalid_argument("walk leaves the 1-Pascal graph: " + str());
    }
  }
  explicit Walk(const std::string& letters) : Walk(parse(letters)) {}

  [[nodiscard]] int length() const { return static_cast<int>(steps_.size()); }
  [[nodiscard]] const std::vector<int>& steps() const { return steps_; }
  /// 1-based step.
  [[nodiscard]] int step(int pos) const { return steps_.at(static_cast<std::size_t>(pos - 1)); }

  /// h(t) for t = 0..n.
  [[nodiscard]] std::vector<int> profile() const {
    std::vector<int> h{0};
    for (int s : steps_) h.push_back(h.back() + (s == 1 ? 1 : -1));
    return h;
  }
  [[nodiscard]] int endpoint() const {
    int h = 0;
    for (int s : steps_) h += s == 1 ? 1 : -1;
    return h;
  }
  [[nodiscard]] int twos() const { return static_cast<int>(std::count(steps_.begin(), steps_.end(), 2)); }

  /// Row/column index of this walk read as a sequence in {1,2}^n.
  [[nodiscard]] std::uint32_t index() const {
    std::uint32_t idx = 0;
    for (int s : steps_) idx = (idx << 1U) | static_cast<std::uint32_t>(s - 1);
    return idx;
  }

  [[nodiscard]] std::string str() const {
    std::string s;
    for (int v : steps_) s += static_cast<char>('0' + v);
    return s;
  }

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;

 private:
  static std::vector<int> parse(const std::string& letters) {
    std::vector<int> s;
    for (char c : letters) {
      if (c != '1' && c != '2') throw std::invalid_argument("walk letters must be 1 or 2: " + letters);
      s.push_back(c - '0');
    }
    return s;
  }

  std::vector<int> steps_;
};

/// The sequence with the given index is a walk (nonnegative profile).
inline bool is_walk(std::uint32_t index, int n) {
  int h = 0;
  for (int pos = 1; pos <= n; ++pos) {
    h += sequence_letter(index, n, pos) == 1 ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

inline Walk walk_from_index(std::uint32_t index, int n) {
  std::vector<int> s;
  for (int pos = 1; pos <= n; ++pos) s.push_back(sequence_letter(index, n, pos));
  return Walk(std::move(s));
}

struct WalkPair {
  Walk a;
  Walk b;

  WalkPair(Walk left, Walk right) : a(std::move(left)), b(std::move(right)) {
    if (a.length() != b.length() || a.endpoint() != b.endpoint()) {
      throw std::invalid_argument("walk pair must share length and endpoint");
    }
  }

  [[nodiscard]] int n() const { return a.length(); }
  [[nodiscard]] int column() const { return a.endpoint(); }

  friend bool operator==(const WalkPair&, const WalkPair&) = default;
  friend auto operator<=>(const WalkPair&, const WalkPair&) = default;
};

inline std::string to_string(const WalkPair& p) { return "(" + p.a.str() + "," + p.b.str() + ")"; }

/// W_c(n), sorted lexicographically.
inline std::vector<Walk> enumerate_walks(int n, int c) {
  if (n < 0 || c < 0 || c > n || (n - c) % 2 != 0) {
    throw std::invalid_argument("enumerate_walks: need 0 <= c <= n and c = n (mod 2)");
  }
  std::vector<Walk> out;
  std::vector<int> steps;
  auto extend = [&](auto&& self, int h) -> void {
    const int remaining = n - static_cast<int>(steps.size());
    if (remaining == 0) {
      if (h == c) out.emplace_back(steps);
      return;
    }
    if (std::abs(h - c) > remaining) return;
    for (int s : {1, 2}) {
      const int next = h + (s == 1 ? 1 : -1);
      if (next < 0) continue;
      steps.push_back(s);
      self(self, next);
      steps.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

/// W^2(n) ordered by endpoint column, then lexicographically.
inline std::vector<WalkPair> enumerate_pairs(int n) {
  std::vector<WalkPair> out;
  for (int c = n % 2; c <= n; c += 2) {
    const auto walks = enumerate_walks(n, c);
    for (const auto& a : walks) {
      for (const auto& b : walks) out.emplace_back(a, b);
    }
  }
  return out;
}

/// Replace the descent 21 at positions (i, i+1) by 12.
inline Walk raise(const Walk& a, int i) {
  if (i < 1 || i >= a.length() || a.step(i) != 2 || a.step(i + 1) != 1) {
    throw std::invalid_argument("raise: no descent 21 at position " + std::to_string(i) + " of " + a.str());
  }
  std::vector<int> s = a.steps();
  s[static_cast<std::size_t>(i - 1)] = 1;
  s[static_cast<std::size_t>(i)] = 2;
  return Walk(std::move(s));
}

/// Pointwise profile domination h_a <= h_b.
inline bool below(const Walk& a, const Walk& b) {
  const auto ha = a.profile();
  const auto hb = b.profile();
  for (std::size_t t = 0; t < ha.size(); ++t) {
    if (ha[t] > hb[t]) return false;
  }
  return true;
}

/// The envelope order, extended across endpoints by comparing columns.
inline bool leq(const WalkPair& p, const WalkPair& q) {
  if (p.n() != q.n()) throw std::invalid_argument("leq: pairs of different length");
  if (p.column() != q.column()) return p.column() < q.column();
  return below(p.a, q.a) && below(p.b, q.b);
}

/// Lowest walk (12)^k 1^{n-2k} of W_c(n).
inline Walk lowest_walk(int n, int c) {
  if (c < 0 || c > n || (n - c) % 2 != 0) throw std::invalid_argument("lowest_walk: bad endpoint");
  const int k = (n - c) / 2;
  std::vector<int> s;
  for (int j = 0; j < k; ++j) {
    s.push_back(1);
    s.push_back(2);
  }
  s.resize(static_cast<std::size_t>(n), 1);
  return Walk(std::move(s));
}

/// Raising positions leading from `from` up to `to`: at each step the smallest descent
/// whose raise stays below `to`.
inline std::vector<int> raising_chain(const Walk& from, const Walk& to) {
  if (from.length() != to.length() || from.endpoint() != to.endpoint() || !below(from, to)) {
    throw std::invalid_argument("raising_chain: " + from.str() + " is not below " + to.str());
  }
  std::vector<int> chain;
  Walk current = from;
  while (current != to) {
    bool moved = false;
    for (int i = 1; i < current.length(); ++i) {
      if (current.step(i) != 2 || current.step(i + 1) != 1) continue;
      Walk next = raise(current, i);
      if (!below(next, to)) continue;
      chain.push_back(i);
      current = std::move(next);
      moved = true;
      break;
    }
    if (!moved) throw std::logic_error("raising_chain: no admissible descent");
  }
  return chain;
}

/// U_{l_last} ... U_{l_1} U_1 U_3 ... U_{2k-1} U_{r_1} ... U_{r_last}: left raises are
/// prepended, right raises appended, around the word of the lowest pair.
inline GenWord word_from_chains(int n, int c, const std::vector<int>& left, const std::vector<int>& right) {
  GenWord w{{}, IndexConvention::standard, n};
  for (auto it = left.rbegin(); it != left.rend(); ++it) w.letters.push_back(Letter::U(*it));
  const int k = (n - c) / 2;
  for (int j = 0; j < k; ++j) w.letters.push_back(Letter::U(2 * j + 1));
  for (int i : right) w.letters.push_back(Letter::U(i));
  w.validate();
  return w;
}

/// The word map w: W^2(n) -> T_n via the canonical raising chains.
inline GenWord pair_word(const WalkPair& p) {
  const Walk base = lowest_walk(p.n(), p.column());
  return word_from_chains(p.n(), p.column(), raising_chain(base, p.a), raising_chain(base, p.b));
}

/// Topological order of leq; among available pairs the smallest (c, a, b) goes first.
inline std::vector<WalkPair> linear_extension(std::vector<WalkPair> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const WalkPair& l, const WalkPair& r) {
    if (l.column() != r.column()) return l.column() < r.column();
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  });
  const std::size_t count = pairs.size();
  std::vector<int> indegree(count, 0);
  std::vector<std::vector<std::size_t>> successors(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && leq(pairs[i], pairs[j])) {
        successors[i].push_back(j);
        ++indegree[j];
      }
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < count; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<WalkPair> out;
  out.reserve(count);
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    out.push_back(pairs[i]);
    for (std::size_t j : successors[i]) {
      if (--indegree[j] == 0) ready.push(j);
    }
  }
  if (out.size() != count) throw std::logic_error("linear_extension: relation has a cycle");
  return out;
}

/// Covering relations p < q of W^2(n), as index pairs into enumerate_pairs(n).
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const std::vector<WalkPair>& pairs) {
  const std::size_t count = pairs.size();
  std::vector<std::vector<bool>> less(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) less[i][j] = i != j && leq(pairs[i], pairs[j]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (!less[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < count && covered; ++k) covered = !(less[i][k] && less[k][j]);
      if (covered) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace blobrep
