#pragma once

// Planar (n,m) diagrams: Temperley-Lieb pairings and their blob-decorated versions.
//
// Node numbering: 0..n-1 are the northern nodes t1..tn, n..n+m-1 the southern nodes
// b1..bm. A diagram is stored as its fixed-point-free involution on nodes, which is
// already canonical, so equality and ordering are structural.
//
// Boundary order: t1,...,tn,bm,...,b1 read clockwise starting after the western edge.
// A pairing is planar iff no two chords interleave in this order; a chord is exposed
// iff no other chord covers it in the linear version of this order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blobrep/rings.hpp"

namespace blobrep {

enum class Side { top, bottom };

/// A boundary node, 1-based within its side.
struct Node {
  Side side;
  int index;
  friend bool operator==(const Node&, const Node&) = default;
};

inline std::string to_string(const Node& node) {
  return (node.side == Side::top ? "t" : "b") + std::to_string(node.index);
}

/// Which integers label the generators U_i.
///   standard: 1..n-1 acting on n strands
///   shifted:  -n+1..n-1 acting on 2n strands, U_i at absolute position n+i
enum class IndexConvention { standard, shifted };

inline int strand_count(int n, IndexConvention convention) {
  return convention == IndexConvention::standard ? n : 2 * n;
}

inline bool index_in_range(int j, int n, IndexConvention convention) {
  return convention == IndexConvention::standard ? (j >= 1 && j <= n - 1) : (j >= -n + 1 && j <= n - 1);
}

/// Absolute (1-based, standard) position of generator index j.
inline int absolute_position(int j, int n, IndexConvention convention) {
  if (!index_in_range(j, n, convention)) {
    throw std::out_of_range("generator index " + std::to_string(j) + " out of range for n=" + std::to_string(n));
  }
  return convention == IndexConvention::standard ? j : n + j;
}

class Pairing {
 public:
  /// Validates that `partner` is a fixed-point-free planar involution on n+m nodes.
  Pairing(int north, int south, std::vector<int> partner)
      : n_(north), m_(south), partner_(std::move(partner)) {
    validate();
  }

  static Pairing identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      p[static_cast<std::size_t>(i)] = n + i;
      p[static_cast<std::size_t>(n + i)] = i;
    }
    return {n, n, std::move(p)};
  }

  static Pairing from_pairs(int north, int south, const std::vector<std::pair<Node, Node>>& pairs) {
    std::vector<int> p(static_cast<std::size_t>(north + south), -1);
    auto id = [&](const Node& node) {
      const int limit = node.side == Side::top ? north : south;
      if (node.index < 1 || node.index > limit) throw std::invalid_argument("node " + to_string(node) + " out of range");
      return node.side == Side::top ? node.index - 1 : north + node.index - 1;
    };
    for (const auto& [a, b] : pairs) {
      const int i = id(a);
      const int j = id(b);
      if (p[static_cast<std::size_t>(i)] != -1 || p[static_cast<std::size_t>(j)] != -1) {
        throw std::invalid_argument("node listed in more than one pair");
      }
      p[static_cast<std::size_t>(i)] = j;
      p[static_cast<std::size_t>(j)] = i;
    }
    return {north, south, std::move(p)};
  }

  [[nodiscard]] int north() const { return n_; }
  [[nodiscard]] int south() const { return m_; }
  [[nodiscard]] int node_count() const { return n_ + m_; }
  [[nodiscard]] int partner(int node) const { return partner_.at(static_cast<std::size_t>(node)); }
  [[nodiscard]] const std::vector<int>& involution() const { return partner_; }
  [[nodiscard]] bool is_top(int node) const { return node < n_; }

  [[nodiscard]] Node node(int id) const {
    return id < n_ ? Node{Side::top, id + 1} : Node{Side::bottom, id - n_ + 1};
  }
  [[nodiscard]] int id(const Node& node) const {
    return node.side == Side::top ? node.index - 1 : n_ + node.index - 1;
  }

  /// Position in the boundary order t1..tn, bm..b1.
  [[nodiscard]] int boundary_position(int node) const {
    return node < n_ ? node : n_ + m_ - 1 - (node - n_);
  }

  /// Chords as (smaller node id, larger node id), sorted.
  [[nodiscard]] std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < node_count(); ++i) {
      if (i < partner(i)) out.emplace_back(i, partner(i));
    }
    return out;
  }

  /// Number of through lines (i j').
  [[nodiscard]] int propagating_number() const {
    int count = 0;
    for (int i = 0; i < n_; ++i) count += partner(i) >= n_ ? 1 : 0;
    return count;
  }

  /// True iff the chord through `node` is covered by no other chord in the linear
  /// boundary order, i.e. it can be slid to the western edge.
  [[nodiscard]] bool is_exposed(int node) const {
    int lo = boundary_position(node);
    int hi = boundary_position(partner(node));
    if (lo > hi) std::swap(lo, hi);
    for (int k = 0; k < node_count(); ++k) {
      int a = boundary_position(k);
      int b = boundary_position(partner(k));
      if (a > b) continue;
      if (a < lo && hi < b) return false;
    }
    return true;
  }

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  void validate() const {
    if (n_ < 0 || m_ < 0) throw std::invalid_argument("negative boundary size");
    if ((n_ + m_) % 2 != 0) throw std::invalid_argument("n + m must be even");
    if (static_cast<int>(partner_.size()) != n_ + m_) throw std::invalid_argument("involution has wrong length");
    for (int i = 0; i < n_ + m_; ++i) {
      const int p = partner_[static_cast<std::size_t>(i)];
      if (p < 0 || p >= n_ + m_ || p == i || partner_[static_cast<std::size_t>(p)] != i) {
        throw std::invalid_argument("not a fixed-point-free involution");
      }
    }
    // Bracket matching along the boundary order.
    std::vector<int> by_position(partner_.size());
    for (int i = 0; i < n_ + m_; ++i) by_position[static_cast<std::size_t>(boundary_position(i))] = i;
    std::vector<int> stack;
    for (int node : by_position) {
      const int other = partner(node);
      if (boundary_position(other) > boundary_position(node)) {
        stack.push_back(node);
      } else {
        if (stack.empty() || stack.back() != other) throw std::invalid_argument("pairing is not planar");
        stack.pop_back();
      }
    }
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<int> partner_;
};

/// A Temperley-Lieb diagram with blobs on some exposed chords (at most one each).
class BlobPairing {
 public:
  explicit BlobPairing(Pairing base) : base_(std::move(base)) {}

  /// `blobbed` lists one endpoint (any) of each decorated chord.
  BlobPairing(Pairing base, const std::vector<int>& blobbed) : base_(std::move(base)) {
    for (int node : blobbed) {
      if (node < 0 || node >= base_.node_count()) throw std::invalid_argument("blob on nonexistent node");
      const int key = std::min(node, base_.partner(node));
      if (std::find(blobs_.begin(), blobs_.end(), key) != blobs_.end()) {
        throw std::invalid_argument("more than one blob on a line");
      }
      if (!base_.is_exposed(key)) throw std::invalid_argument("blob on a line that is not exposed");
      blobs_.push_back(key);
    }
    std::sort(blobs_.begin(), blobs_.end());
  }

  [[nodiscard]] const Pairing& base() const { return base_; }
  [[nodiscard]] int north() const { return base_.north(); }
  [[nodiscard]] int south() const { return base_.south(); }
  /// Smaller endpoint of each blobbed chord, sorted.
  [[nodiscard]] const std::vector<int>& blobs() const { return blobs_; }
  [[nodiscard]] bool has_blob(int node) const {
    const int key = std::min(node, base_.partner(node));
    return std::binary_search(blobs_.begin(), blobs_.end(), key);
  }
  [[nodiscard]] int blob_count() const { return static_cast<int>(blobs_.size()); }

  friend bool operator==(const BlobPairing&, const BlobPairing&) = default;
  friend auto operator<=>(const BlobPairing&, const BlobPairing&) = default;

 private:
  Pairing base_;
  std::vector<int> blobs_;
};

template <class Diagram>
struct CompositionResult {
  Diagram diagram;
  int plain_loops = 0;
  int blob_loops = 0;
  int blob_merges = 0;
};

namespace detail {

struct TraceResult {
  std::vector<int> partner;
  std::vector<int> blobbed;  // result nodes whose chord carries a blob
  int plain_loops = 0;
  int blob_loops = 0;
  int blob_merges = 0;
};

// Follows every chain of the concatenation D|E through the junction nodes.
// Blob flags are per node of each diagram (empty = no blobs).
inline TraceResult trace_concatenation(const Pairing& d, const std::vector<bool>& d_blob, const Pairing& e,
                                       const std::vector<bool>& e_blob) {
  if (d.south() != e.north()) {
    throw std::invalid_argument("composition size mismatch: " + std::to_string(d.south()) + " vs " +
                                std::to_string(e.north()));
  }
  const int n = d.north();
  const int m = d.south();
  const int l = e.south();
  auto blob_on = [](const std::vector<bool>& flags, int node) {
    return !flags.empty() && flags[static_cast<std::size_t>(node)];
  };

  TraceResult out;
  out.partner.assign(static_cast<std::size_t>(n + l), -1);
  std::vector<bool> junction_seen(static_cast<std::size_t>(m), false);

  // Walks from an outer node until the chain exits at another outer node.
  // Returns (result node, blob count).
  auto walk_open = [&](bool in_d, int node) {
    int blobs = 0;
    for (;;) {
      if (in_d) {
        const int p = d.partner(node);
        blobs += blob_on(d_blob, node) ? 1 : 0;
        if (p < n) return std::pair{p, blobs};
        const int k = p - n;
        junction_seen[static_cast<std::size_t>(k)] = true;
        in_d = false;
        node = k;
      } else {
        const int p = e.partner(node);
        blobs += blob_on(e_blob, node) ? 1 : 0;
        if (p >= m) return std::pair{n + (p - m), blobs};
        junction_seen[static_cast<std::size_t>(p)] = true;
        in_d = true;
        node = n + p;
      }
    }
  };

  auto settle = [&](int a, int b, int blobs) {
    out.partner[static_cast<std::size_t>(a)] = b;
    out.partner[static_cast<std::size_t>(b)] = a;
    if (blobs > 0) {
      out.blobbed.push_back(std::min(a, b));
      out.blob_merges += blobs - 1;
    }
  };

  for (int i = 0; i < n; ++i) {
    if (out.partner[static_cast<std::size_t>(i)] != -1) continue;
    const auto [end, blobs] = walk_open(true, i);
    settle(i, end, blobs);
  }
  for (int j = 0; j < l; ++j) {
    if (out.partner[static_cast<std::size_t>(n + j)] != -1) continue;
    const auto [end, blobs] = walk_open(false, m + j);
    settle(n + j, end, blobs);
  }

  // Remaining junctions lie on closed loops.
  for (int k = 0; k < m; ++k) {
    if (junction_seen[static_cast<std::size_t>(k)]) continue;
    int blobs = 0;
    int junction = k;
    do {
      junction_seen[static_cast<std::size_t>(junction)] = true;
      // down through E from junction, then back up through D
      blobs += blob_on(e_blob, junction) ? 1 : 0;
      const int via_e = e.partner(junction);
      junction_seen[static_cast<std::size_t>(via_e)] = true;
      blobs += blob_on(d_blob, n + via_e) ? 1 : 0;
      junction = d.partner(n + via_e) - n;
    } while (junction != k);
    if (blobs == 0) {
      ++out.plain_loops;
    } else {
      ++out.blob_loops;
      out.blob_merges += blobs - 1;
    }
  }
  return out;
}

inline std::vector<bool> blob_flags(const BlobPairing& d) {
  std::vector<bool> flags(static_cast<std::size_t>(d.base().node_count()), false);
  for (int key : d.blobs()) {
    flags[static_cast<std::size_t>(key)] = true;
    flags[static_cast<std::size_t>(d.base().partner(key))] = true;
  }
  return flags;
}

}  // namespace detail

/// D∘E with the number of discarded closed loops.
inline CompositionResult<Pairing> compose_tl(const Pairing& d, const Pairing& e) {
  auto t = detail::trace_concatenation(d, {}, e, {});
  return {Pairing(d.north(), e.south(), std::move(t.partner)), t.plain_loops, 0, 0};
}

/// Blob composition. Each open chain with b >= 1 blobs keeps one blob and contributes
/// delta_e^{b-1}; each closed loop contributes delta (b = 0) or gamma * delta_e^{b-1}.
template <class R>
std::pair<CompositionResult<BlobPairing>, R> compose_blob(const BlobPairing& d, const BlobPairing& e,
                                                          const BlobParams<R>& params) {
  auto t = detail::trace_concatenation(d.base(), detail::blob_flags(d), e.base(), detail::blob_flags(e));
  Pairing base(d.north(), e.south(), std::move(t.partner));
  CompositionResult<BlobPairing> result{BlobPairing(std::move(base), t.blobbed), t.plain_loops, t.blob_loops,
                                        t.blob_merges};
  R scalar = params.delta.pow(t.plain_loops) * params.gamma.pow(t.blob_loops) * params.delta_e.pow(t.blob_merges);
  return {std::move(result), std::move(scalar)};
}

/// Loop and blob bookkeeping only (no parameter ring needed).
inline CompositionResult<BlobPairing> compose_blob_counts(const BlobPairing& d, const BlobPairing& e) {
  auto t = detail::trace_concatenation(d.base(), detail::blob_flags(d), e.base(), detail::blob_flags(e));
  Pairing base(d.north(), e.south(), std::move(t.partner));
  return {BlobPairing(std::move(base), t.blobbed), t.plain_loops, t.blob_loops, t.blob_merges};
}

inline int propagating_number(const Pairing& d) { return d.propagating_number(); }

/// The decomposition D = D^∪ ∘ D_∩ through ha(D) strands: D^∪ keeps the northern arcs,
/// D_∩ the southern ones; the k-th through line (left to right) passes strand k.
inline std::pair<Pairing, Pairing> cut(const Pairing& d) {
  const int n = d.north();
  const int m = d.south();
  const int l = d.propagating_number();
  std::vector<int> upper(static_cast<std::size_t>(n + l), -1);
  std::vector<int> lower(static_cast<std::size_t>(l + m), -1);
  int strand = 0;
  for (int i = 0; i < n; ++i) {
    const int p = d.partner(i);
    if (p < n) {
      upper[static_cast<std::size_t>(i)] = p;
    } else {
      upper[static_cast<std::size_t>(i)] = n + strand;
      upper[static_cast<std::size_t>(n + strand)] = i;
      lower[static_cast<std::size_t>(strand)] = l + (p - n);
      lower[static_cast<std::size_t>(l + (p - n))] = strand;
      ++strand;
    }
  }
  for (int j = 0; j < m; ++j) {
    const int p = d.partner(n + j);
    if (p >= n) lower[static_cast<std::size_t>(l + j)] = l + (p - n);
  }
  return {Pairing(n, l, std::move(upper)), Pairing(l, m, std::move(lower))};
}

namespace detail {

// Non-crossing perfect matchings of positions [lo, hi) appended into `match`.
inline void noncrossing_matchings(int lo, int hi, std::vector<int>& match,
                                  const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (int k = lo + 1; k < hi; k += 2) {
    match[static_cast<std::size_t>(lo)] = k;
    match[static_cast<std::size_t>(k)] = lo;
    noncrossing_matchings(lo + 1, k, match, [&] { noncrossing_matchings(k + 1, hi, match, emit); });
  }
}

}  // namespace detail

/// All of D(n,m), sorted.
inline std::vector<Pairing> enumerate_tl(int n, int m) {
  if (n < 0 || m < 0 || (n + m) % 2 != 0) throw std::invalid_argument("enumerate_tl: n + m must be even");
  const int total = n + m;
  std::vector<int> by_position(static_cast<std::size_t>(total));
  std::vector<Pairing> out;
  auto node_at = [&](int pos) { return pos < n ? pos : n + (total - 1 - pos); };
  detail::noncrossing_matchings(0, total, by_position, [&] {
    std::vector<int> partner(static_cast<std::size_t>(total));
    for (int pos = 0; pos < total; ++pos) {
      partner[static_cast<std::size_t>(node_at(pos))] = node_at(by_position[static_cast<std::size_t>(pos)]);
    }
    out.emplace_back(n, m, std::move(partner));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// All of D^b(n,n): every TL diagram with every subset of its exposed chords blobbed.
inline std::vector<BlobPairing> enumerate_blob(int n) {
  std::vector<BlobPairing> out;
  for (const Pairing& d : enumerate_tl(n, n)) {
    std::vector<int> exposed;
    for (const auto& [a, b] : d.pairs()) {
      if (d.is_exposed(a)) exposed.push_back(a);
    }
    const std::size_t subsets = std::size_t{1} << exposed.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<int> chosen;
      for (std::size_t k = 0; k < exposed.size(); ++k) {
        if (mask & (std::size_t{1} << k)) chosen.push_back(exposed[k]);
      }
      out.emplace_back(d, chosen);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Pairing identity(int n) { return Pairing::identity(n); }

/// U_j: cup at (j, j+1), cap at (j', (j+1)'), through lines elsewhere.
inline Pairing generator_u(int j, int n, IndexConvention convention = IndexConvention::standard) {
  const int strands = strand_count(n, convention);
  const int pos = absolute_position(j, n, convention);
  std::vector<int> p = Pairing::identity(strands).involution();
  const int a = pos - 1;
  const int b = pos;
  p[static_cast<std::size_t>(a)] = b;
  p[static_cast<std::size_t>(b)] = a;
  p[static_cast<std::size_t>(strands + a)] = strands + b;
  p[static_cast<std::size_t>(strands + b)] = strands + a;
  return {strands, strands, std::move(p)};
}

/// The identity with a blob on the line (1, 1').
inline BlobPairing blob_e(int n) { return BlobPairing(Pairing::identity(n), {0}); }

/// Left-right mirror image: t_i <-> t_{n+1-i}, b_j <-> b_{m+1-j}.
inline Pairing reflect(const Pairing& d) {
  const int n = d.north();
  const int m = d.south();
  auto mirror = [&](int node) { return node < n ? n - 1 - node : n + (m - 1 - (node - n)); };
  std::vector<int> p(static_cast<std::size_t>(n + m));
  for (int i = 0; i < n + m; ++i) p[static_cast<std::size_t>(mirror(i))] = mirror(d.partner(i));
  return {n, m, std::move(p)};
}

}  // namespace blobrep

template <>
struct std::hash<blobrep::Pairing> {
  std::size_t operator()(const blobrep::Pairing& d) const noexcept {
    std::size_t h = static_cast<std::size_t>(d.north()) * 1315423911U + static_cast<std::size_t>(d.south());
    for (int v : d.involution()) h = h * 1000003U ^ static_cast<std::size_t>(v);
    return h;
  }
};

template <>
struct std::hash<blobrep::BlobPairing> {
  std::size_t operator()(const blobrep::BlobPairing& d) const noexcept {
    std::size_t h = std::hash<blobrep::Pairing>{}(d.base());
    for (int v : d.blobs()) h = h * 31U ^ static_cast<std::size_t>(v + 7);
    return h;
  }
};
