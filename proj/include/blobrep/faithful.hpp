#pragma once

// Verification engine: triangularity of the word-map images, rank certificates for the
// Temperley-Lieb tensor representation and for mirror representations of the blob
// algebra, and structure-constant checks of representations on a diagram basis.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blobrep/diagrams.hpp"
#include "blobrep/parallel.hpp"
#include "blobrep/rank.hpp"
#include "blobrep/rings.hpp"
#include "blobrep/tensorrep.hpp"
#include "blobrep/walks.hpp"
#include "blobrep/words.hpp"

namespace blobrep {

inline constexpr const char* kToolVersion = "blobrep 1.0.0";

struct TriangularityFailure {
  WalkPair pair;
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  int clause = 0;  // 1: diagonal entry vanishes, 2: nonzero entry outside the order ideal
};

struct TriangularityReport {
  int n = 0;
  std::vector<TriangularityFailure> failures;
  /// Nonzero entries whose row or column is not a walk. Recorded, not judged.
  std::size_t non_walk_entries = 0;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// R(D) of the (loop-free) diagram of pair_word(p).
inline SparseMatrix<LaurentInt> word_matrix(const WalkPair& p) {
  const auto ev = eval_word(pair_word(p));
  if (!ev.loop_free()) throw std::logic_error("pair word " + to_string(p) + " is not loop-free");
  return r_matrix(ev.diagram.base());
}

/// For every pair p = (a,b): R(w(p))_{ab} != 0, and every nonzero entry at walk
/// positions (u,v) satisfies (u,v) <= (a,b).
inline TriangularityReport triangularity_report(int n, int jobs = 1) {
  const auto pairs = enumerate_pairs(n);
  std::vector<TriangularityReport> partial(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    const WalkPair& p = pairs[k];
    auto& out = partial[k];
    const auto matrix = word_matrix(p);
    if (matrix.at(p.a.index(), p.b.index()).is_zero()) out.failures.push_back({p, p.a.index(), p.b.index(), 1});
    for (std::uint32_t u = 0; u < matrix.rows(); ++u) {
      for (const auto& [v, value] : matrix.row(u)) {
        if (!is_walk(u, n) || !is_walk(v, n)) {
          ++out.non_walk_entries;
          continue;
        }
        const Walk wu = walk_from_index(u, n);
        const Walk wv = walk_from_index(v, n);
        if (wu.endpoint() != wv.endpoint() || !leq(WalkPair(wu, wv), p)) out.failures.push_back({p, u, v, 2});
      }
    }
  });
  TriangularityReport report{n, {}, 0};
  for (auto& r : partial) {
    report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
    report.non_walk_entries += r.non_walk_entries;
  }
  return report;
}

struct MaskCheck {
  std::string name;
  bool passed = false;
};

struct FaithfulnessCertificate {
  int n = 0;
  std::size_t basis_size = 0;
  std::size_t rank = 0;
  std::string method;
  std::vector<MaskCheck> mask_checks;
  std::uint64_t seed = 0;

  [[nodiscard]] bool masks_ok() const {
    return std::all_of(mask_checks.begin(), mask_checks.end(), [](const MaskCheck& c) { return c.passed; });
  }
  [[nodiscard]] bool valid() const { return rank == basis_size && basis_size > 0 && masks_ok(); }
};

inline constexpr int kScreenTrials = 5;

/// Modular screen then unconditional exact elimination. Only the exact rank is returned.
template <class C>
std::size_t screened_rank(const std::vector<SparseVector<Laurent<C>>>& vectors, std::uint64_t seed) {
  const std::size_t lower = rank_modular(vectors, kScreenTrials, seed);
  const std::size_t exact = rank_exact(vectors);
  if (lower > exact) throw std::logic_error("modular rank exceeds exact rank");
  return exact;
}

/// Rank of {R(w(p)) : p in W^2(n)} against |D(n,n)|.
inline FaithfulnessCertificate verify_tl_faithful(int n, std::uint64_t seed = 0x5eedULL, int jobs = 1) {
  const auto pairs = enumerate_pairs(n);
  std::vector<SparseVector<LaurentInt>> vectors(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t k) { vectors[k] = flatten(word_matrix(pairs[k])); });
  FaithfulnessCertificate cert;
  cert.n = n;
  cert.seed = seed;
  cert.basis_size = enumerate_tl(n, n).size();
  if (pairs.size() != cert.basis_size) throw std::logic_error("|W^2(n)| differs from |D(n,n)|");
  cert.rank = screened_rank(vectors, seed);
  cert.method = "modular-screened-then-exact";
  return cert;
}

/// Values used to overlay nonzero entries: 1, x, x^-1, 2, 3, x^2.
inline std::vector<LaurentInt> default_overlay_menu() {
  return {LaurentInt(1), LaurentInt::x_power(1), LaurentInt::x_power(-1), LaurentInt(2), LaurentInt(3),
          LaurentInt::x_power(2)};
}

struct MaskIndependenceResult {
  int n = 0;
  std::size_t basis_size = 0;
  std::vector<std::size_t> trial_ranks;

  [[nodiscard]] bool ok() const {
    return !trial_ranks.empty() &&
           std::all_of(trial_ranks.begin(), trial_ranks.end(), [&](std::size_t r) { return r == basis_size; });
  }
};

/// Replaces every nonzero entry of every R(w(p)) by an independent draw from `menu`
/// and checks that the overlaid family keeps full rank, once per trial.
inline MaskIndependenceResult verify_mask_independence(int n, int trials, std::uint64_t seed,
                                                       const std::vector<LaurentInt>& menu = default_overlay_menu()) {
  if (menu.empty() || std::any_of(menu.begin(), menu.end(), [](const LaurentInt& v) { return v.is_zero(); })) {
    throw std::invalid_argument("overlay menu must contain nonzero elements only");
  }
  const auto pairs = enumerate_pairs(n);
  std::vector<SparseMatrix<LaurentInt>> matrices;
  for (const auto& p : pairs) matrices.push_back(word_matrix(p));
  MaskIndependenceResult result{n, pairs.size(), {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, menu.size() - 1);
  for (int t = 0; t < trials; ++t) {
    std::vector<SparseVector<LaurentInt>> vectors;
    for (const auto& m : matrices) {
      auto v = flatten(m);
      for (auto& [i, value] : v) value = menu[pick(rng)];
      vectors.push_back(std::move(v));
    }
    result.trial_ranks.push_back(rank_exact(vectors));
  }
  return result;
}

/// Certifies a mirror representation of b_n on 2n factors. `factored_u[i-1]` holds the
/// factors (X_i, Y_i) of the image of U_i. Mask checks: e ~ R(U_0), X_i ~ R(U_{-i}),
/// Y_i ~ R(U_i) (shifted indices in T_{2n}); then rank of {rho(w) : w in B_n}.
template <class R>
FaithfulnessCertificate certify_mirror(const SparseMatrix<R>& e_matrix,
                                       const std::vector<std::pair<SparseMatrix<R>, SparseMatrix<R>>>& factored_u,
                                       int n, const BasisWordTable& basis, std::uint64_t seed = 0x5eedULL) {
  const int factors = 2 * n;
  auto shape_ok = [&](const SparseMatrix<R>& a) { return a.rows_log2() == factors && a.cols_log2() == factors; };
  if (!shape_ok(e_matrix)) throw std::invalid_argument("certify_mirror: e image has the wrong dimension");
  if (static_cast<int>(factored_u.size()) != n - 1) throw std::invalid_argument("certify_mirror: missing U factors");
  FaithfulnessCertificate cert;
  cert.n = n;
  cert.seed = seed;
  cert.basis_size = central_binomial(n);
  auto shifted_mask = [&](int j) { return mask(r_matrix(generator_u(j, n, IndexConvention::shifted))); };
  cert.mask_checks.push_back({"e ~ R(U_0)", mask_eq(mask(e_matrix), shifted_mask(0))});
  Representation<R> rep;
  rep.factors = factors;
  rep.e = e_matrix;
  for (int i = 1; i <= n - 1; ++i) {
    const auto& [x, y] = factored_u[static_cast<std::size_t>(i - 1)];
    if (!shape_ok(x) || !shape_ok(y)) throw std::invalid_argument("certify_mirror: U factor has the wrong dimension");
    cert.mask_checks.push_back({"X_" + std::to_string(i) + " ~ R(U_-" + std::to_string(i) + ")",
                                mask_eq(mask(x), shifted_mask(-i))});
    cert.mask_checks.push_back({"Y_" + std::to_string(i) + " ~ R(U_" + std::to_string(i) + ")",
                                mask_eq(mask(y), shifted_mask(i))});
    rep.u.emplace(i, x * y);
  }
  cert.method = "modular-screened-then-exact";
  if (!cert.masks_ok()) {
    cert.method = "not-run";
    return cert;
  }
  std::vector<SparseVector<R>> vectors;
  for (const auto& [diagram, word] : basis) vectors.push_back(flatten(evaluate_in(rep, word)));
  cert.rank = screened_rank(vectors, seed);
  return cert;
}

/// Weaker check for unfactored U images: rho(U_i) ~ R(U_{-i} U_i).
template <class R>
FaithfulnessCertificate certify_mirror_unfactored(const SparseMatrix<R>& e_matrix,
                                                  const std::vector<SparseMatrix<R>>& u_images, int n,
                                                  const BasisWordTable& basis, std::uint64_t seed = 0x5eedULL) {
  const int factors = 2 * n;
  if (e_matrix.rows_log2() != factors || e_matrix.cols_log2() != factors) {
    throw std::invalid_argument("certify_mirror: e image has the wrong dimension");
  }
  if (static_cast<int>(u_images.size()) != n - 1) throw std::invalid_argument("certify_mirror: missing U images");
  FaithfulnessCertificate cert;
  cert.n = n;
  cert.seed = seed;
  cert.basis_size = central_binomial(n);
  cert.mask_checks.push_back(
      {"e ~ R(U_0)", mask_eq(mask(e_matrix), mask(r_matrix(generator_u(0, n, IndexConvention::shifted))))});
  Representation<R> rep;
  rep.factors = factors;
  rep.e = e_matrix;
  for (int i = 1; i <= n - 1; ++i) {
    const auto folded = eval_word(GenWord{{Letter::U(-i), Letter::U(i)}, IndexConvention::shifted, n});
    cert.mask_checks.push_back({"U_" + std::to_string(i) + " ~ R(U_-" + std::to_string(i) + " U_" +
                                    std::to_string(i) + ") [unfactored]",
                                mask_eq(mask(u_images[static_cast<std::size_t>(i - 1)]),
                                        mask(r_matrix(folded.diagram.base())))});
    rep.u.emplace(i, u_images[static_cast<std::size_t>(i - 1)]);
  }
  cert.method = "unfactored-weaker;modular-screened-then-exact";
  if (!cert.masks_ok()) {
    cert.method = "unfactored-weaker;not-run";
    return cert;
  }
  std::vector<SparseVector<R>> vectors;
  for (const auto& [diagram, word] : basis) vectors.push_back(flatten(evaluate_in(rep, word)));
  cert.rank = screened_rank(vectors, seed);
  return cert;
}

/// Basis words for T_n (blob-free diagrams) from the word map on walk pairs.
inline BasisWordTable tl_basis_words(int n) {
  BasisWordTable table;
  for (const auto& p : enumerate_pairs(n)) {
    const auto word = pair_word(p);
    table.emplace(eval_word(word).diagram, word);
  }
  return table;
}

struct PairResidual {
  BlobPairing left;
  BlobPairing right;
  std::size_t residual_nonzeros = 0;
};

template <class R>
struct StructureReport {
  int n = 0;
  std::size_t pairs_checked = 0;
  /// Failing pairs with the representation as given.
  std::vector<PairResidual> residuals;
  /// Failing pairs after e -> -e (empty when not attempted).
  std::vector<PairResidual> residuals_negated_e;
  /// +1: exact as given; -1: exact after e -> -e; 0: neither.
  int normalization = 0;
  std::optional<R> empirical_delta_e;
  std::optional<R> empirical_gamma;
  std::optional<R> empirical_delta;

  [[nodiscard]] bool ok() const { return normalization != 0; }
};

namespace detail {

// Scalar lambda with a * b == lambda * b, read off at a unit entry of b.
template <class R>
std::optional<R> proportionality(const SparseMatrix<R>& a, const SparseMatrix<R>& b) {
  for (std::uint32_t r = 0; r < b.rows(); ++r) {
    for (const auto& [c, v] : b.row(r)) {
      if (!v.is_unit()) continue;
      R lambda = a.at(r, c) * v.unit_inverse();
      if (a == lambda * b) return lambda;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline int e_count(const GenWord& w) {
  return static_cast<int>(std::count_if(w.letters.begin(), w.letters.end(),
                                        [](const Letter& l) { return l.kind == Letter::Kind::e; }));
}

}  // namespace detail

/// For all basis diagrams D, D': rho(w_D) rho(w_D') = scalar(D, D') rho(w_{D∘D'}) with
/// scalar = delta^plain gamma^blob_loops delta_e^merges. Tries the representation as
/// given and, failing that, with e -> -e.
template <class R>
StructureReport<R> verify_blob_representation(const Representation<R>& rep, int n, const BlobParams<R>& params,
                                               const BasisWordTable& basis, int jobs = 1) {
  StructureReport<R> report;
  report.n = n;
  std::vector<BlobPairing> diagrams;
  std::vector<SparseMatrix<R>> images;
  std::vector<int> parity;
  for (const auto& [d, w] : basis) {
    diagrams.push_back(d);
    images.push_back(evaluate_in(rep, w));
    parity.push_back(detail::e_count(w) % 2);
  }
  std::map<BlobPairing, std::size_t> position;
  for (std::size_t i = 0; i < diagrams.size(); ++i) position.emplace(diagrams[i], i);

  struct Product {
    std::size_t target;
    R scalar;
  };
  const std::size_t count = diagrams.size();
  std::vector<Product> products(count * count);
  parallel_for(count * count, jobs, [&](std::size_t k) {
    const auto [res, scalar] = compose_blob(diagrams[k / count], diagrams[k % count], params);
    products[k] = {position.at(res.diagram), scalar};
  });

  auto sweep = [&](int sign) {
    std::vector<std::size_t> nonzeros(count * count, 0);
    parallel_for(count * count, jobs, [&](std::size_t k) {
      const std::size_t i = k / count;
      const std::size_t j = k % count;
      const auto& prod = products[k];
      const int lhs_sign = (sign == -1 && (parity[i] + parity[j]) % 2 == 1) ? -1 : 1;
      const int rhs_sign = (sign == -1 && parity[prod.target] == 1) ? -1 : 1;
      const auto residual =
          R(lhs_sign) * (images[i] * images[j]) - (R(rhs_sign) * prod.scalar) * images[prod.target];
      nonzeros[k] = residual.nonzeros();
    });
    std::vector<PairResidual> failing;
    for (std::size_t k = 0; k < count * count; ++k) {
      if (nonzeros[k] != 0) failing.push_back({diagrams[k / count], diagrams[k % count], nonzeros[k]});
    }
    return failing;
  };

  report.pairs_checked = count * count;
  report.residuals = sweep(1);
  if (report.residuals.empty()) {
    report.normalization = 1;
  } else if (rep.e) {
    report.residuals_negated_e = sweep(-1);
    if (report.residuals_negated_e.empty()) report.normalization = -1;
  }

  if (rep.e) report.empirical_delta_e = detail::proportionality(*rep.e * *rep.e, *rep.e);
  auto u1 = rep.u.find(1);
  if (u1 != rep.u.end()) {
    report.empirical_delta = detail::proportionality(u1->second * u1->second, u1->second);
    if (rep.e) report.empirical_gamma = detail::proportionality(u1->second * *rep.e * u1->second, u1->second);
  }
  return report;
}

}  // namespace blobrep
