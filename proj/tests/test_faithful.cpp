#include <gtest/gtest.h>

#include "blobrep/faithful.hpp"
#include "blobrep/json_io.hpp"
#include "oracles.hpp"

using namespace blobrep;

namespace {

std::vector<std::pair<SparseMatrix<CycloLaurent>, SparseMatrix<CycloLaurent>>> factors_of(
    const Representation<CycloLaurent>& rep, int n) {
  std::vector<std::pair<SparseMatrix<CycloLaurent>, SparseMatrix<CycloLaurent>>> out;
  for (int i = 1; i < n; ++i) out.push_back(rep.u_factors.at(i));
  return out;
}

}  // namespace

TEST(Faithful, TriangularitySmall) {
  const auto r2 = triangularity_report(2);
  EXPECT_TRUE(r2.ok());
  EXPECT_EQ(r2.n, 2);
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(triangularity_report(n).ok()) << n;
}

TEST(Faithful, TriangularityIsJobIndependent) {
  const auto a = triangularity_report(5, 1);
  const auto b = triangularity_report(5, 3);
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(Faithful, TriangularityDetectsUpperEntries) {
  // The identity's matrix is not confined below (1212,1212).
  const WalkPair p(Walk("1212"), Walk("1212"));
  const auto m = r_matrix(identity(4));
  bool outside = false;
  for (std::uint32_t u = 0; u < m.rows(); ++u) {
    for (const auto& [v, value] : m.row(u)) {
      if (!is_walk(u, 4) || !is_walk(v, 4)) continue;
      const Walk wu = walk_from_index(u, 4), wv = walk_from_index(v, 4);
      if (wu.endpoint() != wv.endpoint() || !leq(WalkPair(wu, wv), p)) outside = true;
    }
  }
  EXPECT_TRUE(outside);
}

TEST(Faithful, WordMatrixAnchor) {
  const auto m = word_matrix(WalkPair(Walk("1212"), Walk("1212")));
  EXPECT_EQ(m.at(sequence_index("1212"), sequence_index("1212")), q_power(2));
}

TEST(Faithful, TlRankCertificates) {
  const std::size_t expected[] = {0, 1, 2, 5, 14};
  for (int n = 1; n <= 4; ++n) {
    const auto cert = verify_tl_faithful(n);
    EXPECT_EQ(cert.basis_size, expected[n]);
    EXPECT_EQ(cert.rank, expected[n]);
    EXPECT_TRUE(cert.valid());
  }
}

TEST(Faithful, TlRankAgreesWithRationalOracle) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<SparseVector<LaurentInt>> vectors;
    for (const auto& p : enumerate_pairs(n)) vectors.push_back(flatten(word_matrix(p)));
    EXPECT_EQ(oracle::rational_rank_at(vectors, std::size_t{1} << (2 * n), oracle::Rational(7, 5)), vectors.size());
  }
}

TEST(Faithful, MaskIndependence) {
  const auto trivial = verify_mask_independence(2, 1, 1, {LaurentInt(1)});
  EXPECT_TRUE(trivial.ok());
  const auto r3 = verify_mask_independence(3, 25, 0x5eed);
  EXPECT_EQ(r3.trial_ranks.size(), 25U);
  EXPECT_TRUE(r3.ok());
  EXPECT_THROW((void)verify_mask_independence(2, 1, 1, {LaurentInt(0)}), std::invalid_argument);
  EXPECT_THROW((void)verify_mask_independence(2, 1, 1, {}), std::invalid_argument);
}

TEST(Faithful, MirrorCertificateRho0) {
  const auto rep = rho0({2, 1});
  const auto cert = certify_mirror(*rep.e, factors_of(rep, 2), 2, blob_basis_words(2));
  EXPECT_TRUE(cert.masks_ok());
  EXPECT_EQ(cert.mask_checks.size(), 3U);
  EXPECT_EQ(cert.rank, 6U);
  EXPECT_TRUE(cert.valid());

  const auto rep3 = rho0({3, 2});
  const auto cert3 = certify_mirror(*rep3.e, factors_of(rep3, 3), 3, blob_basis_words(3));
  EXPECT_EQ(cert3.rank, 20U);
  EXPECT_TRUE(cert3.valid());
}

TEST(Faithful, MirrorCertificateRejectsWrongMask) {
  const auto rep = rho0({2, 1});
  const auto cert = certify_mirror(SparseMatrix<CycloLaurent>::identity(4), factors_of(rep, 2), 2, blob_basis_words(2));
  EXPECT_FALSE(cert.masks_ok());
  EXPECT_FALSE(cert.valid());
  EXPECT_EQ(cert.method, "not-run");
  EXPECT_THROW((void)certify_mirror(SparseMatrix<CycloLaurent>::identity(3), factors_of(rep, 2), 2, blob_basis_words(2)),
               std::invalid_argument);
}

TEST(Faithful, UnfactoredMirrorCheck) {
  const auto rep = rho0({2, 3});
  const auto cert = certify_mirror_unfactored(*rep.e, {rep.u.at(1)}, 2, blob_basis_words(2));
  EXPECT_TRUE(cert.masks_ok());
  EXPECT_EQ(cert.rank, 6U);
  EXPECT_NE(cert.method.find("unfactored"), std::string::npos);
}

TEST(Faithful, StructureConstantsOfTlRepresentation) {
  const int n = 3;
  const auto report = verify_blob_representation(tl_representation(n), n, BlobParams<>::integral(1),
                                                 tl_basis_words(n));
  EXPECT_EQ(report.pairs_checked, 25U);
  EXPECT_EQ(report.normalization, 1);
  ASSERT_TRUE(report.empirical_delta.has_value());
  EXPECT_EQ(*report.empirical_delta, quantum_integer(2));
}

TEST(Faithful, StructureConstantsOfRho0) {
  for (int m = 1; m <= 2; ++m) {
    const auto stated = BlobParams<>::integral(m);
    const auto report = verify_blob_representation(rho0({2, m}), 2, embed(stated), blob_basis_words(2));
    EXPECT_EQ(report.pairs_checked, 36U);
    EXPECT_FALSE(report.residuals.empty());
    EXPECT_TRUE(report.residuals_negated_e.empty());
    EXPECT_EQ(report.normalization, -1);
    ASSERT_TRUE(report.empirical_delta_e.has_value());
    EXPECT_EQ(*report.empirical_delta_e, CycloLaurent(-1) * embed(stated.delta_e));
    if (m > 1) {
      ASSERT_TRUE(report.empirical_gamma.has_value());
      EXPECT_EQ(*report.empirical_gamma, CycloLaurent(-1) * embed(stated.gamma));
    }
  }
}

TEST(Faithful, StructureCheckFailsForWrongParameters) {
  auto params = embed(BlobParams<>::integral(2));
  params.gamma = params.gamma + CycloLaurent(1);
  const auto report = verify_blob_representation(rho0({2, 2}), 2, params, blob_basis_words(2));
  EXPECT_EQ(report.normalization, 0);
  EXPECT_FALSE(report.ok());
}

TEST(Faithful, CertificatesAreReproducible) {
  const auto a = to_json(verify_tl_faithful(4, 99, 1));
  const auto b = to_json(verify_tl_faithful(4, 99, 2));
  EXPECT_EQ(a.dump(), b.dump());
  const auto r1 = to_json(verify_mask_independence(3, 5, 7));
  const auto r2 = to_json(verify_mask_independence(3, 5, 7));
  EXPECT_EQ(r1.dump(), r2.dump());
}
