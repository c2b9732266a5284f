#include <gtest/gtest.h>

#include <random>
#include <set>

#include "blobrep/words.hpp"

using namespace blobrep;

namespace {

GenWord random_word(std::mt19937_64& rng, int n, int length, bool with_e) {
  std::uniform_int_distribution<int> pick(with_e ? 0 : 1, n - 1);
  GenWord w{{}, IndexConvention::standard, n};
  for (int k = 0; k < length; ++k) {
    const int g = pick(rng);
    w.letters.push_back(g == 0 ? Letter::E() : Letter::U(g));
  }
  return w;
}

}  // namespace

TEST(Words, ParseAndPrint) {
  const auto w = parse_word("e u1 U2", 3);
  ASSERT_EQ(w.size(), 3U);
  EXPECT_EQ(w.letters[0], Letter::E());
  EXPECT_EQ(w.letters[2], Letter::U(2));
  EXPECT_EQ(to_string(w), "e u1 u2");
  EXPECT_EQ(to_string(parse_word("u-1 u0 u1", 2, IndexConvention::shifted)), "u-1 u0 u1");
  EXPECT_TRUE(parse_word("", 3).empty());
  EXPECT_THROW((void)parse_word("u3", 3), std::out_of_range);
  EXPECT_THROW((void)parse_word("u0", 3), std::out_of_range);
  EXPECT_THROW((void)parse_word("x1", 3), std::invalid_argument);
  EXPECT_THROW((void)parse_word("u1a", 3), std::invalid_argument);
  EXPECT_THROW((void)parse_word("e", 2, IndexConvention::shifted), std::invalid_argument);
}

TEST(Words, EvaluationExamples) {
  const auto empty = eval_word(GenWord{{}, IndexConvention::standard, 3});
  EXPECT_EQ(empty.diagram, BlobPairing(identity(3)));
  EXPECT_TRUE(empty.loop_free());

  const auto uu = eval_word(parse_word("u1 u1", 2));
  EXPECT_EQ(uu.diagram, BlobPairing(generator_u(1, 2)));
  EXPECT_EQ(uu.plain_loops, 1);

  const auto ee = eval_word(parse_word("e e", 2));
  EXPECT_EQ(ee.diagram, blob_e(2));
  EXPECT_EQ(ee.blob_merges, 1);
  EXPECT_EQ(ee.plain_loops + ee.blob_loops, 0);

  const auto ueu = eval_word(parse_word("u1 e u1", 2));
  EXPECT_EQ(ueu.diagram, BlobPairing(generator_u(1, 2)));
  EXPECT_EQ(ueu.blob_loops, 1);
  const auto params = BlobParams<>::integral(2);
  EXPECT_EQ(evaluation_scalar(ueu, params), params.gamma);
}

TEST(Words, EvaluationIsMonoidMap) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 3;
    const auto w1 = random_word(rng, n, t % 5, true);
    const auto w2 = random_word(rng, n, (t / 5) % 5, true);
    const auto a = eval_word(w1), b = eval_word(w2), ab = eval_word(w1 * w2);
    const auto c = compose_blob_counts(a.diagram, b.diagram);
    EXPECT_EQ(ab.diagram, c.diagram);
    EXPECT_EQ(ab.plain_loops, a.plain_loops + b.plain_loops + c.plain_loops);
    EXPECT_EQ(ab.blob_loops, a.blob_loops + b.blob_loops + c.blob_loops);
    EXPECT_EQ(ab.blob_merges, a.blob_merges + b.blob_merges + c.blob_merges);
  }
}

TEST(Words, PresentationOfRMatrices) {
  for (int n = 2; n <= 5; ++n) {
    const auto report = verify_presentation(tl_representation(n), n, quantum_integer(2));
    EXPECT_TRUE(report.ok()) << n;
    EXPECT_FALSE(report.degenerate);
    EXPECT_GT(report.checked, 0);
  }
}

TEST(Words, PresentationDetectsBrokenImages) {
  auto rep = tl_representation(3);
  rep.u.at(2) = LaurentInt(2) * rep.u.at(2);
  const auto report = verify_presentation(rep, 3, quantum_integer(2));
  EXPECT_FALSE(report.ok());
  for (const auto& v : report.violations) EXPECT_FALSE(v.residual.is_zero());
  // wrong loop value
  EXPECT_FALSE(verify_presentation(tl_representation(3), 3, LaurentInt(2)).ok());
}

TEST(Words, ZeroRepresentationIsDegenerate) {
  Representation<LaurentInt> rep;
  rep.factors = 2;
  for (int i = 1; i <= 3; ++i) rep.u.emplace(i, SparseMatrix<LaurentInt>(2, 2));
  rep.e = SparseMatrix<LaurentInt>(2, 2);
  const auto report = verify_presentation(rep, 4, quantum_integer(2), std::optional{BlobParams<>::integral(1)});
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.degenerate);
}

TEST(Words, BasisWordsSmallCases) {
  const auto one = blob_basis_words(1);
  ASSERT_EQ(one.size(), 2U);
  EXPECT_TRUE(one.at(BlobPairing(identity(1))).empty());
  EXPECT_EQ(to_string(one.at(blob_e(1))), "e");
  EXPECT_EQ(blob_basis_words(2).size(), 6U);
  EXPECT_THROW((void)blob_basis_words(0), std::invalid_argument);
}

TEST(Words, BasisWordsAreLoopFreeAndExhaustive) {
  for (int n = 1; n <= 5; ++n) {
    const auto table = blob_basis_words(n);
    EXPECT_EQ(table.size(), central_binomial(n));
    const auto all = enumerate_blob(n);
    EXPECT_EQ(table.size(), all.size());
    for (const auto& d : all) {
      ASSERT_TRUE(table.contains(d));
      const auto ev = eval_word(table.at(d));
      EXPECT_TRUE(ev.loop_free());
      EXPECT_EQ(ev.diagram, d);
    }
  }
  EXPECT_EQ(blob_basis_words(4), blob_basis_words(4));
}

TEST(Words, CentralBinomial) {
  const std::uint64_t expected[] = {1, 2, 6, 20, 70, 252, 924};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(central_binomial(n), expected[n]);
}

TEST(Words, FoldingMapExamples) {
  EXPECT_EQ(to_string(f_map(parse_word("e", 2))), "u0");
  EXPECT_EQ(to_string(f_map(parse_word("u1", 2))), "u-1 u1");
  EXPECT_TRUE(f_map(parse_word("", 2)).empty());
  EXPECT_EQ(f_map(parse_word("e", 2)).convention, IndexConvention::shifted);
  EXPECT_THROW((void)f_map(parse_word("u0", 2, IndexConvention::shifted)), std::invalid_argument);
}

TEST(Words, FoldedBasisIsSymmetricAndDistinct) {
  for (int n = 1; n <= 4; ++n) {
    std::set<Pairing> images;
    for (const auto& [d, w] : blob_basis_words(n)) {
      const auto ev = eval_word(f_map(w));
      EXPECT_TRUE(ev.loop_free());
      const Pairing folded = ev.diagram.base();
      EXPECT_EQ(reflect(folded), folded);
      images.insert(folded);
    }
    EXPECT_EQ(images.size(), central_binomial(n)) << n;
  }
}
