#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "greenaug/error.hpp"
#include "greenaug/metrics.hpp"
#include "support/fixtures.hpp"

using namespace greenaug;

namespace {

using Tokens = std::vector<std::string>;

ErrorCategory category_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.category();
  }
  FAIL("expected an error");
  return ErrorCategory::kUsage;
}

void check_triple(const ScoreTriple& s, double p, double r, double f) {
  CHECK(s.precision == doctest::Approx(p).epsilon(1e-12));
  CHECK(s.recall == doctest::Approx(r).epsilon(1e-12));
  CHECK(s.f1 == doctest::Approx(f).epsilon(1e-12));
}

// Exhaustive LCS over every subsequence of the shorter list.
std::size_t lcs_exhaustive(const Tokens& a, const Tokens& b) {
  const Tokens& s = a.size() <= b.size() ? a : b;
  const Tokens& t = a.size() <= b.size() ? b : a;
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    std::size_t j = 0, len = 0;
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      while (j < t.size() && t[j] != s[i]) ++j;
      if (j == t.size()) ok = false; else { ++j; ++len; }
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

Tokens random_tokens(std::mt19937_64& gen) {
  static const Tokens vocab = {"а", "б", "в", "г", "д", "е"};
  std::uniform_int_distribution<int> len(0, 10);
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  Tokens t(static_cast<std::size_t>(len(gen)));
  for (auto& w : t) w = vocab[word(gen)];
  return t;
}

TokenEmbeddings embeddings(std::vector<std::vector<double>> vectors) {
  TokenEmbeddings e;
  for (std::size_t i = 0; i < vectors.size(); ++i) e.tokens.push_back("t" + std::to_string(i));
  e.vectors = std::move(vectors);
  return e;
}

}  // namespace

TEST_CASE("score triple harmonic mean") {
  check_triple(ScoreTriple::from_pr(0.5, 1.0), 0.5, 1.0, 2.0 / 3.0);
  check_triple(ScoreTriple::from_pr(0.0, 0.0), 0.0, 0.0, 0.0);
}

TEST_CASE("rouge-1 hand cases") {
  const Tokens a = {"the", "cat", "sat"};
  check_triple(rouge1(a, a), 1, 1, 1);
  check_triple(rouge1(a, Tokens{"dog", "ran"}), 0, 0, 0);
  check_triple(rouge1(a, Tokens{"the", "cat", "ran"}), 2.0 / 3, 2.0 / 3, 2.0 / 3);
  // Clipping: a repeated candidate token counts at most as often as in the reference.
  check_triple(rouge1(Tokens{"a", "a", "a"}, Tokens{"a", "b"}), 1.0 / 3, 0.5, 0.4);
  check_triple(rouge1(Tokens{}, a), 0, 0, 0);
  check_triple(rouge1(Tokens{}, Tokens{}), 0, 0, 0);
}

TEST_CASE("rouge-l hand cases") {
  const Tokens a = {"a", "b", "c", "d"};
  check_triple(rouge_l(a, a), 1, 1, 1);
  CHECK(lcs_length(a, Tokens{"b", "d"}) == 2);
  check_triple(rouge_l(a, Tokens{"b", "d"}), 0.5, 1.0, 2.0 / 3);
  check_triple(rouge_l(a, Tokens{}), 0, 0, 0);
  CHECK(lcs_length(Tokens{"a", "b", "c"}, Tokens{"c", "b", "a"}) == 1);
}

TEST_CASE("rouge matches brute-force oracles and is symmetric in F") {
  std::mt19937_64 gen(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const Tokens c = random_tokens(gen), r = random_tokens(gen);
    CHECK(lcs_length(c, r) == lcs_exhaustive(c, r));
    CHECK(rouge1(c, r).f1 == doctest::Approx(rouge1(r, c).f1).epsilon(1e-15));
    CHECK(rouge_l(c, r).f1 == doctest::Approx(rouge_l(r, c).f1).epsilon(1e-15));
    for (const auto& s : {rouge1(c, r), rouge_l(c, r)}) {
      CHECK(s.f1 >= 0.0);
      CHECK(s.f1 <= 1.0);
    }
  }
}

TEST_CASE("rouge on tokenized Russian text") {
  const auto c = tokenize("Сортируйте отходы, сдавайте батарейки!");
  const auto r = tokenize("сдавайте батарейки и сортируйте отходы");
  check_triple(rouge1(c, r), 1.0, 0.8, 2 * 0.8 / 1.8);
  CHECK(lcs_length(c, r) == 2);
}

TEST_CASE("bertscore hand cases") {
  const auto x = embeddings({{1, 2, 3}, {-1, 0, 4}, {0.5, 0.1, 0}});
  check_triple(bertscore(x, x), 1, 1, 1);

  const auto e1 = embeddings({{1, 0, 0}, {0, 1, 0}});
  const auto e2 = embeddings({{0, 0, 1}});
  check_triple(bertscore(e1, e2), 0, 0, 0);

  // Cosine matrix {{1,0},{0,0.5}}.
  const double s = std::sqrt(3.0) / 2.0;
  const auto c = embeddings({{1, 0, 0}, {0, 1, 0}});
  const auto r = embeddings({{1, 0, 0}, {0, 0.5, s}});
  check_triple(bertscore(c, r), 0.75, 0.75, 0.75);

  // Magnitudes do not matter.
  const auto scaled = embeddings({{10, 0, 0}, {0, 0.1, 0}});
  check_triple(bertscore(scaled, r), 0.75, 0.75, 0.75);

  // Negative best cosines are clamped to zero.
  const auto neg = embeddings({{-1, 0, 0}});
  check_triple(bertscore(neg, embeddings({{1, 0, 0}})), 0, 0, 0);
}

TEST_CASE("bertscore errors") {
  const auto ok = embeddings({{1, 0}});
  CHECK(category_of([&] { bertscore(embeddings({{0, 0}}), ok); }) == ErrorCategory::kNumeric);
  CHECK(category_of([&] { bertscore(embeddings({{1, 0, 0}}), ok); }) == ErrorCategory::kUsage);
  CHECK(category_of([&] { bertscore(TokenEmbeddings{}, ok); }) == ErrorCategory::kSchema);
  TokenEmbeddings ragged = embeddings({{1, 0}, {1}});
  CHECK(category_of([&] { bertscore(ragged, ok); }) == ErrorCategory::kSchema);
}

TEST_CASE("multilabel f1 worked example") {
  const auto gold = LabelMatrix::from_rows({{1, 0}, {1, 1}, {0, 1}, {0, 0}}, 2);
  const auto pred = LabelMatrix::from_rows({{1, 0}, {0, 1}, {0, 1}, {0, 1}}, 2);
  const auto m = multilabel_f1(gold, pred);
  REQUIRE(m.per_class.size() == 2);
  check_triple(m.per_class[0], 1.0, 0.5, 2.0 / 3);
  check_triple(m.per_class[1], 2.0 / 3, 1.0, 0.8);
  CHECK(m.macro_f1 == doctest::Approx(11.0 / 15).epsilon(1e-12));
}

TEST_CASE("multilabel f1 edge cases") {
  std::vector<LabelSet> rows;
  for (int k = 1; k <= 9; ++k) rows.push_back(LabelSet{k, k % 9 + 1});
  const auto gold = LabelMatrix::from_label_sets(rows);
  CHECK(multilabel_f1(gold, gold).macro_f1 == 1.0);

  LabelMatrix complement(gold.rows(), gold.classes());
  for (std::size_t i = 0; i < gold.rows(); ++i) {
    for (std::size_t j = 0; j < gold.classes(); ++j) complement.set(i, j, !gold.at(i, j));
  }
  CHECK(multilabel_f1(gold, complement).macro_f1 == 0.0);

  // A class absent from both gold and predictions contributes 0.
  const auto g = LabelMatrix::from_rows({{1, 0}}, 2);
  CHECK(multilabel_f1(g, g).macro_f1 == 0.5);

  CHECK(category_of([&] { multilabel_f1(g, gold); }) == ErrorCategory::kUsage);
  CHECK(category_of([] { LabelMatrix::from_rows({{1, 2}}, 2); }) == ErrorCategory::kUsage);
  CHECK(category_of([] { LabelMatrix::from_rows({{1}}, 2); }) == ErrorCategory::kUsage);
}

TEST_CASE("multilabel f1 is invariant under a joint column permutation") {
  std::mt19937_64 gen(5);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 20; ++trial) {
    LabelMatrix g(17, 9), p(17, 9);
    for (std::size_t i = 0; i < 17; ++i) {
      for (std::size_t j = 0; j < 9; ++j) {
        g.set(i, j, coin(gen));
        p.set(i, j, coin(gen));
      }
    }
    std::vector<std::size_t> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    LabelMatrix gp(17, 9), pp(17, 9);
    for (std::size_t i = 0; i < 17; ++i) {
      for (std::size_t j = 0; j < 9; ++j) {
        gp.set(i, perm[j], g.at(i, j));
        pp.set(i, perm[j], p.at(i, j));
      }
    }
    const auto a = multilabel_f1(g, p);
    const auto b = multilabel_f1(gp, pp);
    CHECK(std::abs(a.macro_f1 - b.macro_f1) < 1e-12);
    double mean = 0;
    for (const auto& s : a.per_class) mean += s.f1;
    CHECK(std::abs(mean / 9 - a.macro_f1) < 1e-12);
  }
}

TEST_CASE("prediction files align by id") {
  Dataset test(Split::kTest);
  test.append(testing::original("a", "первое", LabelSet{1}));
  test.append(testing::original("b", "второе", LabelSet{2, 9}));
  test.append(testing::original("c", "третье", LabelSet{}));

  const auto m = parse_predictions(
      "{\"id\":\"c\",\"labels\":[]}\n{\"id\":\"a\",\"labels\":[1,3]}\n\n{\"id\":\"b\",\"labels\":[9]}\n", test);
  CHECK(m.rows() == 3);
  CHECK(m.at(0, 0));
  CHECK(m.at(0, 2));
  CHECK_FALSE(m.at(1, 1));
  CHECK(m.at(1, 8));
  for (std::size_t j = 0; j < 9; ++j) CHECK_FALSE(m.at(2, j));

  const auto gold = gold_matrix(test);
  CHECK(gold.at(1, 1));
  CHECK(gold.at(1, 8));

  CHECK(category_of([&] { parse_predictions("{\"id\":\"a\",\"labels\":[]}\n", test); }) ==
        ErrorCategory::kIntegrity);
  CHECK(category_of([&] {
          parse_predictions(
              "{\"id\":\"a\",\"labels\":[]}\n{\"id\":\"a\",\"labels\":[]}\n{\"id\":\"b\",\"labels\":[]}\n"
              "{\"id\":\"c\",\"labels\":[]}\n",
              test);
        }) == ErrorCategory::kIntegrity);
  CHECK(category_of([&] {
          parse_predictions(
              "{\"id\":\"a\",\"labels\":[]}\n{\"id\":\"b\",\"labels\":[]}\n{\"id\":\"c\",\"labels\":[]}\n"
              "{\"id\":\"z\",\"labels\":[]}\n",
              test);
        }) == ErrorCategory::kIntegrity);
  CHECK(category_of([&] { parse_predictions("{\"id\":\"a\"", test); }) == ErrorCategory::kParse);
}
