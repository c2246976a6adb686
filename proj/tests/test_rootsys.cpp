#include <doctest.h>

#include <set>

#include "qsc/rootsys.hpp"

using namespace qsc;

namespace {

// independent oracle: s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i,
// written out directly from the Cartan matrix
IVec reflect_oracle(const CartanDatum& cd, int i, const IVec& lambda) {
  IVec out = lambda;
  long ni = lambda[i - 1];
  for (int k = 0; k < cd.rank(); ++k) out[k] -= ni * cd.c(k, i - 1);
  return out;
}

} // namespace

TEST_CASE("Cartan data of the guaranteed types") {
  for (std::string lbl : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    CartanDatum cd = CartanDatum::parse(lbl);
    CHECK(cd.label() == lbl);
    for (int i = 0; i < cd.rank(); ++i) {
      CHECK(cd.c(i, i) == 2);
      for (int j = 0; j < cd.rank(); ++j) {
        if (i != j) CHECK(cd.c(i, j) <= 0);
        CHECK((cd.c(i, j) == 0) == (cd.c(j, i) == 0));
        CHECK(cd.root_pairing(i, j) == cd.root_pairing(j, i));
      }
    }
  }
  CHECK_THROWS_AS(CartanDatum::parse("Z9"), rootsys_error);
  CHECK_THROWS_AS(CartanDatum::parse("A"), rootsys_error);
}

TEST_CASE("B2 conventions match d = (2,1), c_12 = -1") {
  CartanDatum b2 = CartanDatum::parse("B2");
  CHECK(b2.d(0) == 2);
  CHECK(b2.d(1) == 1);
  CHECK(b2.c(0, 1) == -1);
  CHECK(b2.c(1, 0) == -2);
  CHECK(b2.root_pairing(0, 1) == -2);  // <alpha_1, alpha_2> = -2
}

TEST_CASE("simple reflection action on weights") {
  CartanDatum a2 = CartanDatum::parse("A2");
  WeylElement s1 = simple_reflection(a2, 1);
  // s_1(omega_1) = -omega_1 + omega_2
  CHECK(mat_apply(s1.matrix, {1, 0}) == IVec{-1, 1});
  // s_1(omega_2) = omega_2
  CHECK(mat_apply(s1.matrix, {0, 1}) == IVec{0, 1});
  // involution
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      IVec l{a, b};
      CHECK(mat_apply(s1.matrix, mat_apply(s1.matrix, l)) == l);
      CHECK(mat_apply(s1.matrix, l) == reflect_oracle(a2, 1, l));
    }
  CHECK_THROWS_AS(simple_reflection(a2, 3), rootsys_error);
}

TEST_CASE("word_to_element and reducedness") {
  CartanDatum a2 = CartanDatum::parse("A2");
  auto braid1 = word_to_element(a2, {1, 2, 1});
  auto braid2 = word_to_element(a2, {2, 1, 2});
  CHECK(braid1.element == braid2.element);
  CHECK(braid1.is_reduced);
  CHECK(braid2.is_reduced);
  auto sq = word_to_element(a2, {1, 1});
  CHECK(sq.element.is_identity());
  CHECK_FALSE(sq.is_reduced);

  CartanDatum b2 = CartanDatum::parse("B2");
  auto w0 = word_to_element(b2, {1, 2, 1, 2});
  CHECK(w0.is_reduced);
  CHECK(w0.element == longest_element(b2));
  CHECK(inversion_count(b2, w0.element) == 4);
}

TEST_CASE("inversion roots along a reduced word") {
  CartanDatum a2 = CartanDatum::parse("A2");
  // oracle: beta_1 = alpha_1, beta_2 = s_1(alpha_2) computed via the
  // reflection formula in alpha coordinates
  auto betas = inversion_roots(a2, {1, 2});
  REQUIRE(betas.size() == 2);
  CHECK(betas[0] == IVec{1, 0});
  CHECK(betas[1] == IVec{1, 1});  // s_1(alpha_2) = alpha_1 + alpha_2

  auto betas3 = inversion_roots(a2, {1, 2, 1});
  REQUIRE(betas3.size() == 3);
  CHECK(betas3[0] == IVec{1, 0});
  CHECK(betas3[1] == IVec{1, 1});
  CHECK(betas3[2] == IVec{0, 1});

  CHECK(inversion_roots(a2, {}).empty());
  CHECK_THROWS_AS(inversion_roots(a2, {1, 1}), rootsys_error);

  // distinct, positive, and a set independent of the reduced word
  for (const auto& w : weyl_group(a2)) {
    std::set<IVec> first;
    bool have = false;
    for (const auto& word : all_reduced_words(a2, w)) {
      auto bs = inversion_roots(a2, word);
      std::set<IVec> s(bs.begin(), bs.end());
      CHECK(s.size() == bs.size());
      for (const auto& b : bs) CHECK(a2.is_positive_root(b));
      if (!have) { first = s; have = true; }
      else CHECK(first == s);
    }
  }
}

TEST_CASE("support sets") {
  CartanDatum a2 = CartanDatum::parse("A2");
  auto s1 = simple_reflection(a2, 1);
  auto sup = support_sets(a2, s1);
  CHECK(sup.S == std::set<int>{1});
  CHECK(sup.I == std::set<int>{2});
  auto s1s2 = word_to_element(a2, {1, 2}).element;
  sup = support_sets(a2, s1s2);
  CHECK(sup.S == std::set<int>{1, 2});
  CHECK(sup.I.empty());
  sup = support_sets(a2, identity_element(a2));
  CHECK(sup.S.empty());
  CHECK(sup.I == std::set<int>{1, 2});
  // S(w) equals the letters of the canonical word, for every w
  for (const auto& w : weyl_group(a2)) {
    std::set<int> letters(w.canonical_word.begin(), w.canonical_word.end());
    CHECK(letters == support_sets(a2, w).S);
  }
}

TEST_CASE("pairings") {
  CartanDatum a2 = CartanDatum::parse("A2");
  CHECK(a2.pairing_fund_alpha(a2.alpha_to_fund({1, 0}), {0, 1}) == -1);  // <a1,a2>
  // <omega_1, alpha_1^vee> = coordinate 1 by duality; via the form:
  // <omega_1, alpha_1> = d_1
  CHECK(a2.pairing_fund_alpha({1, 0}, {1, 0}) == 1);
  CartanDatum b2 = CartanDatum::parse("B2");
  CHECK(b2.pairing_fund_alpha(b2.alpha_to_fund({1, 0}), {0, 1}) == -2);
  // the form is symmetric and rational on P x P
  CHECK(a2.pairing_fund({1, 0}, {0, 1}) == a2.pairing_fund({0, 1}, {1, 0}));
  CHECK(a2.pairing_fund({1, 0}, {1, 0}) == mpq_class(2, 3));
}

TEST_CASE("length is subadditive and word products compose") {
  CartanDatum b2 = CartanDatum::parse("B2");
  const auto& W = weyl_group(b2);
  CHECK(W.size() == 8);
  for (const auto& u : W)
    for (const auto& v : W) {
      std::vector<int> word = u.canonical_word;
      word.insert(word.end(), v.canonical_word.begin(), v.canonical_word.end());
      auto prod = word_to_element(b2, word);
      CHECK(prod.element.matrix == mat_mul(u.matrix, v.matrix));
      CHECK(prod.element.length() <= u.length() + v.length());
    }
}

TEST_CASE("canonical words are lexicographically smallest reduced words") {
  for (std::string lbl : {"A2", "B2"}) {
    CartanDatum cd = CartanDatum::parse(lbl);
    for (const auto& w : weyl_group(cd)) {
      auto words = all_reduced_words(cd, w);
      std::vector<int> best = *std::min_element(words.begin(), words.end());
      CHECK(w.canonical_word == best);
    }
  }
}

TEST_CASE("Weyl group sizes") {
  CHECK(weyl_group(CartanDatum::parse("A1")).size() == 2);
  CHECK(weyl_group(CartanDatum::parse("A2")).size() == 6);
  CHECK(weyl_group(CartanDatum::parse("B2")).size() == 8);
  CHECK(weyl_group(CartanDatum::parse("A3")).size() == 24);
  CHECK(weyl_group(CartanDatum::parse("G2")).size() == 12);
  CHECK(weyl_group(CartanDatum::parse("B3")).size() == 48);
  CHECK(weyl_group(CartanDatum::parse("C3")).size() == 48);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("1,2,1", 2) == std::vector<int>{1, 2, 1});
  CHECK(parse_word("", 2).empty());
  CHECK(parse_word("e", 2).empty());
  CHECK_THROWS_AS(parse_word("3", 2), rootsys_error);
  CHECK_THROWS_AS(parse_word("1,,2", 2), rootsys_error);
  CHECK_THROWS_AS(parse_word("x", 2), rootsys_error);
}

TEST_CASE("inversion roots are exactly the positive roots sent negative") {
  for (std::string lbl : {"A2", "B2", "G2"}) {
    CartanDatum cd = CartanDatum::parse(lbl);
    for (const auto& w : weyl_group(cd)) {
      auto winv = inverse(cd, w);
      auto betas = inversion_roots(cd, w.canonical_word);
      std::set<IVec> inv(betas.begin(), betas.end());
      std::set<IVec> expect;
      for (const IVec& b : cd.positive_roots()) {
        IVec img = apply_to_root(cd, winv, b);
        bool neg = std::all_of(img.begin(), img.end(), [](long x) { return x <= 0; });
        if (neg) expect.insert(b);
      }
      CHECK(inv == expect);
      CHECK((int)inv.size() == w.length());
    }
  }
}
