#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "veronese/selftest.hpp"
#include "veronese/veronese_cat.hpp"

using namespace veronese;

namespace {

SigmaLetter gen(std::initializer_list<std::uint32_t> v) { return {LetterTag::Gen, ExponentVector(v)}; }
SigmaLetter shift(std::initializer_list<std::uint32_t> v) { return {LetterTag::Shift, ExponentVector(v)}; }

// alpha: (1,1) -> (2,2), slot 0 goes to slot 1.
VerMorphism sample_alpha() { return {{1, 1}, {2, 2}, {1}, {{2, 0}}, {{0, 1}}}; }
// beta: (2,2) -> (2,3), slots 0,1 go to 0,2.
VerMorphism sample_beta() { return {{2, 2}, {2, 3}, {0, 2}, {{1, 1}}, {{0, 0}, {0, 0}}}; }

// Embedding search over all position subsets; independent of higman_leq.
bool embeds_exhaustively(const Word& u, const Word& v) {
  if (u.size() > v.size()) return false;
  for (const auto& positions : increasing_subsets(static_cast<std::uint32_t>(v.size()),
                                                  static_cast<std::uint32_t>(u.size()))) {
    bool ok = true;
    for (std::size_t j = 0; ok && j < u.size(); ++j) ok = letter_leq(u[j], v[positions[j]]);
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("multi lists exponent vectors in lexicographic order") {
  const auto m = multi(2, 2);
  CHECK(m == std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(multi(3, 2).size() == 6);
  CHECK(multi(3, 0).size() == 1);
}

TEST_CASE("composition follows the three clauses") {
  const auto g = compose(sample_beta(), sample_alpha());
  const VerMorphism expected{{1, 1}, {2, 3}, {2}, {{2, 0}, {1, 1}}, {{0, 1}}};
  CHECK(g == expected);
  CHECK_THROWS_AS(compose(sample_alpha(), sample_alpha()), std::invalid_argument);
}

TEST_CASE("identity laws") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const ObjectDM x{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3)};
    const ObjectDM y{x.d + static_cast<std::uint32_t>(rng() % 2), x.m + static_cast<std::uint32_t>(rng() % 3)};
    const auto a = random_morphism(x, y, 2, rng);
    CHECK(compose(identity_morphism(y, 2), a) == a);
    CHECK(compose(a, identity_morphism(x, 2)) == a);
  }
}

TEST_CASE("associativity on larger random triples") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 500; ++k) {
    const std::uint32_t r = 1 + rng() % 3;
    const ObjectDM w{static_cast<std::uint32_t>(rng() % 2), static_cast<std::uint32_t>(rng() % 3)};
    const ObjectDM x{w.d + static_cast<std::uint32_t>(rng() % 2), w.m + static_cast<std::uint32_t>(rng() % 2)};
    const ObjectDM y{x.d + static_cast<std::uint32_t>(rng() % 2), x.m + static_cast<std::uint32_t>(rng() % 2)};
    const ObjectDM z{y.d + static_cast<std::uint32_t>(rng() % 2), y.m + static_cast<std::uint32_t>(rng() % 2)};
    const auto a = random_morphism(w, x, r, rng), b = random_morphism(x, y, r, rng), c = random_morphism(y, z, r, rng);
    CHECK(compose(c, compose(b, a)) == compose(compose(c, b), a));
  }
}

TEST_CASE("word encoding") {
  const auto g = compose(sample_beta(), sample_alpha());
  const Word w = word_encode(g);
  CHECK(w == Word{gen({2, 0}), gen({1, 1}), shift({0, 1})});
  CHECK(word_decode(w, {1, 1}) == g);

  const auto id = identity_morphism({2, 3}, 2);
  CHECK(word_encode(id) == Word(3, shift({0, 0})));
  CHECK(word_decode(Word(3, shift({0, 0})), {2, 3}) == id);

  CHECK_THROWS_AS(word_decode(Word{gen({1, 0}), gen({0, 2})}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(word_decode(Word{gen({1, 0})}, {0, 1}), std::invalid_argument);
  // The empty word needs the target degree.
  CHECK(word_decode(Word{}, {1, 0}, 3).target == ObjectDM{3, 0});
}

TEST_CASE("higman order") {
  CHECK(higman_leq({}, {gen({0, 1})}));
  CHECK(higman_leq({gen({1, 0})}, {shift({2, 0}), gen({2, 1})}));
  CHECK_FALSE(higman_leq({shift({1, 0})}, {gen({2, 0})}));

  // Against the exhaustive embedding search on all short words over a small
  // alphabet.
  std::vector<SigmaLetter> alphabet;
  for (const auto tag : {LetterTag::Gen, LetterTag::Shift}) {
    for (const auto& v : multi(2, 1)) alphabet.push_back({tag, v});
    alphabet.push_back({tag, ExponentVector{0, 0}});
  }
  std::vector<Word> words{{}};
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<Word> next;
    for (const auto& w : words) {
      if (w.size() + 1 != len) continue;
      for (const auto& l : alphabet) {
        Word x = w;
        x.push_back(l);
        next.push_back(x);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  std::mt19937_64 rng(3);
  for (int k = 0; k < 3000; ++k) {
    const auto& u = words[rng() % words.size()];
    const auto& v = words[rng() % words.size()];
    CHECK(higman_leq(u, v) == embeds_exhaustively(u, v));
    CHECK(higman_leq(u, u));
  }
}

TEST_CASE("divides returns factorizations") {
  const auto a = sample_alpha();
  const auto g = compose(sample_beta(), a);
  const auto beta = divides(a, g);
  REQUIRE(beta.has_value());
  CHECK(compose(*beta, a) == g);
  CHECK(divides(a, a) == identity_morphism({2, 2}, 2));
  CHECK(divides(identity_morphism({1, 1}, 2), g) == g);
  CHECK_THROWS_AS(divides(a, sample_beta()), std::invalid_argument);
}

TEST_CASE("divides agrees with higman and brute force") {
  const auto s = divides_higman_suite();
  CHECK(s.cases == 65536);
  CHECK(s.violations == 0);
}

TEST_CASE("lex order is total and compatible with composition") {
  const auto homs = enumerate_morphisms({1, 1}, {2, 2}, 2);
  for (const auto& a : homs) {
    for (const auto& b : homs) {
      const auto ab = lex_compare(a, b), ba = lex_compare(b, a);
      CHECK((ab == 0) == (a == b));
      CHECK((ab < 0) == (ba > 0));
    }
  }
  std::mt19937_64 rng(4);
  for (int k = 0; k < 500; ++k) {
    const auto a = random_morphism({1, 1}, {2, 2}, 2, rng), a2 = random_morphism({1, 1}, {2, 2}, 2, rng);
    const auto b = random_morphism({2, 2}, {3, 3}, 2, rng);
    if (lex_compare(a, a2) < 0) CHECK(lex_compare(compose(b, a), compose(b, a2)) < 0);
  }
}

TEST_CASE("symmetric group action") {
  std::mt19937_64 rng(5);
  CHECK(sigma_axioms_suite(rng, 1000).violations == 0);
  CHECK(sigma_composition_suite(rng, 1000).violations == 0);

  // sigma = transposition of target slots 0 and 2 in the composite example.
  const auto g = compose(sample_beta(), sample_alpha());
  const auto act = sigma_act({2, 1, 0}, g);
  CHECK(act.morphism.alpha1 == std::vector<std::uint32_t>{0});
  CHECK(act.morphism.alpha2 == std::vector<ExponentVector>{{1, 1}, {2, 0}});
  CHECK(act.tau == Permutation{0});
  CHECK_THROWS(sigma_act({0, 1}, g));
}

TEST_CASE("symmetrization is a projector") {
  std::mt19937_64 rng(6);
  CHECK(symmetrization_suite(rng, 300).violations == 0);

  const auto g = compose(sample_beta(), sample_alpha());
  const auto p = symmetrize(FormalCombo::of(g));
  CHECK(is_invariant(p));
  CHECK_FALSE(is_invariant(FormalCombo::of(g)));
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) total += c;
  CHECK(total == 1);
  CHECK(p.terms().size() == 6);
}

TEST_CASE("hom counts") {
  CHECK(hom_count({2, 3}, {2, 3}, 3) == 1);
  CHECK(hom_count({0, 0}, {2, 3}, 2) == 27);
  CHECK(hom_count({2, 1}, {1, 1}, 2) == 0);
  CHECK(hom_count({1, 1}, {2, 2}, 2) == 2 * 3 * 2);
  CHECK(hom_count_suite().violations == 0);
}
