#include <doctest.h>

#include <random>

#include "richlab/palindromic_index.hpp"
#include "richlab/rich_structures.hpp"
#include "richlab/text_format.hpp"
#include "support.hpp"

using namespace richlab;
using namespace testing;

TEST_CASE("default alphabet reads digits and letters by value") {
  const Word w = Alphabet().parse("09az");
  CHECK(w.alphabet_size() == 36);
  CHECK(w[1] == 9);
  CHECK(w[2] == 10);
  CHECK(w[3] == 35);
  CHECK(Alphabet().parse("000").alphabet_size() == 2);
  CHECK(Alphabet().parse("").alphabet_size() == 2);
  CHECK(Alphabet().format(w) == "09az");
}

TEST_CASE("explicit alphabet") {
  const Alphabet ab("ab");
  const Word w = ab.parse("abba");
  CHECK(w.alphabet_size() == 2);
  CHECK(T(w) == "0110");
  CHECK(ab.format(w) == "abba");
  CHECK(Alphabet("xyz").parse("x").alphabet_size() == 3);
  CHECK_THROWS_AS(Alphabet("aba"), std::invalid_argument);
}

TEST_CASE("parse errors name the character") {
  try {
    Alphabet().parse("11!0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offending() == '!');
    CHECK(e.position() == 2);
    CHECK(std::string(e.what()).find("'!'") != std::string::npos);
  }
  CHECK_THROWS_AS(Alphabet("ab").parse("abc"), ParseError);
  CHECK_THROWS_AS(Alphabet().parse("A"), ParseError);
}

TEST_CASE("analyze the binary example") {
  const AnalysisReport r = analyze(W("1100100010011001010"));
  CHECK(r.rich);
  CHECK(r.defect == 0);
  CHECK(r.palindrome_counts[3] == 3);
  CHECK(r.palindrome_counts[4] == 2);
  CHECK(r.factor_counts[3] == 7);
  CHECK(r.factor_counts[4] == 10);
  CHECK(r.word == "1100100010011001010");
}

TEST_CASE("analyze the empty word") {
  const AnalysisReport r = analyze(W(""));
  CHECK(r.rich);
  CHECK(r.defect == 0);
  CHECK(r.big_gamma == 1);
  CHECK(r.lps.empty());
}

TEST_CASE("analyze the switch example") {
  const AnalysisReport r = analyze(W("5112211311001131133114111146"));
  CHECK(r.gamma_counts[8] == 3);
}

TEST_CASE("property: reports agree with the library and survive JSON") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, 2 + static_cast<unsigned>(rng() % 3), rng() % 30);
    const AnalysisReport r = analyze(w);
    REQUIRE(r.factor_counts.size() == w.size() + 1);
    for (std::size_t n = 0; n <= w.size(); ++n) {
      CHECK(r.factor_counts[n] == factors(w, n).size());
      CHECK(r.palindrome_counts[n] == palindromic_factors(w, n).size());
      CHECK(r.gamma_counts[n] == gamma(w, n).size());
    }
    CHECK(r.big_gamma == big_gamma(w, w.size()));
    CHECK(r.rich == is_rich(w));
    CHECK(r.defect == defect(w));
    CHECK(r.lpps == T(lpps(w)));
    CHECK(r.lppp == T(lppp(w)));
    const nlohmann::json j = r;
    CHECK(j.get<AnalysisReport>() == r);
    CHECK(nlohmann::json::parse(j.dump()).get<AnalysisReport>() == r);
  }
}
