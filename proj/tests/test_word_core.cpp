#include <doctest.h>

#include <random>

#include "richlab/word.hpp"
#include "support.hpp"

using namespace richlab;
using namespace testing;

TEST_CASE("word construction validates the alphabet") {
  CHECK_THROWS_AS(Word({0, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Word(0u), std::invalid_argument);
  CHECK_THROWS_AS(Word(257u), std::invalid_argument);
  Word w({0, 1}, 2);
  CHECK_THROWS_AS(w.push_back(2), std::invalid_argument);
  CHECK(Word({1, 0}, 2) == Word({1, 0}, 5));
  CHECK(Word({0}, 2) < Word({0, 0}, 2));
}

TEST_CASE("factor uses 0-based positions") {
  const Word w = W("112350");
  CHECK(T(w.factor(1, 3)) == "123");
  CHECK(w.factor(6, 0).empty());
  CHECK_THROWS_AS(w.factor(4, 3), std::out_of_range);
}

TEST_CASE("reverse") {
  CHECK(T(reverse(W("112350"))) == "053211");
  CHECK(reverse(W("")).empty());
  CHECK(T(reverse(W("12321"))) == "12321");
}

TEST_CASE("is_palindrome") {
  CHECK(is_palindrome(W("112211")));
  CHECK_FALSE(is_palindrome(W("110")));
  CHECK(is_palindrome(W("")));
  CHECK(is_palindrome(W("7")));
}

TEST_CASE("trim") {
  CHECK(T(trim(W("01123501"))) == "112350");
  CHECK(trim(W("2")).empty());
  CHECK(trim(W("")).empty());
  CHECK(T(trim(W("344"))) == "4");
}

TEST_CASE("factors and palindromic factors of the binary example") {
  const Word w = W("1100100010011001010");
  const FactorSet f3 = factors(w, 3);
  CHECK(f3.size() == 7);
  CHECK(texts(f3.factors) == std::vector<std::string>{"000", "001", "010", "011", "100", "101", "110"});
  CHECK(factors(w, 4).size() == 10);
  CHECK(texts(palindromic_factors(w, 3).factors) == std::vector<std::string>{"000", "010", "101"});
  CHECK(texts(palindromic_factors(w, 4).factors) == std::vector<std::string>{"0110", "1001"});
  CHECK(factors(W("012"), 5).size() == 0);
  CHECK(factors(W(""), 0).size() == 1);
  CHECK(factors(W("012"), 0).contains(Word()));
}

TEST_CASE("length-7 palindromes of the long switch example") {
  const Word w = W("2110112333211011454110116110116778776");
  // 0116110 (offset 21) sits inside 110116110116.
  CHECK(texts(palindromic_factors(w, 7).factors) ==
        std::vector<std::string>{"0116110", "1145411", "1233321", "2110112", "6110116", "6778776"});
  CHECK(texts(palindromic_factors(w, 5).factors) ==
        std::vector<std::string>{"11011", "11611", "14541", "23332", "77877"});
}

TEST_CASE("mirror") {
  CHECK(mirror(10, 3) == 8);
  CHECK(mirror(9, 5) == 5);
  CHECK(mirror(10, 8) == 3);
  CHECK_THROWS_AS(mirror(10, 0), std::out_of_range);
  CHECK_THROWS_AS(mirror(10, 11), std::out_of_range);
}

TEST_CASE("is_reversal_closed") {
  CHECK(is_reversal_closed(factors(W("1100100010011001010"), 4)));
  FactorSet s{3, {W("110")}};
  CHECK_FALSE(is_reversal_closed(s));
  CHECK(is_reversal_closed(FactorSet{}));
}

TEST_CASE("to_text") {
  CHECK(to_text(Word({0, 9, 10, 35}, 36)) == "09az");
  CHECK(to_text(Word({36}, 40)) == "[36]");
}

TEST_CASE("property: reverse is an involution and trim keeps palindromes") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const unsigned q = 1 + static_cast<unsigned>(rng() % 4);
    const Word w = random_word(rng, q, rng() % 30);
    CHECK(reverse(reverse(w)) == w);
    const Word p = concat(w, reverse(w));
    REQUIRE(is_palindrome(p));
    if (p.size() >= 2) CHECK(is_palindrome(trim(p)));
  }
}

TEST_CASE("property: factor set sizes and containment") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const unsigned q = 1 + static_cast<unsigned>(rng() % 4);
    const Word w = random_word(rng, q, 1 + rng() % 40);
    const auto counts = factor_counts_by_length(w);
    REQUIRE(counts.size() == w.size() + 1);
    for (std::size_t n = 0; n <= w.size(); ++n) {
      const FactorSet f = factors(w, n);
      CHECK(counts[n] == f.size());
      if (n > 0) {
        double qn = 1;
        for (std::size_t k = 0; k < n; ++k) qn *= q;
        CHECK(f.size() <= w.size() - n + 1);
        CHECK(static_cast<double>(f.size()) <= qn);
      }
      for (const Word& p : palindromic_factors(w, n).factors) {
        CHECK(f.contains(p));
        CHECK(is_factor(w, p));
      }
    }
  }
}

TEST_CASE("property: mirror is an involution") {
  for (std::size_t n = 1; n <= 40; ++n) {
    for (std::size_t j = 1; j <= n; ++j) CHECK(mirror(n, mirror(n, j)) == j);
  }
}
