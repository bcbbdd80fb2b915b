#include <doctest.h>

#include <cstdlib>

#include "richlab/crosscheck.hpp"
#include "richlab/oracle.hpp"
#include "support.hpp"

using namespace richlab;
using namespace testing;

TEST_CASE("oracle palindrome sets") {
  CHECK(oracle::palindrome_set(W("1100100010011001010")).size() == 20);
  const auto empty = oracle::palindrome_set(W(""));
  REQUIRE(empty.size() == 1);
  CHECK(empty.begin()->empty());
  CHECK(oracle::palindrome_set(W("00110100")).size() < 9);
}

TEST_CASE("oracle richness") {
  CHECK(oracle::is_rich(W("1100100010011001010")));
  CHECK_FALSE(oracle::is_rich(W("00110100")));
  CHECK(oracle::is_rich(W("")));
}

TEST_CASE("oracle gamma on the switch examples") {
  std::vector<std::string> got;
  for (const auto& s : oracle::gamma(W("5112211311001131133114111146"), 8)) got.push_back(T(s.as_word()));
  CHECK(got == std::vector<std::string>{"14111146", "31133114", "51122113"});
  got.clear();
  for (const auto& s : oracle::gamma(W("2110112333211011454110116110116778776"), 7)) got.push_back(T(s.as_word()));
  CHECK(got == std::vector<std::string>{"2110114", "4110116"});
  CHECK(oracle::gamma(W("0110"), 2).empty());
}

TEST_CASE("oracle closure, returns and affixes") {
  CHECK(T(oracle::palindromic_closure(W("011"))) == "0110");
  CHECK(T(oracle::palindromic_closure(W("12321"))) == "12321");
  CHECK(oracle::complete_returns(W("321234321252126"), W("212")).count(W("212343212")) == 1);
  CHECK(oracle::complete_returns(W("0110"), W("01")).empty());
  CHECK(T(oracle::longest_palindromic_suffix(W("0110100"))) == "00");
  CHECK(oracle::longest_proper_palindromic_suffix(W("5")).empty());
  CHECK(oracle::count_rich(2, 8) == 252);
}

TEST_CASE("oracle length limit") {
  ::setenv("RICHLAB_MAX_WORD_LEN", "10", 1);
  CHECK(oracle::max_word_length() == 10);
  CHECK_THROWS_AS(oracle::palindrome_set(W("01010101010")), oracle::LimitExceeded);
  ::unsetenv("RICHLAB_MAX_WORD_LEN");
  CHECK(oracle::max_word_length() == 5000);
}

TEST_CASE("cell specs") {
  const auto cells = parse_cells("q2:len50:1000,q3:len20:7");
  REQUIRE(cells.size() == 2);
  CHECK(cells[1].q == 3);
  CHECK(cells[1].length == 20);
  CHECK(cells[1].count == 7);
  CHECK_THROWS_AS(parse_cells("q2:len50"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cells(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_cells("q0:len5:5"), std::invalid_argument);
}

TEST_CASE("crosscheck is deterministic and clean") {
  const auto cells = parse_cells("q2:len30:200,q4:len40:100");
  const CrossCheckResult a = crosscheck_random(cells, 42);
  const CrossCheckResult b = crosscheck_random(cells, 42);
  CHECK(a.mismatches == 0);
  CHECK(a.words == 300);
  CHECK(a.comparisons == b.comparisons);
  const CrossCheckResult e = crosscheck_exhaustive(3, 6);
  CHECK(e.mismatches == 0);
  CHECK(e.words == 3 + 9 + 27 + 81 + 243 + 729);
}

TEST_CASE("crosscheck with a return target that does not occur") {
  const CrossCheckResult r = crosscheck_word(W("0101"), {W("11")});
  CHECK(r.mismatches == 0);
  CHECK(r.comparisons > 0);
}
