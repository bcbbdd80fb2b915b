#include <doctest.h>

#include <cmath>
#include <random>

#include "richlab/bound_suite.hpp"
#include "richlab/rich_structures.hpp"
#include "richlab/sweep.hpp"
#include "support.hpp"

using namespace richlab;
using namespace testing;

namespace {

const char* const kBinaryWord = "1100100010011001010";

PreconditionKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PreconditionError& e) {
    return e.kind();
  }
  FAIL("no precondition error");
  return PreconditionKind::kNotRich;
}

}  // namespace

TEST_CASE("bound ids") {
  CHECK(to_string(BoundId::B8) == "B8");
  CHECK(parse_bound_id("B12") == BoundId::B12);
  CHECK(parse_bound_id("b3") == BoundId::B3);
  CHECK_THROWS_AS(parse_bound_id("B13"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bound_id("B01"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bound_id("x"), std::invalid_argument);
  for (BoundId id : kAllBounds) CHECK_FALSE(bound_statement(id).empty());
}

TEST_CASE("profile counts") {
  const WordProfile p(W(kBinaryWord));
  CHECK(p.rich());
  CHECK(p.factor_count(3) == 7);
  CHECK(p.factor_count(4) == 10);
  CHECK(p.palindrome_count(3) == 3);
  CHECK(p.palindrome_count(4) == 2);
  CHECK(p.factor_count(100) == 0);
  CHECK(p.max_palindrome_count(4) == 3);
  CHECK(p.reversal_closed(4));
}

TEST_CASE("B8 equality on the binary example and its sentinel word") {
  const BoundReport r = check_reversal_inequality(W(kBinaryWord), 3);
  CHECK(r.holds);
  REQUIRE(r.equality.has_value());
  CHECK(*r.equality);
  CHECK(r.expression == "3+2 = 10-7+2");
  CHECK(r.lhs == 5);
  CHECK(r.rhs_value == 5);

  const BoundReport s = check_reversal_inequality(sentinel_augment(W(kBinaryWord)), 3);
  CHECK(s.holds);
  CHECK(s.expression == "4+2 = 14-10+2");
}

TEST_CASE("B8 preconditions") {
  CHECK(kind_of([] { check_reversal_inequality(W("0011"), 1); }) == PreconditionKind::kNotReversalClosed);
  CHECK(kind_of([] { check_reversal_inequality(W("010"), 3); }) == PreconditionKind::kTooShort);
  CHECK(kind_of([] { check_reversal_inequality(W("010"), 0); }) == PreconditionKind::kOrderOutOfRange);
}

TEST_CASE("B8 on non-rich palindromes holds without forcing equality") {
  // No binary palindrome shorter than 14 is non-rich.
  for (std::size_t len = 1; len <= 13; ++len) {
    for (const Word& w : all_words(2, len)) {
      if (is_palindrome(w)) REQUIRE(is_rich(w));
    }
  }
  std::size_t unequal = 0;
  for (const Word& w : all_words(2, 14)) {
    if (!is_palindrome(w) || is_rich(w)) continue;
    for (const BoundReport& r : evaluate_bound(WordProfile(w), BoundId::B8)) {
      CHECK(r.holds);
      CHECK_FALSE(r.equality.has_value());
      if (r.lhs != r.rhs_value) ++unequal;
    }
  }
  CHECK(unequal == 4);
  const BoundReport r = check_reversal_inequality(W("00101100110100"), 3);
  CHECK(r.expression == "2+2 <= 10-6+2");
}

TEST_CASE("B9 on the binary example") {
  CHECK(kind_of([] { check_factor_vs_palindrome_bound(W(kBinaryWord), 4); }) ==
        PreconditionKind::kNotReversalClosed);
  const BoundReport r = check_factor_vs_palindrome_bound(W(kBinaryWord), 3);
  CHECK(r.holds);
  CHECK(r.lhs == 7);
  CHECK(r.rhs_value == 10);
  CHECK(r.expression == "7 <= 2*2*3-2*2+2");
  const BoundReport one = check_factor_vs_palindrome_bound(W(kBinaryWord), 1);
  CHECK(one.rhs_value == 2);
}

TEST_CASE("B2 on the upsilon example") {
  const Word w = W("5112211311001131133114");
  CHECK(w.alphabet_size() == 6);
  const BoundReport r = check_upsilon_bound(w, 6, W("11"));
  CHECK(r.holds);
  CHECK(r.lhs == 2);
  CHECK(r.rhs_value == 30);
  const BoundReport e = check_upsilon_bound(w, 6, W("0"));
  CHECK(e.lhs == 0);
  CHECK(e.holds);
}

TEST_CASE("B1 and B3 on small orders") {
  const BoundReport b3 = check_gamma_palindrome_bound(W(kBinaryWord), 1);
  CHECK(b3.holds);
  CHECK(b3.lhs == 2);
  CHECK(b3.rhs_value == 3);
  CHECK(check_switch_palindrome_bound(W(kBinaryWord), 3).holds);
  CHECK(kind_of([] { check_switch_palindrome_bound(W(kBinaryWord), 2); }) == PreconditionKind::kOrderOutOfRange);
  CHECK(check_gamma_palindrome_bound(W("2110112333211011454110116110116778776"), 7).holds);
}

TEST_CASE("B4 and B5") {
  const BoundReport r2 = check_gamma_recursion(W(kBinaryWord), 2);
  CHECK(r2.holds);
  CHECK(r2.lhs == 1);
  CHECK(check_gamma_recursion(W("5112211311001131133114111146"), 8).holds);

  const BoundReport one = check_gamma_closed_form(W(kBinaryWord), 1);
  CHECK(one.holds);
  CHECK(one.lhs == 1);
  CHECK(one.rhs_exact);
  CHECK(one.rhs_value == 1);

  const BoundReport big = check_gamma_closed_form(W("0100101001001010"), 16);
  CHECK(big.holds);
  CHECK(big.rhs_log2 == doctest::Approx(64.0));
  if (big.rhs_exact) CHECK(big.rhs_value == BigInt(1) << 64);
}

TEST_CASE("B6, B7, B10 and B11 on the binary example") {
  const BoundReport b6 = check_palindromic_complexity_bound(W(kBinaryWord), 4);
  CHECK(b6.holds);
  CHECK(b6.lhs == 2);
  const BoundReport b7 = check_factor_complexity_bound(W(kBinaryWord), 4);
  CHECK(b7.holds);
  CHECK(b7.lhs == 10);
  CHECK(check_palindromic_complexity_bound(W(kBinaryWord), 1).lhs == 2);
  CHECK(check_factor_complexity_bound(W(kBinaryWord), 1).rhs_value == 9);
  for (const auto& r : check_final_bounds(W(kBinaryWord), 4)) {
    CHECK(r.holds);
    CHECK(r.lhs == 10);
  }
}

TEST_CASE("B12 ceiling product") {
  const BoundReport one = check_ceil_product_lemma(1);
  CHECK(one.holds);
  CHECK(one.lhs == 1);
  const BoundReport eight = check_ceil_product_lemma(8);
  CHECK(eight.holds);
  CHECK(eight.lhs == 8);
  CHECK(std::exp2(eight.rhs_log2) == doctest::Approx(181.019).epsilon(1e-4));
  const BoundReport sixteen = check_ceil_product_lemma(16);
  CHECK(sixteen.rhs_exact);
  CHECK(sixteen.rhs_value == 4096);
  CHECK(sixteen.lhs == 8 * 4 * 2 * 1);
}

TEST_CASE("property: ceiling product lemma over a range") {
  for (std::uint64_t n = 1; n <= 20000; ++n) REQUIRE(check_ceil_product_lemma(n).holds);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) REQUIRE(check_ceil_product_lemma(1 + rng() % 1000000).holds);
}

TEST_CASE("rich-only bounds reject non-rich words unless forced") {
  const Word w = W("00110100");
  CHECK(kind_of([&] { check_gamma_palindrome_bound(w, 2); }) == PreconditionKind::kNotRich);
  CHECK(kind_of([&] { check_final_bounds(w, 2); }) == PreconditionKind::kNotRich);
  const BoundReport forced = check_gamma_palindrome_bound(w, 2, CheckOptions{true});
  CHECK_FALSE(forced.covered);
  CHECK(check_gamma_palindrome_bound(W(kBinaryWord), 2).covered);
}

TEST_CASE("trim gamma partition") {
  const auto part = diagnostic_trim_gamma_partition(W("5112211311001131133114111146"), 8);
  CHECK(part.delta_lpps.count(W("112211")) == 1);
  CHECK(part.delta_lpps.size() + part.delta_rho.size() == 3);
  const auto none = diagnostic_trim_gamma_partition(W("0000"), 3);
  CHECK(none.delta_rho.empty());
  CHECK(none.delta_lpps.empty());
}

TEST_CASE("report JSON round trip") {
  const WordProfile p(W(kBinaryWord));
  for (BoundId id : kAllBounds) {
    for (const BoundReport& r : evaluate_bound(p, id)) {
      const nlohmann::json j = r;
      const BoundReport back = j.get<BoundReport>();
      REQUIRE(back == r);
      REQUIRE(nlohmann::json(back).dump() == j.dump());
    }
  }
}

TEST_CASE("property: every bound on small rich words") {
  SweepOptions opts;
  opts.q = 2;
  opts.max_len = 10;
  const SweepResult two = run_sweep(opts);
  CHECK(two.clean());
  CHECK(two.words == 1 + 2 + 4 + 8 + 16 + 32 + 64 + 128 + 252 + 488 + 932);
  opts.q = 3;
  opts.max_len = 6;
  const SweepResult three = run_sweep(opts);
  CHECK(three.clean());
  for (const auto& t : two.tallies) {
    CHECK(t.passed == t.evaluated);
    CHECK(t.failed == 0);
  }
  const auto& b8 = two.tallies[7];
  CHECK(b8.equalities == b8.equality_instances);
  CHECK(b8.equality_instances > 0);
}

TEST_CASE("property: partition of switch cores by half-length lpps") {
  for (const Word& w : rich_words_upto(2, 11)) {
    for (std::size_t n = 3; n <= w.size(); ++n) {
      const auto part = diagnostic_trim_gamma_partition(w, n);
      const auto cores = switch_cores(w, n);
      REQUIRE(part.delta_rho.size() + part.delta_lpps.size() == cores.size());
      for (const Word& v : part.delta_rho) REQUIRE(cores.count(v) == 1);
      for (const Word& v : part.delta_lpps) REQUIRE(cores.count(v) == 1);
    }
  }
}

TEST_CASE("property: parallel sweep matches sequential") {
  SweepOptions opts;
  opts.q = 2;
  opts.max_len = 9;
  const SweepResult a = run_sweep(opts);
  opts.jobs = 3;
  const SweepResult b = run_sweep(opts);
  CHECK(sweep_csv(a) == sweep_csv(b));
  CHECK(sweep_json(a) == sweep_json(b));
}
