#pragma once

// Evaluation of the palindromic/factor complexity inequalities for rich words
// on concrete inputs.
//
// Every check returns a BoundReport with lhs <= rhs as the claim being tested
// (for ">=" statements the sides are swapped so that lhs is the smaller one).
// Right-hand sides with a real exponent log2(n) are compared in the log
// domain; anything that is not clearly dominated there is re-evaluated with
// 100-digit floats, and integral powers up to 2^512 are evaluated exactly.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "richlab/palindromic_index.hpp"
#include "richlab/word.hpp"

namespace richlab {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundId { B1 = 1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11, B12 };

inline constexpr std::array<BoundId, 12> kAllBounds = {
    BoundId::B1, BoundId::B2, BoundId::B3, BoundId::B4,  BoundId::B5,  BoundId::B6,
    BoundId::B7, BoundId::B8, BoundId::B9, BoundId::B10, BoundId::B11, BoundId::B12};

std::string to_string(BoundId id);
BoundId parse_bound_id(const std::string& text);
std::string bound_statement(BoundId id);

struct BoundReport {
  BoundId bound_id = BoundId::B1;
  std::size_t word_length = 0;
  std::size_t n = 0;
  unsigned q = 0;
  BigInt lhs;
  bool rhs_exact = true;
  BigInt rhs_value;       // meaningful when rhs_exact
  double rhs_log2 = 0.0;  // log2 of the right-hand side; -inf when it is 0
  bool holds = false;
  std::optional<bool> equality;  // B8 on rich words
  bool covered = true;           // false when a theorem hypothesis was bypassed with force
  bool escalated = false;        // log-domain margin was too thin, re-checked at high precision
  std::string parameter;         // r for B2
  std::string expression;        // evaluated instance, e.g. "3+2 = 10-7+2"
  std::string citation;          // the inequality in symbols

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);

enum class PreconditionKind { kNotRich, kNotReversalClosed, kTooShort, kOrderOutOfRange };

class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(PreconditionKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  PreconditionKind kind() const noexcept { return kind_; }

 private:
  PreconditionKind kind_;
};

struct CheckOptions {
  /// Evaluate bounds on non-rich words anyway; reports get covered = false.
  bool force = false;
};

/// Per-length counts of one word, computed once and shared by the checks.
class WordProfile {
 public:
  explicit WordProfile(Word w);

  const Word& word() const noexcept { return word_; }
  unsigned q() const noexcept { return word_.alphabet_size(); }
  std::size_t length() const noexcept { return word_.size(); }
  bool rich() const noexcept { return rich_; }

  /// |F(w,n)|, |F_p(w,n)|, |gamma(w,n)|; zero beyond |w|.
  std::uint64_t factor_count(std::size_t n) const;
  std::uint64_t palindrome_count(std::size_t n) const;
  std::uint64_t gamma_count(std::size_t n) const;
  /// Gamma(w,n) = max(1, max_{i<=n} |gamma(w,i)|).
  std::uint64_t big_gamma(std::size_t n) const;
  /// max_{0<=j<=n} |F_p(w,j)|.
  std::uint64_t max_palindrome_count(std::size_t n) const;
  /// Whether F(w,n) is closed under reversal (cached).
  bool reversal_closed(std::size_t n) const;

 private:
  Word word_;
  bool rich_;
  std::vector<std::uint64_t> factor_counts_;
  std::vector<std::uint64_t> palindrome_counts_;
  std::vector<std::uint64_t> gamma_counts_;
  mutable std::vector<signed char> closed_cache_;
};

BoundReport check_switch_palindrome_bound(const WordProfile& p, std::size_t n, CheckOptions opts = {});
BoundReport check_upsilon_bound(const WordProfile& p, std::size_t n, const Word& r, CheckOptions opts = {});
BoundReport check_gamma_palindrome_bound(const WordProfile& p, std::size_t n, CheckOptions opts = {});
BoundReport check_gamma_recursion(const WordProfile& p, std::size_t n, CheckOptions opts = {});
BoundReport check_gamma_closed_form(const WordProfile& p, std::size_t n, CheckOptions opts = {});
BoundReport check_palindromic_complexity_bound(const WordProfile& p, std::size_t n, CheckOptions opts = {});
BoundReport check_factor_complexity_bound(const WordProfile& p, std::size_t n, CheckOptions opts = {});
BoundReport check_reversal_inequality(const WordProfile& p, std::size_t n);
BoundReport check_factor_vs_palindrome_bound(const WordProfile& p, std::size_t n, CheckOptions opts = {});
std::array<BoundReport, 2> check_final_bounds(const WordProfile& p, std::size_t n, CheckOptions opts = {});
BoundReport check_ceil_product_lemma(std::uint64_t n);

// Convenience overloads that build the profile.
BoundReport check_switch_palindrome_bound(const Word& w, std::size_t n, CheckOptions opts = {});
BoundReport check_upsilon_bound(const Word& w, std::size_t n, const Word& r, CheckOptions opts = {});
BoundReport check_gamma_palindrome_bound(const Word& w, std::size_t n, CheckOptions opts = {});
BoundReport check_gamma_recursion(const Word& w, std::size_t n, CheckOptions opts = {});
BoundReport check_gamma_closed_form(const Word& w, std::size_t n, CheckOptions opts = {});
BoundReport check_palindromic_complexity_bound(const Word& w, std::size_t n, CheckOptions opts = {});
BoundReport check_factor_complexity_bound(const Word& w, std::size_t n, CheckOptions opts = {});
BoundReport check_reversal_inequality(const Word& w, std::size_t n);
BoundReport check_factor_vs_palindrome_bound(const Word& w, std::size_t n, CheckOptions opts = {});
std::array<BoundReport, 2> check_final_bounds(const Word& w, std::size_t n, CheckOptions opts = {});

/// Split of trim(gamma(w,n)) by whether the longest proper palindromic suffix
/// reaches half the length.
struct TrimGammaPartition {
  std::set<Word> delta_rho;   // 2|lpps(v)| >= |v|
  std::set<Word> delta_lpps;  // the rest
};
TrimGammaPartition diagnostic_trim_gamma_partition(const Word& w, std::size_t n, CheckOptions opts = {});

/// Every report admissible for one word and one bound: all orders n the
/// hypotheses allow, all r for B2. Instances whose hypotheses fail
/// (reversal closure for B8/B9) are skipped, not reported.
std::vector<BoundReport> evaluate_bound(const WordProfile& p, BoundId id, CheckOptions opts = {});

/// rhs - lhs as a double (may be +inf for astronomically large sides).
double slack(const BoundReport& r);

}  // namespace richlab
