#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "richlab/switch_record.hpp"
#include "richlab/word.hpp"

namespace richlab {

/// Factors of w with exactly two occurrences of u, one as prefix and one as
/// suffix. Empty when u does not occur twice.
std::set<Word> complete_returns(const Word& w, const Word& u);

/// gamma(w, n): the length-n u-switches of w. Empty for n <= 2.
std::set<SwitchRecord> gamma(const Word& w, std::size_t n);

/// |gamma(w,n)| for every n in 0..|w|. Each centre contributes at most one
/// switch occurrence (its maximal palindrome widened by one), so this is
/// linear in the number of occurrences.
std::vector<std::size_t> gamma_counts_by_length(const Word& w);

/// {(u,a), (u,b) : aub in gamma(w, n)}.
std::set<SwitchPair> gamma_bar(const Word& w, std::size_t n);

/// trim(gamma(w, n)): the switch cores of length n - 2.
std::set<Word> switch_cores(const Word& w, std::size_t n);

/// Switch cores of length n whose longest proper palindromic suffix is r.
std::set<Word> upsilon(const Word& w, std::size_t n, const Word& r);

/// All nonempty Upsilon classes of length n, keyed by lpps.
std::map<Word, std::set<Word>> upsilon_partition(const Word& w, std::size_t n);

/// max(1, max_{0 <= i <= n} |gamma(w, i)|).
std::size_t big_gamma(const Word& w, std::size_t n);

enum class RhoError { kNotPalindrome, kNotPrefix, kLengthWindow, kInconsistent };

class RhoPreconditionError : public std::invalid_argument {
 public:
  RhoPreconditionError(RhoError code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  RhoError code() const noexcept { return code_; }

 private:
  RhoError code_;
};

struct RhoResult {
  Word rho;             // palindrome
  Word rho_bar;         // v[k, center]
  std::size_t v_length;
  std::size_t center;   // 1-based, ceil(|v| / 2)
  std::size_t k;        // 1-based start of rho_bar
  bool u_even;          // |u| even iff |rho| even
};

/// Compresses a palindrome v with a palindromic prefix u, |v|/2 <= |u| < |v|,
/// into a short palindrome that determines v together with |v|.
RhoResult rho_build(const Word& u, const Word& v);

/// Rebuilds v from rho and |v|. Throws RhoPreconditionError(kInconsistent)
/// when no valid (u, v) pair maps to rho.
Word rho_invert(const Word& rho, std::size_t v_length);

/// Shortest palindrome with prefix w.
Word palindromic_closure(const Word& w);

/// w x w^R, where x is the fresh symbol q; the result has alphabet size q+1.
Word sentinel_augment(const Word& w);

/// Rauzy graph of order n: vertices F(w,n), one edge per (n+1)-factor from its
/// length-n prefix to its length-n suffix.
struct RauzyGraph {
  std::size_t order = 0;
  std::vector<Word> vertices;                              // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex indexes

  std::size_t vertex_index(const Word& u) const;
};

RauzyGraph rauzy_graph(const Word& w, std::size_t n);
bool is_strongly_connected(const RauzyGraph& g);

}  // namespace richlab
