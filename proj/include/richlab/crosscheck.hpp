#pragma once

// Differential testing of the fast paths against the brute-force oracles.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "richlab/word.hpp"

namespace richlab {

struct CrossCheckCell {
  unsigned q = 2;
  std::size_t length = 20;
  std::size_t count = 1000;
};

struct CrossCheckResult {
  std::uint64_t words = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> details;  // first few mismatches

  void merge(const CrossCheckResult& other);
};

/// Compares palindrome sets, richness, lps/lpps, gamma at every order,
/// closure, and complete returns for the given u's.
CrossCheckResult crosscheck_word(const Word& w, const std::vector<Word>& return_targets);

/// Every word over [0, q) of length 1..max_len; complete returns are checked
/// for every distinct factor of length <= 3.
CrossCheckResult crosscheck_exhaustive(unsigned q, std::size_t max_len);

/// Random words per cell; complete returns are checked for a few sampled
/// factors of each word.
CrossCheckResult crosscheck_random(const std::vector<CrossCheckCell>& cells, std::uint64_t seed);

/// Parses "q2:len50:1000,q3:len20:100".
std::vector<CrossCheckCell> parse_cells(const std::string& text);

}  // namespace richlab
