#pragma once

// Brute-force reference implementations written straight from the
// definitions. This module depends on the Word type only; it shares no code
// with the palindromic index or the switch machinery it is used to check.

#include <cstdint>
#include <set>
#include <stdexcept>

#include "richlab/switch_record.hpp"
#include "richlab/word.hpp"

namespace richlab::oracle {

class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Maximum word length the oracles accept: RICHLAB_MAX_WORD_LEN if set,
/// otherwise 5000.
std::size_t max_word_length();

/// Every distinct palindromic factor, the empty word included.
std::set<Word> palindrome_set(const Word& w);
bool is_rich(const Word& w);
Word longest_palindromic_suffix(const Word& w);

std::set<SwitchRecord> gamma(const Word& w, std::size_t n);
/// Longest proper palindromic suffix, by trying every proper suffix.
Word longest_proper_palindromic_suffix(const Word& w);

/// Complete returns found by counting occurrences of u inside candidate factors.
std::set<Word> complete_returns(const Word& w, const Word& u);

/// Shortest palindrome with prefix w, found by trying every total length from
/// |w| to 2|w|.
Word palindromic_closure(const Word& w);

/// Number of rich words of length n over [0, q), by filtering all q^n words.
std::uint64_t count_rich(unsigned q, std::size_t n);

}  // namespace richlab::oracle
