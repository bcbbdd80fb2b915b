#pragma once

#include <random>
#include <string>
#include <vector>

#include "richlab/enumeration.hpp"
#include "richlab/text_format.hpp"
#include "richlab/word.hpp"

namespace testing {

inline richlab::Word W(const std::string& text) { return richlab::Alphabet().parse(text); }

inline richlab::Word Wq(const std::string& text, unsigned q) { return W(text).with_alphabet(q); }

inline std::string T(const richlab::Word& w) { return richlab::to_text(w); }

inline richlab::Word random_word(std::mt19937_64& rng, unsigned q, std::size_t len) {
  std::uniform_int_distribution<unsigned> d(0, q - 1);
  std::vector<richlab::Symbol> s(len);
  for (auto& x : s) x = static_cast<richlab::Symbol>(d(rng));
  return richlab::Word(std::move(s), q);
}

inline std::vector<richlab::Word> all_words(unsigned q, std::size_t len) {
  std::vector<richlab::Word> out;
  std::vector<richlab::Symbol> d(len, 0);
  for (;;) {
    out.emplace_back(d, q);
    std::size_t i = len;
    while (i > 0 && d[i - 1] + 1u == q) d[--i] = 0;
    if (i == 0) break;
    ++d[i - 1];
  }
  return out;
}

inline std::vector<richlab::Word> rich_words_upto(unsigned q, std::size_t max_len) {
  std::vector<richlab::Word> out;
  richlab::enumerate_rich_upto(q, max_len, [&](const richlab::Word& w) { out.push_back(w); });
  return out;
}

// Strings of one set, sorted, for readable comparisons.
template <typename Set>
std::vector<std::string> texts(const Set& s) {
  std::vector<std::string> out;
  for (const auto& w : s) out.push_back(richlab::to_text(w));
  return out;
}

}  // namespace testing
