#include "richlab/oracle.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace richlab::oracle {

namespace {

bool window_is_palindrome(const Word& w, std::size_t pos, std::size_t len) {
  for (std::size_t t = 0; t < len / 2; ++t) {
    if (w[pos + t] != w[pos + len - 1 - t]) return false;
  }
  return true;
}

void guard(const Word& w) {
  if (w.size() > max_word_length()) {
    throw LimitExceeded("oracle: word length " + std::to_string(w.size()) + " exceeds limit " +
                        std::to_string(max_word_length()));
  }
}

std::size_t count_occurrences(const Word& r, const Word& u) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + u.size() <= r.size(); ++i) {
    bool match = true;
    for (std::size_t t = 0; t < u.size() && match; ++t) match = r[i + t] == u[t];
    count += match ? 1 : 0;
  }
  return count;
}

bool occurs_at(const Word& w, const Word& u, std::size_t pos) {
  if (pos + u.size() > w.size()) return false;
  for (std::size_t t = 0; t < u.size(); ++t) {
    if (w[pos + t] != u[t]) return false;
  }
  return true;
}

}  // namespace

std::size_t max_word_length() {
  if (const char* env = std::getenv("RICHLAB_MAX_WORD_LEN")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 5000;
}

std::set<Word> palindrome_set(const Word& w) {
  guard(w);
  std::set<Word> out;
  out.insert(Word(w.alphabet_size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      if (window_is_palindrome(w, i, len)) out.insert(w.factor(i, len));
    }
  }
  return out;
}

bool is_rich(const Word& w) { return palindrome_set(w).size() == w.size() + 1; }

Word longest_palindromic_suffix(const Word& w) {
  guard(w);
  for (std::size_t len = w.size(); len > 0; --len) {
    if (window_is_palindrome(w, w.size() - len, len)) return w.factor(w.size() - len, len);
  }
  return Word(w.alphabet_size());
}

Word longest_proper_palindromic_suffix(const Word& w) {
  guard(w);
  for (std::size_t len = w.size() > 0 ? w.size() - 1 : 0; len > 0; --len) {
    if (window_is_palindrome(w, w.size() - len, len)) return w.factor(w.size() - len, len);
  }
  return Word(w.alphabet_size());
}

std::set<SwitchRecord> gamma(const Word& w, std::size_t n) {
  guard(w);
  std::set<SwitchRecord> out;
  if (n <= 2) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    const Symbol a = w[i];
    const Symbol b = w[i + n - 1];
    if (a != b && window_is_palindrome(w, i + 1, n - 2)) out.insert({a, w.factor(i + 1, n - 2), b});
  }
  return out;
}

std::set<Word> complete_returns(const Word& w, const Word& u) {
  guard(w);
  std::set<Word> out;
  if (u.empty()) return out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!occurs_at(w, u, i)) continue;
    for (std::size_t end = i + u.size() + 1; end <= w.size(); ++end) {
      if (end < u.size() || !occurs_at(w, u, end - u.size())) continue;
      Word r = w.factor(i, end - i);
      if (count_occurrences(r, u) == 2) out.insert(std::move(r));
    }
  }
  return out;
}

Word palindromic_closure(const Word& w) {
  guard(w);
  const std::size_t len = w.size();
  for (std::size_t total = len; total <= 2 * len; ++total) {
    std::vector<Symbol> cand(w.begin(), w.end());
    for (std::size_t i = len; i < total; ++i) cand.push_back(w[total - 1 - i]);
    Word c(std::move(cand), w.alphabet_size());
    if (window_is_palindrome(c, 0, c.size())) return c;
  }
  return w;  // unreachable: total = 2|w| always gives w w^R
}

std::uint64_t count_rich(unsigned q, std::size_t n) {
  std::vector<Symbol> digits(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    if (is_rich(Word(digits, q))) ++count;
    std::size_t i = 0;
    while (i < n && digits[i] + 1u == q) digits[i++] = 0;
    if (i == n) break;
    ++digits[i];
  }
  return count;
}

}  // namespace richlab::oracle
