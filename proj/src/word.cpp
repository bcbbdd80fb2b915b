#include "richlab/word.hpp"

#include <algorithm>

namespace richlab {

Word reverse(const Word& w) {
  std::vector<Symbol> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  return Word(std::move(out), w.alphabet_size());
}

bool is_palindrome(std::span<const Symbol> s) {
  for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j) {
    if (s[i] != s[j - 1]) return false;
  }
  return true;
}

bool is_palindrome(const Word& w) { return is_palindrome(w.symbols()); }

Word trim(const Word& w) {
  if (w.size() <= 2) return Word(w.alphabet_size());
  return w.factor(1, w.size() - 2);
}

Word concat(const Word& a, const Word& b) {
  std::vector<Symbol> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out), std::max(a.alphabet_size(), b.alphabet_size()));
}

FactorSet factors(const Word& w, std::size_t n) {
  FactorSet out{n, {}};
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.factors.insert(w.factor(i, n));
  return out;
}

FactorSet palindromic_factors(const Word& w, std::size_t n) {
  FactorSet out{n, {}};
  if (n > w.size()) return out;
  auto s = w.symbols();
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    if (is_palindrome(s.subspan(i, n))) out.factors.insert(w.factor(i, n));
  }
  return out;
}

bool is_reversal_closed(const FactorSet& s) {
  return std::all_of(s.factors.begin(), s.factors.end(),
                     [&](const Word& u) { return s.contains(reverse(u)); });
}

bool is_factor(const Word& w, const Word& u) {
  if (u.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

std::vector<std::size_t> factor_counts_by_length(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> counts(n + 1, 0);
  counts[0] = 1;
  if (n == 0) return counts;

  // Prefix doubling.
  std::vector<std::size_t> sa(n), rank(n), tmp(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = i;
    rank[i] = w[i];
  }
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair<std::size_t, std::size_t>(rank[i], i + k < n ? rank[i + k] + 1 : 0);
    };
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    rank = tmp;
    if (rank[sa[n - 1]] == n - 1 || k >= n) break;
  }

  // Kasai LCP; lcp[r] is shared with the suffix ranked r-1.
  std::vector<std::size_t> lcp(n, 0);
  for (std::size_t i = 0, h = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }

  // The suffix at rank r starts a new length-m factor for lcp[r] < m <= |suffix|.
  std::vector<std::ptrdiff_t> diff(n + 2, 0);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t len = n - sa[r];
    if (lcp[r] < len) {
      ++diff[lcp[r] + 1];
      --diff[len + 1];
    }
  }
  std::ptrdiff_t run = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    run += diff[m];
    counts[m] = static_cast<std::size_t>(run);
  }
  return counts;
}

std::string to_text(const Word& w) {
  std::string out;
  for (Symbol s : w) {
    if (s < 10) {
      out += static_cast<char>('0' + s);
    } else if (s < 36) {
      out += static_cast<char>('a' + (s - 10));
    } else {
      out += "[" + std::to_string(s) + "]";
    }
  }
  return out;
}

std::size_t mirror(std::size_t n, std::size_t j) {
  if (j < 1 || j > n) throw std::out_of_range("mirror: index outside [1, n]");
  return n - j + 1;
}

}  // namespace richlab
