#pragma once

// Words over a small integer alphabet.
//
// Indexing: storage and every accessor on Word are 0-based. Functions whose
// meaning is positional in the mathematical sense (mirror, the window indexes
// inside rho_build) take 1-based positions and say so. Translate with
// `w[i - 1]` for a 1-based index i; nothing else in the library mixes the two.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace richlab {

using Symbol = std::uint8_t;

inline constexpr unsigned kMaxAlphabetSize = 256;

/// A finite word. The alphabet size is context carried along with the word;
/// equality and ordering look at the symbols only.
class Word {
 public:
  Word() = default;
  explicit Word(unsigned alphabet_size) : alphabet_size_(check_q(alphabet_size)) {}

  Word(std::vector<Symbol> symbols, unsigned alphabet_size)
      : symbols_(std::move(symbols)), alphabet_size_(check_q(alphabet_size)) {
    for (Symbol s : symbols_) {
      if (s >= alphabet_size_) {
        throw std::invalid_argument("symbol " + std::to_string(s) +
                                    " outside alphabet of size " +
                                    std::to_string(alphabet_size_));
      }
    }
  }

  Word(std::initializer_list<Symbol> symbols, unsigned alphabet_size)
      : Word(std::vector<Symbol>(symbols), alphabet_size) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  unsigned alphabet_size() const noexcept { return alphabet_size_; }

  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  /// Contiguous factor starting at 0-based `pos` with `len` symbols.
  Word factor(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw std::out_of_range("factor out of range");
    Word out(alphabet_size_);
    out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                        symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return out;
  }

  void push_back(Symbol s) {
    if (s >= alphabet_size_) throw std::invalid_argument("symbol outside alphabet");
    symbols_.push_back(s);
  }
  void pop_back() { symbols_.pop_back(); }

  Word with_alphabet(unsigned alphabet_size) const {
    return Word(symbols_, alphabet_size);
  }

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  static unsigned check_q(unsigned q) {
    if (q < 1 || q > kMaxAlphabetSize) throw std::invalid_argument("alphabet size must be in [1, 256]");
    return q;
  }

  std::vector<Symbol> symbols_;
  unsigned alphabet_size_ = 2;
};

/// F(w,n): the distinct factors of one fixed length.
struct FactorSet {
  std::size_t length = 0;
  std::set<Word> factors;

  std::size_t size() const noexcept { return factors.size(); }
  bool contains(const Word& u) const { return factors.count(u) != 0; }
};

Word reverse(const Word& w);
bool is_palindrome(const Word& w);
bool is_palindrome(std::span<const Symbol> s);
Word trim(const Word& w);
Word concat(const Word& a, const Word& b);

FactorSet factors(const Word& w, std::size_t n);
FactorSet palindromic_factors(const Word& w, std::size_t n);
bool is_reversal_closed(const FactorSet& s);

/// |F(w,n)| for every n in 0..|w|, from a suffix array in O(|w| log^2 |w|).
std::vector<std::size_t> factor_counts_by_length(const Word& w);
bool is_factor(const Word& w, const Word& u);

/// Default text form: symbols 0-9 as digits, 10-35 as a-z, larger ones as
/// "[k]".
std::string to_text(const Word& w);

/// mirror(n, j) = n - j + 1 on 1-based positions 1 <= j <= n.
std::size_t mirror(std::size_t n, std::size_t j);

}  // namespace richlab

template <>
struct std::hash<richlab::Word> {
  std::size_t operator()(const richlab::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto s : w) h = (h ^ s) * 1099511628211ULL;
    return h ^ w.size();
  }
};
