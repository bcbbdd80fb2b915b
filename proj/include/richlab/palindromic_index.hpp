#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "richlab/word.hpp"

namespace richlab {

/// Palindromic tree (eertree) over a word, built by appending symbols.
///
/// Node 0 is the imaginary root of length -1, node 1 the empty palindrome.
/// Every other node is one distinct nonempty palindromic factor. Appends can
/// be undone with pop_back(), which is what the enumeration DFS relies on.
///
/// A word is rich exactly when every append created a node.
class PalIndex {
 public:
  static constexpr int kImaginaryRoot = 0;
  static constexpr int kEmptyRoot = 1;

  explicit PalIndex(unsigned alphabet_size = 2);

  static PalIndex build(const Word& w);

  /// Appends `c`; returns true iff the longest palindromic suffix of the new
  /// prefix is a palindrome that did not occur before.
  bool push_back(Symbol c);
  void pop_back();

  std::size_t size() const noexcept { return text_.size(); }
  const Word& text() const noexcept { return text_; }

  /// Distinct nonempty palindromic factors of the whole text.
  std::size_t distinct_palindromes() const noexcept { return nodes_.size() - 2; }
  /// Same, for the prefix of length `len` (0 <= len <= size()).
  std::size_t distinct_palindromes_in_prefix(std::size_t len) const;

  bool is_rich() const noexcept { return distinct_palindromes() == size(); }
  std::size_t defect() const noexcept { return size() - distinct_palindromes(); }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  int node_length(int node) const { return nodes_.at(static_cast<std::size_t>(node)).len; }
  int suffix_link(int node) const { return nodes_.at(static_cast<std::size_t>(node)).link; }
  Word node_palindrome(int node) const;

  /// Node of the longest palindromic suffix of the prefix of length `len`;
  /// kEmptyRoot for len == 0.
  int lps_node(std::size_t len) const;

  /// Number of distinct palindromic factors of each length 0..size().
  /// Index 0 counts the empty word.
  std::vector<std::size_t> counts_by_length() const;

  /// All distinct palindromic factors including the empty word.
  std::set<Word> palindromes() const;

 private:
  struct Node {
    int len;
    int link;
    std::size_t first_end;  // 0-based end position of the first occurrence
    std::vector<std::pair<Symbol, int>> edges;
  };
  struct Step {
    int prev_last;
    int parent;  // -1 when no node was created
  };

  int child(int node, Symbol c) const;
  int extendable(int node, std::size_t pos, Symbol c) const;

  Word text_;
  std::vector<Node> nodes_;
  std::vector<Step> history_;
  std::vector<int> lps_by_prefix_;  // entry i: lps node of prefix length i+1
  int last_ = kEmptyRoot;
};

/// O(1) palindrome queries on arbitrary windows after linear preprocessing
/// (Manacher radii).
class PalindromeTable {
 public:
  explicit PalindromeTable(const Word& w);
  /// True iff w[pos, pos+len) is a palindrome (0-based, len may be 0).
  bool is_palindrome(std::size_t pos, std::size_t len) const;

 private:
  std::size_t n_;
  std::vector<std::size_t> odd_;   // odd_[i]: radius of longest odd palindrome centred at i
  std::vector<std::size_t> even_;  // even_[i]: half-length of longest even palindrome centred before i
};

Word lps(const Word& w);
Word lpp(const Word& w);
Word lpps(const Word& w);
Word lppp(const Word& w);
bool is_rich(const Word& w);
std::size_t defect(const Word& w);

}  // namespace richlab
