#include "richlab/palindromic_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace richlab {

PalIndex::PalIndex(unsigned alphabet_size) : text_(alphabet_size) {
  nodes_.push_back({-1, kImaginaryRoot, 0, {}});
  nodes_.push_back({0, kImaginaryRoot, 0, {}});
}

PalIndex PalIndex::build(const Word& w) {
  PalIndex idx(w.alphabet_size());
  for (Symbol c : w) idx.push_back(c);
  return idx;
}

int PalIndex::child(int node, Symbol c) const {
  for (const auto& [s, to] : nodes_[static_cast<std::size_t>(node)].edges) {
    if (s == c) return to;
  }
  return -1;
}

// Walks suffix links from `node` until the palindrome can be wrapped by c on
// both sides at position pos.
int PalIndex::extendable(int node, std::size_t pos, Symbol c) const {
  for (;;) {
    const int len = nodes_[static_cast<std::size_t>(node)].len;
    const auto before = static_cast<std::ptrdiff_t>(pos) - 1 - len;
    if (before >= 0 && text_[static_cast<std::size_t>(before)] == c) return node;
    if (len == -1) return node;
    node = nodes_[static_cast<std::size_t>(node)].link;
  }
}

bool PalIndex::push_back(Symbol c) {
  const std::size_t pos = text_.size();
  text_.push_back(c);
  const int cur = extendable(last_, pos, c);
  const int existing = child(cur, c);
  if (existing >= 0) {
    history_.push_back({last_, -1});
    last_ = existing;
    lps_by_prefix_.push_back(last_);
    return false;
  }
  const int len = nodes_[static_cast<std::size_t>(cur)].len + 2;
  int link = kEmptyRoot;
  if (len > 1) link = child(extendable(nodes_[static_cast<std::size_t>(cur)].link, pos, c), c);
  const int created = static_cast<int>(nodes_.size());
  nodes_.push_back({len, link, pos, {}});
  nodes_[static_cast<std::size_t>(cur)].edges.emplace_back(c, created);
  history_.push_back({last_, cur});
  last_ = created;
  lps_by_prefix_.push_back(last_);
  return true;
}

void PalIndex::pop_back() {
  if (text_.empty()) throw std::logic_error("pop_back on empty index");
  const Step step = history_.back();
  history_.pop_back();
  if (step.parent >= 0) {
    nodes_[static_cast<std::size_t>(step.parent)].edges.pop_back();
    nodes_.pop_back();
  }
  last_ = step.prev_last;
  lps_by_prefix_.pop_back();
  text_.pop_back();
}

std::size_t PalIndex::distinct_palindromes_in_prefix(std::size_t len) const {
  if (len > size()) throw std::out_of_range("prefix longer than text");
  std::size_t created = 0;
  for (std::size_t i = 0; i < len; ++i) created += history_[i].parent >= 0 ? 1 : 0;
  return created;
}

Word PalIndex::node_palindrome(int node) const {
  const Node& nd = nodes_.at(static_cast<std::size_t>(node));
  if (nd.len <= 0) return Word(text_.alphabet_size());
  const auto len = static_cast<std::size_t>(nd.len);
  return text_.factor(nd.first_end + 1 - len, len);
}

int PalIndex::lps_node(std::size_t len) const {
  if (len > size()) throw std::out_of_range("prefix longer than text");
  return len == 0 ? kEmptyRoot : lps_by_prefix_[len - 1];
}

std::vector<std::size_t> PalIndex::counts_by_length() const {
  std::vector<std::size_t> counts(size() + 1, 0);
  counts[0] = 1;
  for (std::size_t i = 2; i < nodes_.size(); ++i) ++counts[static_cast<std::size_t>(nodes_[i].len)];
  return counts;
}

std::set<Word> PalIndex::palindromes() const {
  std::set<Word> out;
  out.insert(Word(text_.alphabet_size()));
  for (std::size_t i = 2; i < nodes_.size(); ++i) out.insert(node_palindrome(static_cast<int>(i)));
  return out;
}

PalindromeTable::PalindromeTable(const Word& w) : n_(w.size()), odd_(w.size()), even_(w.size()) {
  const auto n = static_cast<std::ptrdiff_t>(n_);
  auto at = [&](std::ptrdiff_t i) { return w[static_cast<std::size_t>(i)]; };
  // odd: odd_[i] = k means w[i-k+1 .. i+k-1] is the longest odd palindrome at i
  for (std::ptrdiff_t i = 0, l = 0, r = -1; i < n; ++i) {
    std::ptrdiff_t k = (i > r) ? 1 : std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(odd_[static_cast<std::size_t>(l + r - i)]), r - i + 1);
    while (i - k >= 0 && i + k < n && at(i - k) == at(i + k)) ++k;
    odd_[static_cast<std::size_t>(i)] = static_cast<std::size_t>(k);
    if (i + k - 1 > r) {
      l = i - k + 1;
      r = i + k - 1;
    }
  }
  // even: even_[i] = k means w[i-k .. i+k-1] is the longest even palindrome centred between i-1 and i
  for (std::ptrdiff_t i = 0, l = 0, r = -1; i < n; ++i) {
    std::ptrdiff_t k = (i > r) ? 0 : std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(even_[static_cast<std::size_t>(l + r - i + 1)]), r - i + 1);
    while (i - k - 1 >= 0 && i + k < n && at(i - k - 1) == at(i + k)) ++k;
    even_[static_cast<std::size_t>(i)] = static_cast<std::size_t>(k);
    if (i + k - 1 > r) {
      l = i - k;
      r = i + k - 1;
    }
  }
}

bool PalindromeTable::is_palindrome(std::size_t pos, std::size_t len) const {
  if (pos > n_ || len > n_ - pos) throw std::out_of_range("window out of range");
  if (len <= 1) return true;
  if (len % 2 == 1) return odd_[pos + len / 2] >= len / 2 + 1;
  return even_[pos + len / 2] >= len / 2;
}

Word lps(const Word& w) {
  if (w.empty()) throw std::invalid_argument("lps of the empty word");
  const PalIndex idx = PalIndex::build(w);
  return idx.node_palindrome(idx.lps_node(w.size()));
}

// A palindromic prefix of w is the reversal of a palindromic suffix of w^R,
// and a palindrome is its own reversal.
Word lpp(const Word& w) {
  if (w.empty()) throw std::invalid_argument("lpp of the empty word");
  return lps(reverse(w));
}

Word lpps(const Word& w) {
  if (w.size() <= 1) return Word(w.alphabet_size());
  const PalIndex idx = PalIndex::build(w);
  int node = idx.lps_node(w.size());
  if (static_cast<std::size_t>(idx.node_length(node)) == w.size()) node = idx.suffix_link(node);
  return idx.node_palindrome(node);
}

Word lppp(const Word& w) {
  if (w.size() <= 1) return Word(w.alphabet_size());
  return lpps(reverse(w));
}

bool is_rich(const Word& w) { return PalIndex::build(w).is_rich(); }

std::size_t defect(const Word& w) { return PalIndex::build(w).defect(); }

}  // namespace richlab
