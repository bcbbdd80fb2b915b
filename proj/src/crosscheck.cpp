#include "richlab/crosscheck.hpp"

#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "richlab/oracle.hpp"
#include "richlab/palindromic_index.hpp"
#include "richlab/rich_structures.hpp"

namespace richlab {

namespace {

constexpr std::size_t kMaxDetails = 20;

class Comparer {
 public:
  Comparer(CrossCheckResult& out, const Word& w) : out_(out), w_(w) {}

  template <typename A, typename B>
  void expect(const A& fast, const B& slow, const std::string& what) {
    ++out_.comparisons;
    if (fast == slow) return;
    ++out_.mismatches;
    if (out_.details.size() < kMaxDetails) out_.details.push_back(what + " differs on " + to_text(w_));
  }

 private:
  CrossCheckResult& out_;
  const Word& w_;
};

}  // namespace

void CrossCheckResult::merge(const CrossCheckResult& other) {
  words += other.words;
  comparisons += other.comparisons;
  mismatches += other.mismatches;
  for (const auto& d : other.details) {
    if (details.size() < kMaxDetails) details.push_back(d);
  }
}

CrossCheckResult crosscheck_word(const Word& w, const std::vector<Word>& return_targets) {
  CrossCheckResult out;
  out.words = 1;
  Comparer cmp(out, w);

  const PalIndex idx = PalIndex::build(w);
  const std::set<Word> slow_pals = oracle::palindrome_set(w);
  cmp.expect(idx.palindromes(), slow_pals, "palindrome set");
  cmp.expect(idx.is_rich(), slow_pals.size() == w.size() + 1, "richness");
  if (!w.empty()) cmp.expect(lps(w), oracle::longest_palindromic_suffix(w), "lps");
  cmp.expect(lpps(w), oracle::longest_proper_palindromic_suffix(w), "lpps");

  const auto gamma_sizes = gamma_counts_by_length(w);
  for (std::size_t n = 0; n <= w.size(); ++n) {
    const auto fast = gamma(w, n);
    cmp.expect(fast, oracle::gamma(w, n), "gamma(n=" + std::to_string(n) + ")");
    cmp.expect(gamma_sizes[n], fast.size(), "gamma count(n=" + std::to_string(n) + ")");
  }

  cmp.expect(palindromic_closure(w), oracle::palindromic_closure(w), "closure");
  for (const Word& u : return_targets) {
    cmp.expect(complete_returns(w, u), oracle::complete_returns(w, u), "complete returns to " + to_text(u));
  }
  return out;
}

CrossCheckResult crosscheck_exhaustive(unsigned q, std::size_t max_len) {
  CrossCheckResult total;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Symbol> digits(len, 0);
    for (;;) {
      const Word w(digits, q);
      std::vector<Word> targets;
      for (std::size_t m = 1; m <= std::min<std::size_t>(3, len); ++m) {
        for (const Word& u : factors(w, m).factors) targets.push_back(u);
      }
      total.merge(crosscheck_word(w, targets));
      std::size_t i = 0;
      while (i < len && digits[i] + 1u == q) digits[i++] = 0;
      if (i == len) break;
      ++digits[i];
    }
  }
  return total;
}

CrossCheckResult crosscheck_random(const std::vector<CrossCheckCell>& cells, std::uint64_t seed) {
  CrossCheckResult total;
  std::mt19937_64 rng(seed);
  for (const auto& cell : cells) {
    std::uniform_int_distribution<unsigned> letter(0, cell.q - 1);
    for (std::size_t k = 0; k < cell.count; ++k) {
      std::vector<Symbol> symbols(cell.length);
      for (auto& s : symbols) s = static_cast<Symbol>(letter(rng));
      const Word w(std::move(symbols), cell.q);
      std::vector<Word> targets;
      if (!w.empty()) {
        std::uniform_int_distribution<std::size_t> len_dist(1, std::min<std::size_t>(4, w.size()));
        for (int t = 0; t < 3; ++t) {
          const std::size_t len = len_dist(rng);
          std::uniform_int_distribution<std::size_t> pos_dist(0, w.size() - len);
          targets.push_back(w.factor(pos_dist(rng), len));
        }
        // One palindromic target: the longest palindromic suffix of a random prefix.
        std::uniform_int_distribution<std::size_t> pre(1, w.size());
        targets.push_back(lps(w.factor(0, pre(rng))));
      }
      total.merge(crosscheck_word(w, targets));
    }
  }
  return total;
}

std::vector<CrossCheckCell> parse_cells(const std::string& text) {
  static const std::regex cell_re(R"(q(\d+):len(\d+):(\d+))");
  std::vector<CrossCheckCell> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, cell_re)) throw std::invalid_argument("bad cell spec '" + item + "'");
    CrossCheckCell c;
    c.q = static_cast<unsigned>(std::stoul(m[1]));
    c.length = std::stoull(m[2]);
    c.count = std::stoull(m[3]);
    if (c.q < 1 || c.q > kMaxAlphabetSize) throw std::invalid_argument("bad alphabet size in '" + item + "'");
    out.push_back(c);
  }
  if (out.empty()) throw std::invalid_argument("no cells given");
  return out;
}

}  // namespace richlab
