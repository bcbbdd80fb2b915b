#include "richlab/enumeration.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "richlab/palindromic_index.hpp"

namespace richlab {

namespace {

// Prefix-pruned DFS: every prefix of a rich word is rich, and an append keeps
// richness iff it creates a new palindrome node.
class RichDfs {
 public:
  RichDfs(unsigned q, std::size_t max_len, bool canonical)
      : q_(q), max_len_(max_len), canonical_(canonical), idx_(q) {}

  PalIndex& index() { return idx_; }

  template <typename OnWord>
  void run(unsigned letters_used, OnWord&& on_word) {
    on_word(idx_, letters_used);
    if (idx_.size() == max_len_) return;
    const unsigned limit = canonical_ ? std::min(q_, letters_used + 1) : q_;
    for (unsigned c = 0; c < limit; ++c) {
      if (idx_.push_back(static_cast<Symbol>(c))) {
        run(std::max(letters_used, c + 1), on_word);
      }
      idx_.pop_back();
    }
  }

 private:
  unsigned q_;
  std::size_t max_len_;
  bool canonical_;
  PalIndex idx_;
};

void check_q(unsigned q) {
  if (q < 1 || q > kMaxAlphabetSize) throw std::invalid_argument("alphabet size must be in [1, 256]");
}

std::vector<Word> rich_words_of_length(unsigned q, std::size_t n, bool canonical,
                                       std::vector<std::uint64_t>& counts) {
  std::vector<Word> out;
  RichDfs dfs(q, n, canonical);
  dfs.run(0, [&](const PalIndex& idx, unsigned) {
    ++counts[idx.size()];
    if (idx.size() == n) out.push_back(idx.text());
  });
  return out;
}

unsigned distinct_letters(const Word& w) {
  unsigned used = 0;
  for (Symbol s : w) used = std::max(used, static_cast<unsigned>(s) + 1);
  return used;
}

}  // namespace

void enumerate_rich(unsigned q, std::size_t n, const std::function<void(const Word&)>& visit) {
  check_q(q);
  RichDfs dfs(q, n, false);
  dfs.run(0, [&](const PalIndex& idx, unsigned) {
    if (idx.size() == n) visit(idx.text());
  });
}

void enumerate_rich_upto(unsigned q, std::size_t max_len, const std::function<void(const Word&)>& visit) {
  for (std::size_t n = 0; n <= max_len; ++n) enumerate_rich(q, n, visit);
}

EnumStats count_rich_upto(unsigned q, std::size_t max_len, const EnumOptions& opts) {
  check_q(q);
  const auto start = std::chrono::steady_clock::now();
  EnumStats stats;
  stats.q = q;
  stats.canonical = opts.canonical;
  stats.counts.assign(max_len + 1, 0);

  const std::size_t split = std::min(opts.shard_prefix, max_len);
  const std::vector<Word> shards = rich_words_of_length(q, split, opts.canonical, stats.counts);

  if (split < max_len) {
    const unsigned jobs = std::max(1U, opts.jobs);
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(max_len + 1, 0));
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned id) {
      auto& counts = partial[id];
      for (std::size_t s = next++; s < shards.size(); s = next++) {
        RichDfs dfs(q, max_len, opts.canonical);
        for (Symbol c : shards[s]) dfs.index().push_back(c);
        dfs.run(distinct_letters(shards[s]), [&](const PalIndex& idx, unsigned) {
          if (idx.size() > split) ++counts[idx.size()];
        });
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    }
    for (const auto& counts : partial) {
      for (std::size_t n = 0; n <= max_len; ++n) stats.counts[n] += counts[n];
    }
  }
  stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

std::uint64_t count_rich(unsigned q, std::size_t n, const EnumOptions& opts) {
  return count_rich_upto(q, n, opts).counts[n];
}

std::vector<std::uint64_t> expand_canonical_counts(unsigned q, std::size_t max_len) {
  check_q(q);
  // q!/(q-k)! renamings of a canonical word with k distinct letters.
  std::vector<std::uint64_t> falling(q + 1, 1);
  for (unsigned k = 1; k <= q; ++k) falling[k] = falling[k - 1] * (q - k + 1);
  std::vector<std::uint64_t> counts(max_len + 1, 0);
  RichDfs dfs(q, max_len, true);
  dfs.run(0, [&](const PalIndex& idx, unsigned used) { counts[idx.size()] += falling[used]; });
  return counts;
}

double growth_root(const EnumStats& stats, std::size_t n) {
  if (n == 0 || n >= stats.counts.size()) throw std::out_of_range("growth_root: n outside computed range");
  if (stats.canonical) throw std::invalid_argument("growth_root: needs raw counts");
  return std::pow(static_cast<double>(stats.counts[n]), 1.0 / static_cast<double>(n));
}

double growth_root(unsigned q, std::size_t n) { return growth_root(count_rich_upto(q, n), n); }

}  // namespace richlab
