#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "richlab/word.hpp"

namespace richlab {

/// Counts of rich words Pi(0..max_len) over one alphabet size.
struct EnumStats {
  unsigned q = 2;
  std::vector<std::uint64_t> counts;  // counts[n] = Pi(n)
  double elapsed_seconds = 0.0;
  /// When set, counts are of words up to renaming of letters (first
  /// occurrences in increasing letter order).
  bool canonical = false;
};

struct EnumOptions {
  unsigned jobs = 1;
  std::size_t shard_prefix = 8;
  bool canonical = false;
};

/// Visits every rich word of length n over [0, q) once, in lexicographic order.
void enumerate_rich(unsigned q, std::size_t n, const std::function<void(const Word&)>& visit);

/// Visits every rich word of length 0..max_len, shorter words first.
void enumerate_rich_upto(unsigned q, std::size_t max_len, const std::function<void(const Word&)>& visit);

std::uint64_t count_rich(unsigned q, std::size_t n, const EnumOptions& opts = {});

/// Pi(0..max_len) in one pass. With opts.canonical the counts are per
/// letter-renaming class.
EnumStats count_rich_upto(unsigned q, std::size_t max_len, const EnumOptions& opts = {});

/// Expands canonical counts back to raw counts; needs per-class distinct
/// letter counts, so it recounts. Exposed for cross-checking.
std::vector<std::uint64_t> expand_canonical_counts(unsigned q, std::size_t max_len);

/// Pi(n)^(1/n); n >= 1.
double growth_root(const EnumStats& stats, std::size_t n);
double growth_root(unsigned q, std::size_t n);

}  // namespace richlab
