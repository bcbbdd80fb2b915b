#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "richlab/word.hpp"

namespace richlab {

class ParseError : public std::invalid_argument {
 public:
  ParseError(char offending, std::size_t position, const std::string& what)
      : std::invalid_argument(what), offending_(offending), position_(position) {}
  char offending() const noexcept { return offending_; }
  std::size_t position() const noexcept { return position_; }

 private:
  char offending_;
  std::size_t position_;
};

/// Character <-> symbol mapping for the text format (one word per line).
///
/// Without an explicit alphabet, characters map by value: '0'..'9' to 0..9
/// and 'a'..'z' to 10..35, and q is max(2, largest symbol + 1). An explicit
/// alphabet string lists the characters in symbol order and fixes q to its
/// length.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string chars);

  bool is_explicit() const noexcept { return !chars_.empty(); }

  Word parse(const std::string& text) const;
  std::string format(const Word& w) const;

 private:
  std::string chars_;
};

/// Everything the `analyze` command reports about one word.
struct AnalysisReport {
  std::string word;
  unsigned q = 2;
  bool rich = true;
  std::size_t defect = 0;
  std::vector<std::size_t> factor_counts;      // index n: |F(w,n)|
  std::vector<std::size_t> palindrome_counts;  // index n: |F_p(w,n)|
  std::vector<std::size_t> gamma_counts;       // index n: |gamma(w,n)|
  std::size_t big_gamma = 1;                   // Gamma(w,|w|)
  std::string lps, lpp, lpps, lppp;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Word& w, const Alphabet& alphabet = {});

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

}  // namespace richlab
