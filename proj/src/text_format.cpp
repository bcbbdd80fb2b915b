#include "richlab/text_format.hpp"

#include <algorithm>
#include <string>

#include "richlab/palindromic_index.hpp"
#include "richlab/rich_structures.hpp"

namespace richlab {

namespace {

int default_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

ParseError bad_char(char c, std::size_t pos) {
  return ParseError(c, pos, std::string("invalid symbol '") + c + "' at position " + std::to_string(pos + 1));
}

}  // namespace

Alphabet::Alphabet(std::string chars) : chars_(std::move(chars)) {
  if (chars_.size() > kMaxAlphabetSize) throw std::invalid_argument("alphabet longer than 256 characters");
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    if (chars_.find(chars_[i], i + 1) != std::string::npos) {
      throw std::invalid_argument(std::string("alphabet repeats character '") + chars_[i] + "'");
    }
  }
}

Word Alphabet::parse(const std::string& text) const {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  unsigned q = 2;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_explicit()) {
      const auto at = chars_.find(c);
      if (at == std::string::npos) throw bad_char(c, i);
      symbols.push_back(static_cast<Symbol>(at));
    } else {
      const int v = default_value(c);
      if (v < 0) throw bad_char(c, i);
      symbols.push_back(static_cast<Symbol>(v));
      q = std::max(q, static_cast<unsigned>(v) + 1);
    }
  }
  if (is_explicit()) q = static_cast<unsigned>(chars_.size());
  return Word(std::move(symbols), q);
}

std::string Alphabet::format(const Word& w) const {
  if (!is_explicit()) return to_text(w);
  std::string out;
  for (Symbol s : w) {
    if (s < chars_.size()) {
      out += chars_[s];
    } else {
      out += "[" + std::to_string(s) + "]";
    }
  }
  return out;
}

AnalysisReport analyze(const Word& w, const Alphabet& alphabet) {
  const PalIndex idx = PalIndex::build(w);
  AnalysisReport r;
  r.word = alphabet.format(w);
  r.q = w.alphabet_size();
  r.rich = idx.is_rich();
  r.defect = idx.defect();
  r.factor_counts = factor_counts_by_length(w);
  r.palindrome_counts = idx.counts_by_length();
  r.gamma_counts = gamma_counts_by_length(w);
  r.big_gamma = 1;
  for (auto g : r.gamma_counts) r.big_gamma = std::max(r.big_gamma, g);
  if (!w.empty()) {
    r.lps = alphabet.format(lps(w));
    r.lpp = alphabet.format(lpp(w));
  }
  r.lpps = alphabet.format(lpps(w));
  r.lppp = alphabet.format(lppp(w));
  return r;
}

void to_json(nlohmann::json& j, const AnalysisReport& r) {
  j = nlohmann::json{{"word", r.word},
                     {"q", r.q},
                     {"rich", r.rich},
                     {"defect", r.defect},
                     {"factor_counts", r.factor_counts},
                     {"palindrome_counts", r.palindrome_counts},
                     {"gamma_counts", r.gamma_counts},
                     {"big_gamma", r.big_gamma},
                     {"lps", r.lps},
                     {"lpp", r.lpp},
                     {"lpps", r.lpps},
                     {"lppp", r.lppp}};
}

void from_json(const nlohmann::json& j, AnalysisReport& r) {
  j.at("word").get_to(r.word);
  j.at("q").get_to(r.q);
  j.at("rich").get_to(r.rich);
  j.at("defect").get_to(r.defect);
  j.at("factor_counts").get_to(r.factor_counts);
  j.at("palindrome_counts").get_to(r.palindrome_counts);
  j.at("gamma_counts").get_to(r.gamma_counts);
  j.at("big_gamma").get_to(r.big_gamma);
  j.at("lps").get_to(r.lps);
  j.at("lpp").get_to(r.lpp);
  j.at("lpps").get_to(r.lpps);
  j.at("lppp").get_to(r.lppp);
}

}  // namespace richlab
