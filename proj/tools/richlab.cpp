// richlab command-line front end. Data goes to stdout, logs to stderr.
//
// Exit codes: 0 ok, 1 bound violation or oracle mismatch, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "richlab/bound_suite.hpp"
#include "richlab/crosscheck.hpp"
#include "richlab/enumeration.hpp"
#include "richlab/oracle.hpp"
#include "richlab/palindromic_index.hpp"
#include "richlab/rich_structures.hpp"
#include "richlab/sweep.hpp"
#include "richlab/text_format.hpp"

using namespace richlab;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string alphabet;
};

Alphabet make_alphabet(const Globals& g) { return g.alphabet.empty() ? Alphabet() : Alphabet(g.alphabet); }

// The positional word if given, otherwise one word per line from stdin.
std::vector<std::string> input_lines(const std::optional<std::string>& word) {
  if (word) return {*word};
  std::vector<std::string> out;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::vector<BoundId> parse_bound_list(const std::string& text) {
  std::vector<BoundId> out;
  if (text.empty()) return {kAllBounds.begin(), kAllBounds.end()};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_bound_id(item));
  return out;
}

std::vector<BoundReport> reports_at(const WordProfile& p, BoundId id, std::size_t n, CheckOptions opts) {
  switch (id) {
    case BoundId::B1: return {check_switch_palindrome_bound(p, n, opts)};
    case BoundId::B2: {
      std::vector<BoundReport> out;
      for (const auto& r : evaluate_bound(p, id, opts)) {
        if (r.n == n) out.push_back(r);
      }
      return out;
    }
    case BoundId::B3: return {check_gamma_palindrome_bound(p, n, opts)};
    case BoundId::B4: return {check_gamma_recursion(p, n, opts)};
    case BoundId::B5: return {check_gamma_closed_form(p, n, opts)};
    case BoundId::B6: return {check_palindromic_complexity_bound(p, n, opts)};
    case BoundId::B7: return {check_factor_complexity_bound(p, n, opts)};
    case BoundId::B8: return {check_reversal_inequality(p, n)};
    case BoundId::B9: return {check_factor_vs_palindrome_bound(p, n, opts)};
    case BoundId::B10: return {check_final_bounds(p, n, opts)[0]};
    case BoundId::B11: return {check_final_bounds(p, n, opts)[1]};
    case BoundId::B12: return {check_ceil_product_lemma(n)};
  }
  return {};
}

bool violates(const BoundReport& r) { return !r.holds || r.equality == false; }

int cmd_analyze(const Globals& g, const std::optional<std::string>& word) {
  const Alphabet alpha = make_alphabet(g);
  for (const auto& line : input_lines(word)) {
    std::cout << json(analyze(alpha.parse(line), alpha)).dump() << '\n';
  }
  return kOk;
}

int cmd_switches(const Globals& g, const std::optional<std::string>& word, std::size_t n) {
  const Alphabet alpha = make_alphabet(g);
  for (const auto& line : input_lines(word)) {
    const Word w = alpha.parse(line);
    for (const auto& s : gamma(w, n)) {
      const Word a(std::vector<Symbol>{s.a}, w.alphabet_size());
      const Word b(std::vector<Symbol>{s.b}, w.alphabet_size());
      std::cout << json{{"a", alpha.format(a)}, {"u", alpha.format(s.u)}, {"b", alpha.format(b)},
                        {"word", alpha.format(s.as_word())}}
                       .dump()
                << '\n';
    }
  }
  return kOk;
}

int cmd_closure(const Globals& g, const std::optional<std::string>& word) {
  const Alphabet alpha = make_alphabet(g);
  for (const auto& line : input_lines(word)) std::cout << alpha.format(palindromic_closure(alpha.parse(line))) << '\n';
  return kOk;
}

int cmd_verify(const Globals& g, const std::optional<std::string>& word, const std::string& bounds,
               std::optional<std::size_t> n, bool force) {
  const Alphabet alpha = make_alphabet(g);
  const std::vector<BoundId> ids = parse_bound_list(bounds);
  const CheckOptions opts{force};
  int rc = kOk;
  for (const auto& line : input_lines(word)) {
    const WordProfile p(alpha.parse(line));
    json out = json::array();
    for (BoundId id : ids) {
      const auto reports = n ? reports_at(p, id, *n, opts) : evaluate_bound(p, id, opts);
      for (const auto& r : reports) {
        if (violates(r)) rc = kViolation;
        out.push_back(r);
      }
    }
    std::cout << out.dump() << '\n';
  }
  return rc;
}

int cmd_sweep(unsigned q, std::size_t max_len, unsigned jobs, bool csv, bool no_closures) {
  SweepOptions opts;
  opts.q = q;
  opts.max_len = max_len;
  opts.jobs = jobs;
  opts.include_closures = !no_closures;
  const SweepResult r = run_sweep(opts);
  std::cerr << "sweep: " << r.words << " rich words, " << r.closures << " closures, " << r.elapsed_seconds
            << " s\n";
  if (csv) {
    std::cout << sweep_csv(r);
  } else {
    std::cout << sweep_json(r).dump() << '\n';
  }
  return r.clean() ? kOk : kViolation;
}

int cmd_enumerate(unsigned q, std::size_t max_len, bool count_only, std::size_t shard_prefix, unsigned jobs,
                  bool csv, bool canonical, const std::string& emit) {
  EnumOptions opts;
  opts.jobs = jobs;
  opts.shard_prefix = shard_prefix;
  opts.canonical = canonical;
  const EnumStats stats = count_rich_upto(q, max_len, opts);
  std::cerr << "enumerate: " << stats.elapsed_seconds << " s\n";
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) {
      std::cerr << "error: cannot open " << emit << '\n';
      return kUsage;
    }
    enumerate_rich_upto(q, max_len, [&](const Word& w) { f << to_text(w) << '\n'; });
  }
  auto root = [&](std::size_t n) {
    std::ostringstream os;
    os.precision(12);
    os << growth_root(stats, n);
    return os.str();
  };
  if (csv) {
    std::cout << (count_only ? "n,count\n" : "n,count,growth_root\n");
    for (std::size_t n = 0; n < stats.counts.size(); ++n) {
      std::cout << n << ',' << stats.counts[n];
      if (!count_only) std::cout << ',' << (n == 0 ? std::string() : root(n));
      std::cout << '\n';
    }
  } else {
    json rows = json::array();
    for (std::size_t n = 0; n < stats.counts.size(); ++n) {
      json row{{"n", n}, {"count", stats.counts[n]}};
      if (!count_only && n > 0) row["growth_root"] = std::stod(root(n));
      rows.push_back(std::move(row));
    }
    std::cout << json{{"q", q}, {"canonical", canonical}, {"counts", std::move(rows)}}.dump() << '\n';
  }
  return kOk;
}

int cmd_oracle_check(std::uint64_t seed, const std::string& cells, unsigned exhaustive_q, std::size_t exhaustive_len) {
  CrossCheckResult total;
  if (exhaustive_len > 0) total.merge(crosscheck_exhaustive(exhaustive_q, exhaustive_len));
  if (!cells.empty()) total.merge(crosscheck_random(parse_cells(cells), seed));
  std::cout << json{{"seed", seed},
                    {"cells", cells},
                    {"words", total.words},
                    {"comparisons", total.comparisons},
                    {"mismatches", total.mismatches},
                    {"details", total.details}}
                   .dump()
            << '\n';
  return total.mismatches == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rich words: palindromic structure, switches and complexity bounds"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--alphabet", g.alphabet, "Characters in symbol order (default: 0-9 then a-z by value)");

  std::optional<std::string> word;
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("word", word, "Word to process; reads one word per line from stdin when omitted");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Counts per length, richness, defect and palindromic affixes");
  add_word(analyze_cmd);

  std::size_t switch_n = 0;
  auto* switches_cmd = app.add_subcommand("switches", "u-switches of one length as JSON lines");
  add_word(switches_cmd);
  switches_cmd->add_option("--n", switch_n, "Switch length")->required();

  auto* closure_cmd = app.add_subcommand("closure", "Shortest palindrome with the word as prefix");
  add_word(closure_cmd);

  std::string bounds;
  std::optional<std::size_t> verify_n;
  bool all_n = false, force = false;
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate bounds B1-B12 on a word");
  add_word(verify_cmd);
  verify_cmd->add_option("--bounds", bounds, "Comma-separated bound ids (default: all)");
  auto* n_opt = verify_cmd->add_option("--n", verify_n, "Single order to evaluate");
  verify_cmd->add_flag("--all-n", all_n, "Every admissible order (default when --n is absent)")->excludes(n_opt);
  verify_cmd->add_flag("--force", force, "Evaluate on non-rich words; reports are marked not covered");

  unsigned q = 2, jobs = 1;
  std::size_t max_len = 14;
  bool csv = false, no_closures = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Every bound on every rich word up to a length");
  sweep_cmd->add_option("--q", q, "Alphabet size")->check(CLI::Range(1u, kMaxAlphabetSize));
  sweep_cmd->add_option("--max-len", max_len, "Maximum word length");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--csv", csv, "CSV summary table instead of JSON");
  sweep_cmd->add_flag("--no-closures", no_closures, "Skip the palindromic closure pass for B8/B9");

  bool count_only = false, canonical = false;
  std::size_t shard_prefix = 8;
  std::string emit;
  auto* enum_cmd = app.add_subcommand("enumerate", "Count rich words per length");
  enum_cmd->add_option("--q", q, "Alphabet size")->check(CLI::Range(1u, kMaxAlphabetSize));
  enum_cmd->add_option("--max-len", max_len, "Maximum word length");
  enum_cmd->add_flag("--count-only", count_only, "Counts only, no growth roots");
  enum_cmd->add_option("--shard-prefix", shard_prefix, "Prefix length used to split work between threads");
  enum_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--csv", csv, "CSV instead of JSON");
  enum_cmd->add_flag("--canonical", canonical, "Count words up to renaming of letters");
  enum_cmd->add_option("--emit", emit, "Also write every rich word to this file");

  std::uint64_t seed = 42;
  std::string cells = "q2:len50:1000";
  unsigned exhaustive_q = 2;
  std::size_t exhaustive_len = 0;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare fast paths with brute-force oracles");
  oracle_cmd->add_option("--seed", seed, "Random seed");
  oracle_cmd->add_option("--cells", cells, "Random cells, e.g. q2:len50:1000,q3:len20:100");
  oracle_cmd->add_option("--exhaustive-q", exhaustive_q, "Alphabet size for the exhaustive pass");
  oracle_cmd->add_option("--exhaustive-len", exhaustive_len, "Check every word up to this length (0: skip)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(g, word);
    if (*switches_cmd) return cmd_switches(g, word, switch_n);
    if (*closure_cmd) return cmd_closure(g, word);
    if (*verify_cmd) return cmd_verify(g, word, bounds, verify_n, force);
    if (*sweep_cmd) return cmd_sweep(q, max_len, jobs, csv, no_closures);
    if (*enum_cmd) return cmd_enumerate(q, max_len, count_only, shard_prefix, jobs, csv, canonical, emit);
    if (*oracle_cmd) return cmd_oracle_check(seed, cells, exhaustive_q, exhaustive_len);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const oracle::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
