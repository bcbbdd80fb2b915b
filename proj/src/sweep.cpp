#include "richlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>
#include <tuple>

#include "richlab/enumeration.hpp"
#include "richlab/rich_structures.hpp"

namespace richlab {

namespace {

struct Partial {
  std::array<BoundTally, 12> tallies{};
  std::vector<SweepFinding> violations;
  std::vector<SweepFinding> equality_failures;
  std::uint64_t closures = 0;

  Partial() {
    for (std::size_t i = 0; i < tallies.size(); ++i) {
      tallies[i].id = kAllBounds[i];
      tallies[i].min_slack = std::numeric_limits<double>::infinity();
      tallies[i].max_slack = -std::numeric_limits<double>::infinity();
    }
  }

  void record(const Word& w, const BoundReport& r) {
    BoundTally& t = tallies[static_cast<std::size_t>(r.bound_id) - 1];
    ++t.evaluated;
    if (r.holds) {
      ++t.passed;
    } else {
      ++t.failed;
      violations.push_back({w, r});
    }
    const double s = slack(r);
    t.min_slack = std::min(t.min_slack, s);
    t.max_slack = std::max(t.max_slack, s);
    if (r.equality) {
      ++t.equality_instances;
      if (*r.equality) {
        ++t.equalities;
      } else {
        equality_failures.push_back({w, r});
      }
    }
  }

  void run_word(const Word& w, bool include_closure) {
    const WordProfile p(w);
    for (BoundId id : kAllBounds) {
      if (id == BoundId::B12) continue;
      for (const auto& r : evaluate_bound(p, id)) record(w, r);
    }
    if (!include_closure) return;
    const Word c = palindromic_closure(w);
    const WordProfile pc(c);
    ++closures;
    for (BoundId id : {BoundId::B8, BoundId::B9}) {
      for (const auto& r : evaluate_bound(pc, id)) record(c, r);
    }
  }
};

bool finding_less(const SweepFinding& a, const SweepFinding& b) {
  return std::tuple(std::cref(a.word), static_cast<int>(a.report.bound_id), a.report.n, a.report.parameter) <
         std::tuple(std::cref(b.word), static_cast<int>(b.report.bound_id), b.report.n, b.report.parameter);
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Word> words;
  enumerate_rich_upto(opts.q, opts.max_len, [&](const Word& w) { words.push_back(w); });

  const unsigned jobs = std::max(1U, opts.jobs);
  std::vector<Partial> partial(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    for (std::size_t i = next++; i < words.size(); i = next++) partial[id].run_word(words[i], opts.include_closures);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
  }

  Partial merged;
  for (std::size_t n = 1; n <= opts.max_len; ++n) merged.record(Word(opts.q), check_ceil_product_lemma(n));
  for (auto& part : partial) {
    merged.closures += part.closures;
    for (std::size_t i = 0; i < merged.tallies.size(); ++i) {
      BoundTally& m = merged.tallies[i];
      const BoundTally& t = part.tallies[i];
      m.evaluated += t.evaluated;
      m.passed += t.passed;
      m.failed += t.failed;
      m.equality_instances += t.equality_instances;
      m.equalities += t.equalities;
      m.min_slack = std::min(m.min_slack, t.min_slack);
      m.max_slack = std::max(m.max_slack, t.max_slack);
    }
    std::move(part.violations.begin(), part.violations.end(), std::back_inserter(merged.violations));
    std::move(part.equality_failures.begin(), part.equality_failures.end(),
              std::back_inserter(merged.equality_failures));
  }
  std::sort(merged.violations.begin(), merged.violations.end(), finding_less);
  std::sort(merged.equality_failures.begin(), merged.equality_failures.end(), finding_less);

  SweepResult out;
  out.q = opts.q;
  out.max_len = opts.max_len;
  out.words = words.size();
  out.closures = merged.closures;
  out.tallies = merged.tallies;
  out.violations = std::move(merged.violations);
  out.equality_failures = std::move(merged.equality_failures);
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string sweep_csv(const SweepResult& r) {
  std::ostringstream os;
  os.precision(12);
  os << "q,max_len,words,bound,evaluated,passed,failed,equality_instances,equalities,min_slack,max_slack\n";
  for (const auto& t : r.tallies) {
    os << r.q << ',' << r.max_len << ',' << r.words << ',' << to_string(t.id) << ',' << t.evaluated << ','
       << t.passed << ',' << t.failed << ',' << t.equality_instances << ',' << t.equalities << ',';
    if (t.evaluated == 0) {
      os << ",\n";
    } else {
      os << t.min_slack << ',' << t.max_slack << '\n';
    }
  }
  return os.str();
}

namespace {

nlohmann::json json_double(double x) {
  if (!std::isfinite(x)) return nullptr;
  std::ostringstream os;
  os.precision(12);
  os << x;
  return std::stod(os.str());
}

nlohmann::json findings_json(const std::vector<SweepFinding>& fs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : fs) out.push_back({{"word", to_text(f.word)}, {"report", f.report}});
  return out;
}

}  // namespace

nlohmann::json sweep_json(const SweepResult& r) {
  nlohmann::json tallies = nlohmann::json::array();
  for (const auto& t : r.tallies) {
    nlohmann::json j{{"bound", to_string(t.id)}, {"evaluated", t.evaluated}, {"passed", t.passed},
                     {"failed", t.failed}};
    if (t.id == BoundId::B8) {
      j["equality_instances"] = t.equality_instances;
      j["equalities"] = t.equalities;
    }
    j["min_slack"] = t.evaluated ? json_double(t.min_slack) : nlohmann::json(nullptr);
    j["max_slack"] = t.evaluated ? json_double(t.max_slack) : nlohmann::json(nullptr);
    tallies.push_back(std::move(j));
  }
  return {{"q", r.q},
          {"max_len", r.max_len},
          {"words", r.words},
          {"closures", r.closures},
          {"clean", r.clean()},
          {"tallies", std::move(tallies)},
          {"violations", findings_json(r.violations)},
          {"equality_failures", findings_json(r.equality_failures)}};
}

}  // namespace richlab
