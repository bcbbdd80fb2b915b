#include "richlab/bound_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "richlab/rich_structures.hpp"

namespace richlab {

namespace {

using HighPrecision = boost::multiprecision::cpp_bin_float_100;

constexpr double kLogMargin = 1e-9;
constexpr double kExactLog2Limit = 512.0;

const char* const kStatements[] = {
    "2|gamma(w,n)| + |Fp(w,n-2)| >= |Fp(w,n)|",
    "|Upsilon(w,n,r)| <= q(q-1)",
    "(q+1) n Gamma(w,n) >= |Fp(w,n)|",
    "Gamma(w,n) <= q^5 ceil(n/2)^2 Gamma(w,ceil(n/2))",
    "Gamma(w,n) <= (4 q^10 n)^(log2 n)",
    "|Fp(w,n)| <= (q+1) n (4 q^10 n)^(log2 n)",
    "|F(w,n)| <= (q+1)^2 n^4 (4 q^10 n)^(2 log2 n)",
    "|Fp(w,n)| + |Fp(w,n+1)| <= |F(w,n+1)| - |F(w,n)| + 2, with equality for rich w",
    "|F(w,n)| <= 2(n-1) maxFp(w,n) - 2(n-1) + q",
    "|F(w,n)| <= 2(2n-1)(q+1) 2n (8 q^10 n)^(log2 2n) - 2(2n-1) + q",
    "|F(w,n)| <= (q+1) 8 n^2 (8 q^10 n)^(log2 2n) + q",
    "prod_{j=1..floor(log2 n)} ceil(n/2^j) <= (2 sqrt(n))^(log2 n)",
};

// Reports carry 12 significant digits so that JSON output is diffable and
// round-trips exactly.
double round12(double x) {
  if (!std::isfinite(x)) return x;
  std::ostringstream os;
  os.precision(12);
  os << x;
  return std::stod(os.str());
}

double log2_of(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 1000) return std::log2(x.convert_to<double>());
  // Keep the top 64 bits.
  const std::size_t shift = bits - 64;
  const BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

std::optional<unsigned> exact_log2(std::uint64_t x) {
  if (x == 0 || (x & (x - 1)) != 0) return std::nullopt;
  unsigned k = 0;
  while ((std::uint64_t{1} << k) != x) ++k;
  return k;
}

// coef * base^((exp_num / exp_den) * log2(log_arg)) + addend
struct PowerExpr {
  BigInt coef;
  BigInt base;
  unsigned exp_num = 1;
  unsigned exp_den = 1;
  std::uint64_t log_arg = 1;
  BigInt addend = 0;
};

struct Comparison {
  bool holds = false;
  bool exact = false;
  bool escalated = false;
  BigInt value;
  double log2 = 0.0;
};

HighPrecision high_precision_value(const PowerExpr& e) {
  const HighPrecision exponent = HighPrecision(e.exp_num) / HighPrecision(e.exp_den) *
                                 boost::multiprecision::log(HighPrecision(e.log_arg)) /
                                 boost::multiprecision::log(HighPrecision(2));
  return HighPrecision(e.coef) * boost::multiprecision::pow(HighPrecision(e.base), exponent) +
         HighPrecision(e.addend);
}

Comparison compare_le(const BigInt& lhs, const PowerExpr& e) {
  Comparison c;
  const double exponent = static_cast<double>(e.exp_num) / e.exp_den * std::log2(static_cast<double>(e.log_arg));
  const double main_log2 = log2_of(e.coef) + exponent * log2_of(e.base);

  std::optional<unsigned> integral_exp;
  if (auto k = exact_log2(e.log_arg); k && (*k * e.exp_num) % e.exp_den == 0) {
    integral_exp = *k * e.exp_num / e.exp_den;
  }
  if (integral_exp && main_log2 <= kExactLog2Limit) {
    c.exact = true;
    c.value = e.coef * boost::multiprecision::pow(e.base, *integral_exp) + e.addend;
    c.log2 = log2_of(c.value);
    c.holds = lhs <= c.value;
    return c;
  }

  if (main_log2 < 900.0) {
    c.log2 = std::log2(std::exp2(main_log2) + e.addend.convert_to<double>());
  } else {
    c.log2 = main_log2;  // the additive term is far below double resolution
  }
  if (log2_of(lhs) <= c.log2 - kLogMargin) {
    c.holds = true;
    return c;
  }
  // Too close to call (or apparently violated): decide at high precision.
  c.escalated = true;
  c.holds = HighPrecision(lhs) <= high_precision_value(e);
  return c;
}

BoundReport base_report(BoundId id, const WordProfile& p, std::size_t n) {
  BoundReport r;
  r.bound_id = id;
  r.word_length = p.length();
  r.n = n;
  r.q = p.q();
  r.citation = bound_statement(id);
  return r;
}

void set_exact(BoundReport& r, const BigInt& lhs, const BigInt& rhs) {
  r.lhs = lhs;
  r.rhs_exact = true;
  r.rhs_value = rhs;
  r.rhs_log2 = round12(log2_of(rhs));
  r.holds = lhs <= rhs;
}

void set_power(BoundReport& r, const BigInt& lhs, const PowerExpr& rhs) {
  const Comparison c = compare_le(lhs, rhs);
  r.lhs = lhs;
  r.rhs_exact = c.exact;
  r.rhs_value = c.exact ? c.value : BigInt(0);
  r.rhs_log2 = round12(c.log2);
  r.holds = c.holds;
  r.escalated = c.escalated;
}

std::string rhs_text(const BoundReport& r) {
  if (r.rhs_exact) return r.rhs_value.str();
  std::ostringstream os;
  os.precision(12);
  os << "2^" << r.rhs_log2;
  return os.str();
}

void default_expression(BoundReport& r) {
  r.expression = r.lhs.str() + (r.holds ? " <= " : " > ") + rhs_text(r);
}

void require_order(std::size_t n, std::size_t min_n) {
  if (n < min_n) {
    throw PreconditionError(PreconditionKind::kOrderOutOfRange,
                            "order n = " + std::to_string(n) + " below minimum " + std::to_string(min_n));
  }
}

void require_rich(const WordProfile& p, CheckOptions opts, BoundReport& r) {
  if (p.rich()) return;
  if (!opts.force) throw PreconditionError(PreconditionKind::kNotRich, "bound applies to rich words only");
  r.covered = false;
}

void require_closed_and_long(const WordProfile& p, std::size_t n) {
  if (p.length() < n + 1) {
    throw PreconditionError(PreconditionKind::kTooShort, "need |w| >= n+1");
  }
  if (!p.reversal_closed(n + 1)) {
    throw PreconditionError(PreconditionKind::kNotReversalClosed, "F(w,n+1) is not closed under reversal");
  }
}

BigInt pow_int(std::uint64_t base, unsigned e) { return boost::multiprecision::pow(BigInt(base), e); }

std::uint64_t ceil_half(std::size_t n) { return (n + 1) / 2; }

template <typename T>
T at_or_zero(const std::vector<T>& v, std::size_t i) {
  return i < v.size() ? v[i] : T{0};
}

}  // namespace

std::string to_string(BoundId id) { return "B" + std::to_string(static_cast<int>(id)); }

BoundId parse_bound_id(const std::string& text) {
  if (text.size() >= 2 && (text[0] == 'B' || text[0] == 'b')) {
    try {
      const int v = std::stoi(text.substr(1));
      if (v >= 1 && v <= 12 && std::to_string(v) == text.substr(1)) return static_cast<BoundId>(v);
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("unknown bound id '" + text + "'");
}

std::string bound_statement(BoundId id) { return kStatements[static_cast<int>(id) - 1]; }

WordProfile::WordProfile(Word w) : word_(std::move(w)) {
  const PalIndex idx = PalIndex::build(word_);
  rich_ = idx.is_rich();
  for (auto c : factor_counts_by_length(word_)) factor_counts_.push_back(c);
  for (auto c : idx.counts_by_length()) palindrome_counts_.push_back(c);
  for (auto c : gamma_counts_by_length(word_)) gamma_counts_.push_back(c);
  closed_cache_.assign(word_.size() + 2, -1);
}

std::uint64_t WordProfile::factor_count(std::size_t n) const { return at_or_zero(factor_counts_, n); }
std::uint64_t WordProfile::palindrome_count(std::size_t n) const { return at_or_zero(palindrome_counts_, n); }
std::uint64_t WordProfile::gamma_count(std::size_t n) const { return at_or_zero(gamma_counts_, n); }

std::uint64_t WordProfile::big_gamma(std::size_t n) const {
  std::uint64_t best = 1;
  for (std::size_t i = 0; i <= std::min(n, length()); ++i) best = std::max(best, gamma_count(i));
  return best;
}

std::uint64_t WordProfile::max_palindrome_count(std::size_t n) const {
  std::uint64_t best = 0;
  for (std::size_t j = 0; j <= std::min(n, length()); ++j) best = std::max(best, palindrome_count(j));
  return best;
}

bool WordProfile::reversal_closed(std::size_t n) const {
  if (n >= closed_cache_.size()) return true;  // F(w,n) is empty
  if (closed_cache_[n] < 0) closed_cache_[n] = is_reversal_closed(factors(word_, n)) ? 1 : 0;
  return closed_cache_[n] == 1;
}

BoundReport check_switch_palindrome_bound(const WordProfile& p, std::size_t n, CheckOptions opts) {
  require_order(n, 3);
  BoundReport r = base_report(BoundId::B1, p, n);
  require_rich(p, opts, r);
  const std::uint64_t g = p.gamma_count(n);
  const std::uint64_t below = p.palindrome_count(n - 2);
  set_exact(r, p.palindrome_count(n), BigInt(2 * g + below));
  r.expression = r.lhs.str() + (r.holds ? " <= " : " > ") + "2*" + std::to_string(g) + "+" + std::to_string(below);
  return r;
}

BoundReport check_upsilon_bound(const WordProfile& p, std::size_t n, const Word& rword, CheckOptions opts) {
  BoundReport r = base_report(BoundId::B2, p, n);
  require_rich(p, opts, r);
  const std::uint64_t q = p.q();
  set_exact(r, upsilon(p.word(), n, rword).size(), BigInt(q * (q - 1)));
  default_expression(r);
  return r;
}

BoundReport check_gamma_palindrome_bound(const WordProfile& p, std::size_t n, CheckOptions opts) {
  require_order(n, 1);
  BoundReport r = base_report(BoundId::B3, p, n);
  require_rich(p, opts, r);
  set_exact(r, p.palindrome_count(n), BigInt(p.q() + 1) * n * p.big_gamma(n));
  default_expression(r);
  return r;
}

BoundReport check_gamma_recursion(const WordProfile& p, std::size_t n, CheckOptions opts) {
  require_order(n, 1);
  BoundReport r = base_report(BoundId::B4, p, n);
  require_rich(p, opts, r);
  const std::uint64_t half = ceil_half(n);
  set_exact(r, p.big_gamma(n), pow_int(p.q(), 5) * half * half * p.big_gamma(half));
  default_expression(r);
  return r;
}

BoundReport check_gamma_closed_form(const WordProfile& p, std::size_t n, CheckOptions opts) {
  require_order(n, 1);
  BoundReport r = base_report(BoundId::B5, p, n);
  require_rich(p, opts, r);
  PowerExpr e;
  e.coef = 1;
  e.base = 4 * pow_int(p.q(), 10) * n;
  e.log_arg = n;
  set_power(r, p.big_gamma(n), e);
  default_expression(r);
  return r;
}

BoundReport check_palindromic_complexity_bound(const WordProfile& p, std::size_t n, CheckOptions opts) {
  require_order(n, 1);
  BoundReport r = base_report(BoundId::B6, p, n);
  require_rich(p, opts, r);
  PowerExpr e;
  e.coef = BigInt(p.q() + 1) * n;
  e.base = 4 * pow_int(p.q(), 10) * n;
  e.log_arg = n;
  set_power(r, p.palindrome_count(n), e);
  default_expression(r);
  return r;
}

BoundReport check_factor_complexity_bound(const WordProfile& p, std::size_t n, CheckOptions opts) {
  require_order(n, 1);
  BoundReport r = base_report(BoundId::B7, p, n);
  require_rich(p, opts, r);
  PowerExpr e;
  e.coef = pow_int(p.q() + 1, 2) * pow_int(n, 4);
  e.base = 4 * pow_int(p.q(), 10) * n;
  e.exp_num = 2;
  e.log_arg = n;
  set_power(r, p.factor_count(n), e);
  default_expression(r);
  return r;
}

BoundReport check_reversal_inequality(const WordProfile& p, std::size_t n) {
  require_order(n, 1);
  require_closed_and_long(p, n);
  BoundReport r = base_report(BoundId::B8, p, n);
  const std::uint64_t pn = p.palindrome_count(n);
  const std::uint64_t pn1 = p.palindrome_count(n + 1);
  const std::uint64_t fn = p.factor_count(n);
  const std::uint64_t fn1 = p.factor_count(n + 1);
  const BigInt rhs = BigInt(fn1) - BigInt(fn) + 2;
  set_exact(r, pn + pn1, rhs);
  if (p.rich()) r.equality = r.lhs == rhs;
  const char* rel = r.lhs == rhs ? " = " : (r.holds ? " <= " : " > ");
  r.expression = std::to_string(pn) + "+" + std::to_string(pn1) + rel + std::to_string(fn1) + "-" +
                 std::to_string(fn) + "+2";
  return r;
}

BoundReport check_factor_vs_palindrome_bound(const WordProfile& p, std::size_t n, CheckOptions opts) {
  require_order(n, 1);
  require_closed_and_long(p, n);
  BoundReport r = base_report(BoundId::B9, p, n);
  require_rich(p, opts, r);
  const std::uint64_t peak = p.max_palindrome_count(n);
  const BigInt m = BigInt(n - 1);
  set_exact(r, p.factor_count(n), 2 * m * peak - 2 * m + p.q());
  r.expression = r.lhs.str() + (r.holds ? " <= " : " > ") + "2*" + m.str() + "*" + std::to_string(peak) +
                 "-2*" + m.str() + "+" + std::to_string(p.q());
  return r;
}

std::array<BoundReport, 2> check_final_bounds(const WordProfile& p, std::size_t n, CheckOptions opts) {
  require_order(n, 1);
  BoundReport r10 = base_report(BoundId::B10, p, n);
  BoundReport r11 = base_report(BoundId::B11, p, n);
  require_rich(p, opts, r10);
  require_rich(p, opts, r11);
  const BigInt lhs = p.factor_count(n);
  const BigInt q = p.q();
  const BigInt base = 8 * pow_int(p.q(), 10) * n;

  PowerExpr e10;
  e10.coef = 2 * BigInt(2 * n - 1) * (q + 1) * 2 * n;
  e10.base = base;
  e10.log_arg = 2 * n;
  e10.addend = -2 * BigInt(2 * n - 1) + q;
  set_power(r10, lhs, e10);
  default_expression(r10);

  PowerExpr e11;
  e11.coef = (q + 1) * 8 * BigInt(n) * n;
  e11.base = base;
  e11.log_arg = 2 * n;
  e11.addend = q;
  set_power(r11, lhs, e11);
  default_expression(r11);
  return {r10, r11};
}

BoundReport check_ceil_product_lemma(std::uint64_t n) {
  require_order(n, 1);
  BoundReport r;
  r.bound_id = BoundId::B12;
  r.n = n;
  r.citation = bound_statement(BoundId::B12);
  BigInt product = 1;
  for (std::uint64_t d = 2; d <= n; d *= 2) product *= (n + d - 1) / d;
  // (2 sqrt n)^(log2 n) = n * n^((1/2) log2 n)
  PowerExpr e;
  e.coef = n;
  e.base = n;
  e.exp_den = 2;
  e.log_arg = n;
  set_power(r, product, e);
  default_expression(r);
  return r;
}

BoundReport check_switch_palindrome_bound(const Word& w, std::size_t n, CheckOptions opts) {
  return check_switch_palindrome_bound(WordProfile(w), n, opts);
}
BoundReport check_upsilon_bound(const Word& w, std::size_t n, const Word& r, CheckOptions opts) {
  return check_upsilon_bound(WordProfile(w), n, r, opts);
}
BoundReport check_gamma_palindrome_bound(const Word& w, std::size_t n, CheckOptions opts) {
  return check_gamma_palindrome_bound(WordProfile(w), n, opts);
}
BoundReport check_gamma_recursion(const Word& w, std::size_t n, CheckOptions opts) {
  return check_gamma_recursion(WordProfile(w), n, opts);
}
BoundReport check_gamma_closed_form(const Word& w, std::size_t n, CheckOptions opts) {
  return check_gamma_closed_form(WordProfile(w), n, opts);
}
BoundReport check_palindromic_complexity_bound(const Word& w, std::size_t n, CheckOptions opts) {
  return check_palindromic_complexity_bound(WordProfile(w), n, opts);
}
BoundReport check_factor_complexity_bound(const Word& w, std::size_t n, CheckOptions opts) {
  return check_factor_complexity_bound(WordProfile(w), n, opts);
}
BoundReport check_reversal_inequality(const Word& w, std::size_t n) {
  return check_reversal_inequality(WordProfile(w), n);
}
BoundReport check_factor_vs_palindrome_bound(const Word& w, std::size_t n, CheckOptions opts) {
  return check_factor_vs_palindrome_bound(WordProfile(w), n, opts);
}
std::array<BoundReport, 2> check_final_bounds(const Word& w, std::size_t n, CheckOptions opts) {
  return check_final_bounds(WordProfile(w), n, opts);
}

TrimGammaPartition diagnostic_trim_gamma_partition(const Word& w, std::size_t n, CheckOptions opts) {
  require_order(n, 3);
  if (!opts.force && !is_rich(w)) {
    throw PreconditionError(PreconditionKind::kNotRich, "partition is defined for rich words only");
  }
  TrimGammaPartition out;
  for (const Word& v : switch_cores(w, n)) {
    if (2 * lpps(v).size() >= v.size()) {
      out.delta_rho.insert(v);
    } else {
      out.delta_lpps.insert(v);
    }
  }
  return out;
}

std::vector<BoundReport> evaluate_bound(const WordProfile& p, BoundId id, CheckOptions opts) {
  std::vector<BoundReport> out;
  const std::size_t len = p.length();
  switch (id) {
    case BoundId::B1:
      for (std::size_t n = 3; n <= len; ++n) out.push_back(check_switch_palindrome_bound(p, n, opts));
      break;
    case BoundId::B2:
      for (std::size_t n = 0; n + 2 <= len; ++n) {
        for (const auto& [r, members] : upsilon_partition(p.word(), n)) {
          BoundReport rep = check_upsilon_bound(p, n, r, opts);
          rep.parameter = to_text(r);
          out.push_back(std::move(rep));
        }
      }
      break;
    case BoundId::B3:
    case BoundId::B4:
    case BoundId::B5:
    case BoundId::B6:
    case BoundId::B7:
      for (std::size_t n = 1; n <= len; ++n) {
        switch (id) {
          case BoundId::B3: out.push_back(check_gamma_palindrome_bound(p, n, opts)); break;
          case BoundId::B4: out.push_back(check_gamma_recursion(p, n, opts)); break;
          case BoundId::B5: out.push_back(check_gamma_closed_form(p, n, opts)); break;
          case BoundId::B6: out.push_back(check_palindromic_complexity_bound(p, n, opts)); break;
          default: out.push_back(check_factor_complexity_bound(p, n, opts)); break;
        }
      }
      break;
    case BoundId::B8:
    case BoundId::B9:
      for (std::size_t n = 1; n + 1 <= len; ++n) {
        if (!p.reversal_closed(n + 1)) continue;
        out.push_back(id == BoundId::B8 ? check_reversal_inequality(p, n)
                                        : check_factor_vs_palindrome_bound(p, n, opts));
      }
      break;
    case BoundId::B10:
    case BoundId::B11:
      for (std::size_t n = 1; n <= len; ++n) {
        out.push_back(check_final_bounds(p, n, opts)[id == BoundId::B10 ? 0 : 1]);
      }
      break;
    case BoundId::B12:
      for (std::size_t n = 1; n <= len; ++n) out.push_back(check_ceil_product_lemma(n));
      break;
  }
  return out;
}

double slack(const BoundReport& r) {
  const double lhs = r.lhs.convert_to<double>();
  if (r.rhs_exact) return (r.rhs_value - r.lhs).convert_to<double>();
  return std::exp2(r.rhs_log2) - lhs;
}

void to_json(nlohmann::json& j, const BoundReport& r) {
  j = nlohmann::json{{"bound_id", to_string(r.bound_id)},
                     {"word_length", r.word_length},
                     {"n", r.n},
                     {"q", r.q},
                     {"lhs", r.lhs.str()},
                     {"rhs_exact", r.rhs_exact},
                     {"rhs_log2", std::isfinite(r.rhs_log2) ? nlohmann::json(r.rhs_log2) : nlohmann::json(nullptr)},
                     {"holds", r.holds},
                     {"covered", r.covered},
                     {"escalated", r.escalated},
                     {"expression", r.expression},
                     {"citation", r.citation}};
  if (r.rhs_exact) j["rhs"] = r.rhs_value.str();
  if (r.equality) j["equality"] = *r.equality;
  if (!r.parameter.empty()) j["parameter"] = r.parameter;
}

void from_json(const nlohmann::json& j, BoundReport& r) {
  r = BoundReport{};
  r.bound_id = parse_bound_id(j.at("bound_id").get<std::string>());
  r.word_length = j.at("word_length").get<std::size_t>();
  r.n = j.at("n").get<std::size_t>();
  r.q = j.at("q").get<unsigned>();
  r.lhs = BigInt(j.at("lhs").get<std::string>());
  r.rhs_exact = j.at("rhs_exact").get<bool>();
  if (r.rhs_exact) r.rhs_value = BigInt(j.at("rhs").get<std::string>());
  r.rhs_log2 = j.at("rhs_log2").is_null() ? -std::numeric_limits<double>::infinity()
                                          : j.at("rhs_log2").get<double>();
  r.holds = j.at("holds").get<bool>();
  r.covered = j.at("covered").get<bool>();
  r.escalated = j.at("escalated").get<bool>();
  r.expression = j.at("expression").get<std::string>();
  r.citation = j.at("citation").get<std::string>();
  if (j.contains("equality")) r.equality = j.at("equality").get<bool>();
  if (j.contains("parameter")) r.parameter = j.at("parameter").get<std::string>();
}

}  // namespace richlab
