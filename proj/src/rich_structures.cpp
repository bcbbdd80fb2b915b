#include "richlab/rich_structures.hpp"

#include <algorithm>
#include <queue>

#include "richlab/palindromic_index.hpp"

namespace richlab {

std::set<Word> complete_returns(const Word& w, const Word& u) {
  if (u.empty()) throw std::invalid_argument("complete_returns: u must be nonempty");
  std::set<Word> out;
  if (u.size() > w.size()) return out;
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
    if (std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) occ.push_back(i);
  }
  for (std::size_t j = 1; j < occ.size(); ++j) {
    out.insert(w.factor(occ[j - 1], occ[j] - occ[j - 1] + u.size()));
  }
  return out;
}

std::set<SwitchRecord> gamma(const Word& w, std::size_t n) {
  std::set<SwitchRecord> out;
  if (n <= 2 || n > w.size()) return out;
  const PalindromeTable pal(w);
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    const Symbol a = w[i];
    const Symbol b = w[i + n - 1];
    if (a != b && pal.is_palindrome(i + 1, n - 2)) out.insert({a, w.factor(i + 1, n - 2), b});
  }
  return out;
}

std::vector<std::size_t> gamma_counts_by_length(const Word& w) {
  const std::size_t len = w.size();
  std::vector<std::set<Word>> seen(len + 1);
  // Centre 2c covers the odd palindromes around w[c], centre 2c+1 the even
  // ones between w[c] and w[c+1].
  for (std::size_t centre = 0; centre + 1 < 2 * len; ++centre) {
    std::size_t lo = centre / 2;
    std::size_t hi = (centre + 1) / 2;
    if (lo != hi && w[lo] != w[hi]) {
      // empty core; switches of length 2 do not count
      continue;
    }
    while (lo > 0 && hi + 1 < len && w[lo - 1] == w[hi + 1]) {
      --lo;
      ++hi;
    }
    if (lo == 0 || hi + 1 == len) continue;
    const std::size_t n = hi - lo + 3;
    seen[n].insert(w.factor(lo - 1, n));
  }
  std::vector<std::size_t> counts(len + 1, 0);
  for (std::size_t n = 3; n <= len; ++n) counts[n] = seen[n].size();
  return counts;
}

std::set<SwitchPair> gamma_bar(const Word& w, std::size_t n) {
  std::set<SwitchPair> out;
  for (const auto& s : gamma(w, n)) {
    out.insert({s.u, s.a});
    out.insert({s.u, s.b});
  }
  return out;
}

std::set<Word> switch_cores(const Word& w, std::size_t n) {
  std::set<Word> out;
  for (const auto& s : gamma(w, n)) out.insert(s.u);
  return out;
}

std::map<Word, std::set<Word>> upsilon_partition(const Word& w, std::size_t n) {
  std::map<Word, std::set<Word>> out;
  for (const auto& u : switch_cores(w, n + 2)) out[lpps(u)].insert(u);
  return out;
}

std::set<Word> upsilon(const Word& w, std::size_t n, const Word& r) {
  auto parts = upsilon_partition(w, n);
  auto it = parts.find(r);
  return it == parts.end() ? std::set<Word>{} : it->second;
}

std::size_t big_gamma(const Word& w, std::size_t n) {
  std::size_t best = 1;
  for (std::size_t i = 3; i <= std::min(n, w.size()); ++i) best = std::max(best, gamma(w, i).size());
  return best;
}

RhoResult rho_build(const Word& u, const Word& v) {
  if (!is_palindrome(u) || !is_palindrome(v)) {
    throw RhoPreconditionError(RhoError::kNotPalindrome, "rho_build: u and v must be palindromes");
  }
  if (u.size() > v.size() || !std::equal(u.begin(), u.end(), v.begin())) {
    throw RhoPreconditionError(RhoError::kNotPrefix, "rho_build: u must be a prefix of v");
  }
  if (2 * u.size() < v.size() || u.size() >= v.size()) {
    throw RhoPreconditionError(RhoError::kLengthWindow, "rho_build: need |v|/2 <= |u| < |v|");
  }
  RhoResult r;
  r.v_length = v.size();
  r.center = (v.size() + 1) / 2;
  r.u_even = u.size() % 2 == 0;
  r.k = r.u_even ? u.size() / 2 + 1 : (u.size() + 1) / 2;
  // 1-based v[k, center]
  r.rho_bar = v.factor(r.k - 1, r.center - r.k + 1);
  Word left = reverse(r.rho_bar);
  r.rho = r.u_even ? concat(left, r.rho_bar) : concat(left, r.rho_bar.factor(1, r.rho_bar.size() - 1));
  return r;
}

Word rho_invert(const Word& rho, std::size_t v_length) {
  if (rho.empty() || !is_palindrome(rho)) {
    throw RhoPreconditionError(RhoError::kNotPalindrome, "rho_invert: rho must be a nonempty palindrome");
  }
  const bool u_even = rho.size() % 2 == 0;
  const std::size_t bar_len = u_even ? rho.size() / 2 : (rho.size() + 1) / 2;
  const std::size_t center = (v_length + 1) / 2;
  if (bar_len > center) {
    throw RhoPreconditionError(RhoError::kInconsistent, "rho_invert: rho too long for |v|");
  }
  const std::size_t k = center - bar_len + 1;
  const std::size_t u_len = u_even ? 2 * k - 2 : 2 * k - 1;
  if (u_len == 0 || 2 * u_len < v_length || u_len >= v_length) {
    throw RhoPreconditionError(RhoError::kInconsistent, "rho_invert: no prefix length fits |v|");
  }

  // 1-based positions; v[k..center] is the right half of rho.
  std::vector<Symbol> v(v_length + 1, 0);
  const std::size_t bar_start = rho.size() - bar_len;
  for (std::size_t i = 0; i < bar_len; ++i) v[k + i] = rho[bar_start + i];
  // Positions left of k fold onto [k, center] through the prefix palindrome
  // and then, if needed, through v itself; both images lie to the right.
  for (std::size_t j = k - 1; j >= 1; --j) {
    std::size_t i = mirror(u_len, j);
    if (i > center) i = mirror(v_length, i);
    v[j] = v[i];
  }
  for (std::size_t j = center + 1; j <= v_length; ++j) v[j] = v[mirror(v_length, j)];

  Word out(std::vector<Symbol>(v.begin() + 1, v.end()), rho.alphabet_size());
  const Word u = out.factor(0, u_len);
  if (!is_palindrome(u) || !is_palindrome(out) || rho_build(u, out).rho != rho) {
    throw RhoPreconditionError(RhoError::kInconsistent, "rho_invert: rho does not arise from any (u, v)");
  }
  return out;
}

Word palindromic_closure(const Word& w) {
  if (w.empty()) return w;
  const std::size_t p = w.size() - lps(w).size();
  return concat(w, reverse(w.factor(0, p)));
}

Word sentinel_augment(const Word& w) {
  const unsigned q = w.alphabet_size();
  if (q >= kMaxAlphabetSize) throw std::invalid_argument("sentinel_augment: no free symbol left");
  Word out = w.with_alphabet(q + 1);
  out.push_back(static_cast<Symbol>(q));
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) out.push_back(*it);
  return out;
}

std::size_t RauzyGraph::vertex_index(const Word& u) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), u);
  if (it == vertices.end() || *it != u) throw std::out_of_range("not a vertex");
  return static_cast<std::size_t>(it - vertices.begin());
}

RauzyGraph rauzy_graph(const Word& w, std::size_t n) {
  if (n < 1 || w.size() < n + 1) throw std::invalid_argument("rauzy_graph: need n >= 1 and |w| >= n+1");
  RauzyGraph g;
  g.order = n;
  const FactorSet fn = factors(w, n);
  g.vertices.assign(fn.factors.begin(), fn.factors.end());
  for (const Word& e : factors(w, n + 1).factors) {
    g.edges.emplace_back(g.vertex_index(e.factor(0, n)), g.vertex_index(e.factor(1, n)));
  }
  return g;
}

namespace {

std::size_t reachable_from_zero(std::size_t count, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<bool> seen(count, false);
  std::queue<std::size_t> todo;
  seen[0] = true;
  todo.push(0);
  std::size_t visited = 1;
  while (!todo.empty()) {
    const std::size_t x = todo.front();
    todo.pop();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++visited;
        todo.push(y);
      }
    }
  }
  return visited;
}

}  // namespace

bool is_strongly_connected(const RauzyGraph& g) {
  const std::size_t count = g.vertices.size();
  if (count == 0) return true;
  std::vector<std::vector<std::size_t>> fwd(count), bwd(count);
  for (auto [from, to] : g.edges) {
    fwd[from].push_back(to);
    bwd[to].push_back(from);
  }
  return reachable_from_zero(count, fwd) == count && reachable_from_zero(count, bwd) == count;
}

}  // namespace richlab
